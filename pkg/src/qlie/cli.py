"""Command line interface: ``qlie <subcommand> ...``.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
input errors.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .core import bracket, structure_table, twisted_embedding
from .documents import parse_scalar, representation_from_json, table_document
from .errors import ClosureError, QLieError
from .parser import evaluate, to_adword
from .pbw import E, F, K, ad_apply, casimir, commutator
from .qcoeff import h_series
from .render import render
from .rep import builtin_rep2, verify_representation
from .verify import SUITES, run_suite

FORMATS = ("text", "latex", "json")


def _twist(text):
    if text is None:
        return (1,)
    return tuple(parse_scalar(part.strip()) for part in text.split(","))


def _embedding(args):
    return twisted_embedding(_twist(args.twist))


def cmd_normalize(args):
    print(render(evaluate(args.expr, "algebra"), args.format))
    return 0


def cmd_multiply(args):
    out = evaluate(args.exprs[0], "algebra")
    for text in args.exprs[1:]:
        out = out * evaluate(text, "algebra")
    print(render(out, args.format))
    return 0


def cmd_bracket(args):
    a = evaluate(args.a, "qlie")
    b = evaluate(args.b, "qlie")
    print(render(bracket(a, b, _embedding(args)), args.format))
    return 0


def cmd_ad(args):
    w = to_adword(args.word)
    x = evaluate(args.expr, "algebra")
    print(render(ad_apply(w, x), args.format))
    return 0


def cmd_table(args):
    t = structure_table(_embedding(args))
    if args.format == "json":
        print(table_document(t, series_order=args.series).dumps())
    else:
        print(render(t, args.format))
        if args.series is not None:
            for (i, j, k), c in t.constants():
                if not c.is_zero():
                    print(f"  ({i},{j},{k}): {render(h_series(c, args.series), args.format)}")
    return 0


def cmd_casimir_check(args):
    c = casimir()
    results = {name: commutator(c, g) for name, g in (("E", E), ("F", F), ("K", K))}
    ok = all(v.is_zero() for v in results.values())
    if args.format == "json":
        print(json.dumps({"casimir": render(c), "passed": ok,
                          "commutators": {k: render(v) for k, v in results.items()}}, indent=2))
    else:
        print(f"C = {render(c)}")
        for name, v in results.items():
            print(f"[C, {name}] = {render(v)}")
        print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_series(args):
    x = evaluate(args.expr, "scalar")
    print(render(h_series(x, args.order), "json" if args.format == "json" else args.format))
    return 0


def cmd_rep_check(args):
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            r = representation_from_json(fh.read())
    else:
        r = builtin_rep2()
    report = verify_representation(r, structure_table(_embedding(args)))
    if args.format == "json":
        print(json.dumps({
            "passed": report.passed,
            "pairs": [
                {"pair": list(p.pair), "passed": p.passed} for p in report.pairs
            ],
            "involution_failures": [[i + 1, j + 1] for i, j in report.involution_failures],
            "q_linear": report.linearity_ok,
        }, indent=2))
    else:
        for p in report.pairs:
            line = f"[{p.pair[0]}, {p.pair[1]}]: {'pass' if p.passed else 'FAIL'}"
            if not p.passed:
                line += f"\n  q-commutator: {_mat_text(p.qcommutator)}\n  expected:     {_mat_text(p.expected)}"
            print(line)
        print(f"conjugation involution: {'pass' if not report.involution_failures else 'FAIL'}")
        print(f"conjugation q-linear: {'pass' if report.linearity_ok else 'FAIL'}")
    return 0 if report.passed else 1


def _mat_text(m):
    return "[" + "; ".join(", ".join(render(x) for x in row) for row in m) + "]"


def cmd_verify(args):
    report = run_suite(args.suite, args.seed, args.cases)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        for c in report.checks:
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}")
            if not c.passed:
                print(f"      {json.dumps(c.witness)}")
        print(f"{'all checks passed' if report.passed else 'verification FAILED'}")
    return 0 if report.passed else 1


def build_parser():
    p = argparse.ArgumentParser(prog="qlie", description="Quantum Lie algebra (sl2)_h toolkit")
    p.add_argument("--version", action="version", version=f"qlie {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, fmt=True, twist=False):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        if fmt:
            sp.add_argument("--format", choices=FORMATS, default="text")
        if twist:
            sp.add_argument("--twist", help="comma separated coefficients of p(C), summing to 1")
        return sp

    sp = add("normalize", cmd_normalize, "normal-order an algebra expression")
    sp.add_argument("expr")
    sp = add("multiply", cmd_multiply, "multiply algebra expressions left to right")
    sp.add_argument("exprs", nargs="+")
    sp = add("bracket", cmd_bracket, "quantum Lie bracket of two (sl2)_h elements", twist=True)
    sp.add_argument("a")
    sp.add_argument("b")
    sp = add("ad", cmd_ad, "apply the adjoint action of a word to an element")
    sp.add_argument("word", help='e.g. "s K^-1 E"; letters E F K Kinv H')
    sp.add_argument("expr")
    sp = add("table", cmd_table, "structure constant table", twist=True)
    sp.add_argument("--series", type=int, metavar="ORDER", help="include h-series views")
    add("casimir-check", cmd_casimir_check, "check that the Casimir element is central")
    sp = add("series", cmd_series, "expand a scalar in h with q = e^h")
    sp.add_argument("expr")
    sp.add_argument("--order", type=int, default=8)
    sp = add("rep-check", cmd_rep_check, "verify a representation against the table", twist=True)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--builtin2", action="store_true", help="the built-in 2-dim representation")
    g.add_argument("--file", help="representation JSON document")
    sp = add("verify", cmd_verify, "run verification suites")
    sp.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    sp.add_argument("--seed", type=int, default=7)
    sp.add_argument("--cases", type=int, default=200)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ClosureError as exc:
        print(f"error: {exc}\nresidual: {render(exc.residual)}", file=sys.stderr)
        return 1
    except (QLieError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
