"""Verification suites run by ``qlie verify``.

Each suite returns a list of :class:`Check` records; a suite passes when
every check does.  Random cases come from one seeded generator per suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import core
from .core import (
    BASIS,
    BASIS_NAMES,
    bracket,
    check_qantisymmetry,
    classical_limit,
    standard_embedding,
    structure_table,
    twisted_embedding,
)
from .errors import ClosureError, QLieError
from .pbw import E, F, K, casimir, commutator
from .qcoeff import h_series
from .render import render
from .rep import builtin_rep2, classical_rep, classical_table, verify_representation
from .sampling import random_vector, rng_for

__all__ = ["Check", "SuiteReport", "run_suite", "SUITES", "TWISTS", "corrupt_rep"]

TWISTS = ((1,), (0, 1), (Fraction(1, 2), Fraction(1, 2)), (-1, 2))


@dataclass
class Check:
    name: str
    passed: bool
    witness: dict = field(default_factory=dict)

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "witness": self.witness}


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases: int
    checks: list

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_dict(self):
        return {
            "suite": self.suite,
            "seed": self.seed,
            "cases": self.cases,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _golden_check():
    got = structure_table()
    want = core.expected_table()
    bad = [
        f"[{BASIS_NAMES[i]}, {BASIS_NAMES[j]}]"
        for i, j in product(range(3), repeat=2)
        if got[i, j] != want[i, j]
    ]
    witness = {"mismatched": bad}
    if bad:
        witness["computed"] = {
            f"[{BASIS_NAMES[i]}, {BASIS_NAMES[j]}]": render(got[i, j]) for i, j in product(range(3), repeat=2)
        }
    return Check("table matches published relations", not bad, witness)


def _closure_checks(e, label, rng, cases):
    failures = []
    pairs = [(a, b) for a, b in product(BASIS, repeat=2)]
    pairs += [(random_vector(rng), random_vector(rng)) for _ in range(cases)]
    for a, b in pairs:
        try:
            bracket(a, b, e)
        except ClosureError as exc:
            failures.append({"a": render(a), "b": render(b), "residual": render(exc.residual)})
            break
    return Check(f"closure ({label}, {len(pairs)} pairs)", not failures, {"failures": failures})


def _casimir_check():
    c = casimir()
    bad = {name: render(commutator(c, g)) for name, g in (("E", E), ("F", F), ("K", K))}
    bad = {k: v for k, v in bad.items() if v != "0"}
    return Check("Casimir is central", not bad, {"nonzero_commutators": bad})


def suite_closure(rng, cases):
    checks = [_golden_check(), _casimir_check()]
    for p in TWISTS:
        label = "twist [" + ", ".join(str(x) for x in p) + "]"
        checks.append(_closure_checks(twisted_embedding(p), label, rng, cases))
    return checks


def suite_antisym(rng, cases):
    e = standard_embedding()
    failures = []
    pairs = list(product(BASIS, repeat=2))
    pairs += [(random_vector(rng), random_vector(rng)) for _ in range(cases)]
    for a, b in pairs:
        rep = check_qantisymmetry(a, b, e)
        if not rep.passed:
            failures.append(
                {"a": render(a), "b": render(b), "left": render(rep.left), "right": render(rep.right)}
            )
    return [Check(f"q-antisymmetry ({len(pairs)} pairs)", not failures, {"failures": failures[:5]})]


def suite_twist(rng, cases):
    base = core.expected_table()
    checks = []
    for p in TWISTS:
        t = structure_table(twisted_embedding(p))
        label = "[" + ", ".join(str(x) for x in p) + "]"
        checks.append(Check(f"twist {label} gives the same table", t == base, {"table": render(t)}))
    return checks


def corrupt_rep(r):
    """Copy of ``r`` with pi(H_h)[1, 1] sign-flipped; used as a mutation test."""
    from .rep import Representation

    h = r.images[2].copy()
    h[1, 1] = -h[1, 1]
    return Representation(r.n, (r.images[0], r.images[1], h), r.conj)


def suite_rep(rng, cases):
    r = builtin_rep2()
    t = structure_table()
    rep = verify_representation(r, t, rng)
    checks = [
        Check(
            "2-dim representation reproduces all nine brackets",
            all(p.passed for p in rep.pairs),
            {"failed_pairs": [list(p) for p in rep.failed_pairs]},
        ),
        Check(
            "matrix q-conjugation is an involution",
            not rep.involution_failures,
            {"failing_units": [[i + 1, j + 1] for i, j in rep.involution_failures]},
        ),
        Check("matrix q-conjugation is q-linear", rep.linearity_ok),
    ]
    bad = verify_representation(corrupt_rep(r), t, rng)
    checks.append(
        Check(
            "corrupted representation is rejected",
            not bad.passed and ("Xp_h", "Xm_h") in bad.failed_pairs,
            {"failed_pairs": [list(p) for p in bad.failed_pairs]},
        )
    )
    rc = classical_rep(r)
    cl = verify_representation(rc, classical_table(t), rng)
    checks.append(
        Check(
            "q=1 representation realises brackets as plain commutators",
            cl.passed and rc.conj.is_identity(),
            {"failed_pairs": [list(p) for p in cl.failed_pairs]},
        )
    )
    return checks


def suite_classical(rng, cases):
    t = structure_table()
    lim = classical_limit(t)
    checks = [
        Check("q=1 limit equals sl2 relations", lim.matches_sl2, {"failures": lim.failures}),
        Check("q=1 limit is antisymmetric", lim.antisymmetric),
        Check("q=1 limit satisfies Jacobi", lim.jacobi),
    ]
    bad = []
    for (i, j, k), c in t.constants():
        if h_series(c, 4)[0] != lim.constants[i][j][k]:
            bad.append([BASIS_NAMES[i], BASIS_NAMES[j], BASIS_NAMES[k]])
    checks.append(Check("order-0 h-series equal classical constants", not bad, {"mismatched": bad}))
    hh = t[2, 2].zero
    checks.append(
        Check(
            "[H_h, H_h]_h is not antisymmetric before the limit",
            not hh.is_zero() and lim.constants[2][2][2] == 0,
            {"constant": render(hh)},
        )
    )
    return checks


SUITES = {
    "closure": suite_closure,
    "antisym": suite_antisym,
    "twist": suite_twist,
    "rep": suite_rep,
    "classical": suite_classical,
}


def run_suite(name="all", seed=7, cases=200):
    names = list(SUITES) if name == "all" else [name]
    checks = []
    for n in names:
        if n not in SUITES:
            raise ValueError(f"unknown suite {n!r}; expected one of {sorted(SUITES)} or 'all'")
        rng = rng_for(seed)
        try:
            checks.extend(SUITES[n](rng, cases))
        except QLieError as exc:
            checks.append(Check(f"{n} suite raised", False, {"error": str(exc)}))
    return SuiteReport(name, seed, cases, checks)
