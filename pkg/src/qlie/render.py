"""Text and LaTeX printers.

The text form is the input grammar of :mod:`qlie.parser`, so rendered
scalars, algebra elements and vectors parse back to the same value.
Ordering is deterministic: Laurent terms by descending exponent,
monomials by lexicographic (a, b, c).
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["render", "render_scalar", "render_series"]

_BASIS_TEXT = ("Xp_h", "Xm_h", "H_h")
_BASIS_LATEX = ("X^+_h", "X^-_h", "H_h")


def _join(parts):
    out = ""
    for p in parts:
        if not out:
            out = p
        elif p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


# --- text -------------------------------------------------------------------

def _coeff_text(c):
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _term_text(c, e, var="q"):
    if e == 0:
        return _coeff_text(c)
    pw = var if e == 1 else f"{var}^{e}"
    if c == 1:
        return pw
    if c == -1:
        return "-" + pw
    if c.denominator == 1:
        return f"{c.numerator}{pw}"
    return f"{_coeff_text(c)} {pw}"


def _poly_text(terms):
    if not terms:
        return "0"
    return _join(_term_text(Fraction(terms[e]), e) for e in sorted(terms, reverse=True))


def _ratfunc_text(r):
    num = r.numerator_terms()
    ntext = _poly_text(num)
    if r.is_laurent():
        return ntext
    dtext = _poly_text(r.denominator_terms())
    if len(num) > 1:
        ntext = f"({ntext})"
    return f"{ntext}/({dtext})"


def _is_simple(text):
    return " + " not in text and " - " not in text and "/" not in text


def _scalar_text(x):
    a, b = x.a, x.b
    parts = []
    if not a.is_zero():
        parts.append(_ratfunc_text(a))
    if not b.is_zero():
        bt = _ratfunc_text(b)
        if bt == "1":
            parts.append("s")
        elif bt == "-1":
            parts.append("-s")
        elif _is_simple(bt) or (len(b.numerator_terms()) == 1 and b.is_laurent()):
            parts.append(f"{bt} s")
        else:
            parts.append(f"({bt}) s")
    return _join(parts) if parts else "0"


def _mono_text(mono):
    a, b, c = mono
    parts = []
    for sym, p in (("F", a), ("K", b), ("E", c)):
        if p == 1:
            parts.append(sym)
        elif p:
            parts.append(f"{sym}^{p}")
    return " ".join(parts) or "1"


def _scaled_text(coeff, symbol):
    """``coeff * symbol`` with sign pulled out where that stays parseable."""
    ct = _scalar_text(coeff)
    if symbol == "1":
        return ct
    if ct == "1":
        return symbol
    if ct == "-1":
        return "-" + symbol
    if not _is_simple(ct):
        ct = f"({ct})"
    return f"{ct} * {symbol}"


def _alg_text(x):
    if x.is_zero():
        return "0"
    return _join(_scaled_text(c, _mono_text(m)) for m, c in x.items())


def _vector_text(v):
    parts = [
        _scaled_text(c, name) for c, name in zip(v.coords, _BASIS_TEXT) if not c.is_zero()
    ]
    return _join(parts) if parts else "0"


# --- latex -------------------------------------------------------------------

def _frac_latex(c):
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return f"{sign}\\tfrac{{{abs(c.numerator)}}}{{{c.denominator}}}"


def _term_latex(c, e):
    if e == 0:
        return _frac_latex(c)
    pw = "q" if e == 1 else f"q^{{{e}}}"
    if c == 1:
        return pw
    if c == -1:
        return "-" + pw
    return f"{_frac_latex(c)}{pw}"


def _poly_latex(terms):
    if not terms:
        return "0"
    parts = [_term_latex(Fraction(terms[e]), e) for e in sorted(terms, reverse=True)]
    out = ""
    for p in parts:
        if not out:
            out = p
        elif p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


def _ratfunc_latex(r):
    n = _poly_latex(r.numerator_terms())
    if r.is_laurent():
        return n
    return f"\\frac{{{n}}}{{{_poly_latex(r.denominator_terms())}}}"


_S_LATEX = r"\sqrt{\tfrac{2}{q+q^{-1}}}"


def _scalar_latex(x):
    parts = []
    if not x.a.is_zero():
        parts.append(_ratfunc_latex(x.a))
    if not x.b.is_zero():
        bt = _ratfunc_latex(x.b)
        if bt == "1":
            parts.append(_S_LATEX)
        elif bt == "-1":
            parts.append("-" + _S_LATEX)
        else:
            parts.append(f"\\left({bt}\\right){_S_LATEX}")
    if not parts:
        return "0"
    return _join(parts)


def _scaled_latex(coeff, symbol):
    ct = _scalar_latex(coeff)
    if ct == "1":
        return symbol
    if ct == "-1":
        return "-" + symbol
    if " + " in ct or " - " in ct:
        ct = f"\\left({ct}\\right)"
    return f"{ct}\\,{symbol}"


def _mono_latex(mono):
    a, b, c = mono
    parts = []
    for sym, p in (("F", a), ("K", b), ("E", c)):
        if p == 1:
            parts.append(sym)
        elif p:
            parts.append(f"{sym}^{{{p}}}")
    return " ".join(parts) or "1"


def _vector_latex(v):
    parts = [
        _scaled_latex(c, name) for c, name in zip(v.coords, _BASIS_LATEX) if not c.is_zero()
    ]
    return _join(parts) if parts else "0"


def _table_latex(t):
    lines = [r"\begin{array}{c|ccc}", r"[\cdot,\cdot]_h & " + " & ".join(_BASIS_LATEX) + r" \\ \hline"]
    for i, name in enumerate(_BASIS_LATEX):
        row = " & ".join(_vector_latex(t[i, j]) for j in range(3))
        lines.append(f"{name} & {row} \\\\")
    lines.append(r"\end{array}")
    return "\n".join(lines)


def _table_text(t):
    lines = []
    for i, a in enumerate(_BASIS_TEXT):
        for j, b in enumerate(_BASIS_TEXT):
            lines.append(f"[{a}, {b}]_h = {_vector_text(t[i, j])}")
    return "\n".join(lines)


def render_series(series, style="text"):
    terms = []
    for k, c in enumerate(series.coeffs):
        if not c:
            continue
        if style == "latex":
            terms.append(_term_latex(c, k).replace("q", "h"))
        else:
            terms.append(_term_text(c, k, var="h"))
    body = _join(terms) if terms else "0"
    n = series.order + 1
    if style == "latex":
        return f"{body} + O(h^{{{n}}})"
    return f"{body} + O(h^{n})"


def render_scalar(x, style="text"):
    if style == "latex":
        return _scalar_latex(x)
    return _scalar_text(x)


def render(x, style="text"):
    """Render a scalar, algebra element, vector, table or series."""
    from .core import QLieVector, StructureTable
    from .pbw import AlgElement
    from .qcoeff import ExtScalar, HSeries, RatFuncQ, scalar

    if style == "json":
        from .documents import to_json

        return to_json(x)
    if style not in ("text", "latex"):
        raise ValueError(f"unknown style {style!r}")
    latex = style == "latex"
    if isinstance(x, (ExtScalar, RatFuncQ, int, Fraction)):
        return render_scalar(scalar(x), style)
    if isinstance(x, AlgElement):
        if latex:
            if x.is_zero():
                return "0"
            return _join(_scaled_latex(c, _mono_latex(m)) for m, c in x.items())
        return _alg_text(x)
    if isinstance(x, QLieVector):
        return _vector_latex(x) if latex else _vector_text(x)
    if isinstance(x, StructureTable):
        return _table_latex(x) if latex else _table_text(x)
    if isinstance(x, HSeries):
        return render_series(x, style)
    raise TypeError(f"cannot render {type(x).__name__}")
