"""Exact scalars: rational functions in q with one adjoined square root.

The coefficient field is Q(q)(s) where s**2 == 2/(q + 1/q).  Every value
is kept in a canonical form so that equality is plain structural
comparison:

* a :class:`RatFuncQ` is ``q**lo * N(q) / D(q)`` with ``N`` and ``D``
  coprime polynomials, ``N(0) != 0``, ``D(0) != 0`` and ``D`` a primitive
  integer polynomial with positive leading coefficient;
* an :class:`ExtScalar` is ``a + b*s`` with ``a``, ``b`` canonical
  :class:`RatFuncQ` values.

Truncated power series in ``h`` (with ``q = exp(h)``) are available as a
view through :func:`h_series`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from flint import fmpq, fmpq_poly, fmpz_poly

from .errors import DivisionByZero, PoleError

__all__ = [
    "RatFuncQ",
    "ExtScalar",
    "HSeries",
    "arith",
    "qconj",
    "eval_q1",
    "h_series",
    "Q",
    "S",
    "ONE",
    "ZERO",
    "scalar",
]


# --- polynomial layer (python-flint) -----------------------------------------

def _qpoly(coeffs):
    return fmpq_poly([fmpq(c.numerator, c.denominator) if isinstance(c, Fraction) else c for c in coeffs])


def _to_fraction(x):
    return Fraction(int(x.p), int(x.q))


def _valuation(p):
    """Largest k with q**k dividing p (p nonzero)."""
    coeffs = p.coeffs()
    k = 0
    while not coeffs[k]:
        k += 1
    return k


def _shift_down(p, k):
    return fmpq_poly(p.coeffs()[k:]) if k else p


_FONE = fmpq_poly([1])


class RatFuncQ:
    """Canonical rational function ``q**lo * num(q) / den(q)`` over Q.

    ``num`` is an ``fmpq_poly`` and ``den`` an ``fmpz_poly``; both have a
    nonzero constant term, they are coprime, and ``den`` is primitive with
    positive leading coefficient.
    """

    __slots__ = ("lo", "num", "den", "_key")

    def __init__(self, lo, num, den):
        # trusted constructor; use RatFuncQ.make for arbitrary input
        self.lo = lo
        self.num = num
        self.den = den
        self._key = None

    @classmethod
    def make(cls, lo, num, den=None):
        if not isinstance(num, fmpq_poly):
            num = _qpoly(num)
        if num == 0:
            return _RZERO
        if den is None:
            den = _FONE
        elif not isinstance(den, fmpq_poly):
            den = fmpq_poly(den) if isinstance(den, fmpz_poly) else _qpoly(den)
        if den == 0:
            raise DivisionByZero("rational function with zero denominator")
        k = _valuation(num)
        if k:
            num = _shift_down(num, k)
            lo += k
        k = _valuation(den)
        if k:
            den = _shift_down(den, k)
            lo -= k
        if den.degree() > 0:
            g = num.gcd(den)
            if g.degree() > 0:
                num = num // g
                den = den // g
        # scale den to a primitive integer polynomial, positive leading coeff
        dz = den.numer()
        c = dz.content()
        if dz.coeffs()[-1] < 0:
            c = -c
        factor = fmpq(den.denom(), 1) / c
        if factor != 1:
            num = num * factor
            dz = fmpz_poly([x // c for x in dz.coeffs()])
        return cls(lo, num, dz)

    @classmethod
    def from_int(cls, n):
        return cls.make(0, fmpq_poly([n]))

    @classmethod
    def q_power(cls, e, coeff=1):
        return cls.make(e, [Fraction(coeff)])

    @classmethod
    def from_laurent(cls, terms):
        """Build from a mapping ``{exponent: coefficient}``."""
        terms = {e: Fraction(c) for e, c in terms.items() if c}
        if not terms:
            return _RZERO
        lo = min(terms)
        num = [Fraction(0)] * (max(terms) - lo + 1)
        for e, c in terms.items():
            num[e - lo] = c
        return cls.make(lo, num)

    # -- inspection --

    def is_zero(self):
        return self.num == 0

    def is_laurent(self):
        return self.den == 1

    def numerator_terms(self):
        """``{exponent: coefficient}`` of the Laurent numerator, as Fractions."""
        return {self.lo + i: _to_fraction(c) for i, c in enumerate(self.num.coeffs()) if c}

    def denominator_terms(self):
        return {i: int(c) for i, c in enumerate(self.den.coeffs()) if c}

    def key(self):
        if self._key is None:
            self._key = (
                self.lo,
                tuple(_to_fraction(c) for c in self.num.coeffs()),
                tuple(int(c) for c in self.den.coeffs()),
            )
        return self._key

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFuncQ.make(0, [Fraction(other)])
        if not isinstance(other, RatFuncQ):
            return NotImplemented
        return self.lo == other.lo and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"RatFuncQ(lo={self.lo}, num={self.num}, den={self.den})"

    # -- arithmetic --

    def __neg__(self):
        if self.num == 0:
            return self
        return RatFuncQ(self.lo, -self.num, self.den)

    def __add__(self, other):
        if self.num == 0:
            return other
        if other.num == 0:
            return self
        lo = min(self.lo, other.lo)
        a = self.num if self.lo == lo else self.num * _xpow(self.lo - lo)
        b = other.num if other.lo == lo else other.num * _xpow(other.lo - lo)
        if self.den == other.den:
            if self.den == 1:
                return RatFuncQ.make(lo, a + b, None)
            return RatFuncQ.make(lo, a + b, fmpq_poly(self.den))
        num = a * fmpq_poly(other.den) + b * fmpq_poly(self.den)
        return RatFuncQ.make(lo, num, fmpq_poly(self.den * other.den))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.num == 0 or other.num == 0:
            return _RZERO
        if self.den == 1 and other.den == 1:
            return RatFuncQ(self.lo + other.lo, self.num * other.num, self.den)
        return RatFuncQ.make(
            self.lo + other.lo,
            self.num * other.num,
            fmpq_poly(self.den * other.den),
        )

    def inverse(self):
        if self.num == 0:
            raise DivisionByZero("division by zero scalar")
        return RatFuncQ.make(-self.lo, fmpq_poly(self.den), self.num)

    def __truediv__(self, other):
        return self * other.inverse()

    # -- maps --

    def qconj(self):
        """Substitute q -> 1/q."""
        if self.num == 0:
            return self
        lo = -(self.lo + self.num.degree()) + self.den.degree()
        return RatFuncQ.make(
            lo, fmpq_poly(self.num.coeffs()[::-1]), fmpq_poly(self.den.coeffs()[::-1])
        )

    def eval_q1(self):
        d = self.den(1)
        if d == 0:
            raise PoleError("classical limit undefined for this scalar (pole at q=1)")
        return _to_fraction(self.num(1)) / int(d)

    def laurent_at_exp(self, order):
        """Taylor coefficients in h of num and den under q = exp(h)."""
        return (
            _exp_combo_series(self.numerator_terms(), order),
            _exp_combo_series(self.denominator_terms(), order),
        )


@lru_cache(maxsize=64)
def _xpow(k):
    return fmpq_poly([0] * k + [1])


_RZERO = RatFuncQ(0, fmpq_poly([]), fmpz_poly([1]))
_RONE = RatFuncQ(0, fmpq_poly([1]), fmpz_poly([1]))
# s**2 = 2/(q + q^-1) = 2q/(q^2 + 1)
_SIGMA = RatFuncQ.make(1, [2], [1, 0, 1])


def _coerce(x):
    if isinstance(x, ExtScalar):
        return x
    if isinstance(x, RatFuncQ):
        return ExtScalar(x, _RZERO)
    if isinstance(x, (int, Fraction)):
        return ExtScalar(RatFuncQ.make(0, [Fraction(x)]), _RZERO)
    return None


class ExtScalar:
    """Element ``a + b*s`` of Q(q)(s), s**2 = 2/(q + q^-1).

    Instances are immutable and support ``+ - * /`` with each other and with
    ints, Fractions and :class:`RatFuncQ`.
    """

    __slots__ = ("a", "b")

    def __init__(self, a, b=_RZERO):
        self.a = a
        self.b = b

    @classmethod
    def q_power(cls, e, coeff=1):
        return _q_power(e, Fraction(coeff))

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self):
        """True when the value lies in Q(q), i.e. has no s component."""
        return self.b.is_zero()

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        from .render import render_scalar

        return f"ExtScalar({render_scalar(self)!r})"

    def __str__(self):
        from .render import render_scalar

        return render_scalar(self)

    def __neg__(self):
        return ExtScalar(-self.a, -self.b)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ExtScalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ExtScalar(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        if b1.is_zero() and b2.is_zero():
            return ExtScalar(a1 * a2, _RZERO)
        a = a1 * a2 + b1 * b2 * _SIGMA
        b = a1 * b2 + b1 * a2
        return ExtScalar(a, b)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("division by zero scalar")
        if self.b.is_zero():
            return ExtScalar(self.a.inverse(), _RZERO)
        # s is not a square in Q(q), so the norm vanishes only at zero
        norm = self.a * self.a - self.b * self.b * _SIGMA
        inv = norm.inverse()
        return ExtScalar(self.a * inv, -(self.b * inv))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def qconj(self):
        return ExtScalar(self.a.qconj(), self.b.qconj())

    def eval_q1(self):
        return self.a.eval_q1() + self.b.eval_q1()


ZERO = ExtScalar(_RZERO, _RZERO)
ONE = ExtScalar(_RONE, _RZERO)
Q = ExtScalar(RatFuncQ.q_power(1), _RZERO)
S = ExtScalar(_RZERO, _RONE)


@lru_cache(maxsize=512)
def _q_power(e, coeff):
    return ExtScalar(RatFuncQ.q_power(e, coeff), _RZERO)


def scalar(x):
    """Coerce an int, Fraction, RatFuncQ or ExtScalar to an ExtScalar."""
    out = _coerce(x)
    if out is None:
        raise TypeError(f"cannot interpret {x!r} as a scalar")
    return out


def arith(x, y, op):
    """Field arithmetic by name: ``op`` is one of add, sub, mul, div."""
    x, y = scalar(x), scalar(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def qconj(x):
    """q-conjugation q -> 1/q; the root s is fixed."""
    return scalar(x).qconj()


def eval_q1(x):
    """Value at q = 1 with s = 1, as an exact Fraction."""
    return scalar(x).eval_q1()


# --- truncated power series in h -------------------------------------------

class HSeries:
    """Truncated series ``sum(c[k] h**k) + O(h**(order+1))``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = [Fraction(c) for c in coeffs[: order + 1]]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def constant(cls, c, order):
        return cls([c], order)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __eq__(self, other):
        if not isinstance(other, HSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __repr__(self):
        return f"HSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return HSeries(self.coeffs, order)

    def _common(self, other):
        if isinstance(other, HSeries):
            n = min(self.order, other.order)
            return n, self.coeffs[: n + 1], other.coeffs[: n + 1]
        return self.order, self.coeffs, (Fraction(other),) + (Fraction(0),) * self.order

    def __add__(self, other):
        n, a, b = self._common(other)
        return HSeries([x + y for x, y in zip(a, b)], n)

    __radd__ = __add__

    def __neg__(self):
        return HSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, HSeries):
            return HSeries([c * other for c in self.coeffs], self.order)
        n, a, b = self._common(other)
        out = [Fraction(0)] * (n + 1)
        for i, x in enumerate(a):
            if x:
                for j in range(n + 1 - i):
                    out[i + j] += x * b[j]
        return HSeries(out, n)

    __rmul__ = __mul__

    def inverse(self):
        c0 = self.coeffs[0]
        if not c0:
            raise PoleError("series has no constant term; pole at h=0")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / c0
        for k in range(1, n + 1):
            acc = sum((self.coeffs[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
            out[k] = -acc / c0
        return HSeries(out, n)

    def __truediv__(self, other):
        if not isinstance(other, HSeries):
            return HSeries([c / Fraction(other) for c in self.coeffs], self.order)
        return self * other.inverse()

    def sqrt(self):
        """Square root with positive constant term (c0 must be a rational square)."""
        c0 = self.coeffs[0]
        r0 = _rational_sqrt(c0)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = r0
        for k in range(1, n + 1):
            acc = sum((out[j] * out[k - j] for j in range(1, k)), Fraction(0))
            out[k] = (self.coeffs[k] - acc) / (2 * r0)
        return HSeries(out, n)


def _rational_sqrt(c):
    if c <= 0:
        raise ValueError("square root needs a positive constant term")
    n, d = math.isqrt(c.numerator), math.isqrt(c.denominator)
    if n * n != c.numerator or d * d != c.denominator:
        raise ValueError(f"constant term {c} is not a rational square")
    return Fraction(n, d)


def _exp_combo_series(terms, order):
    # sum_k c_k exp(k h): coefficient of h^j is sum_k c_k k^j / j!
    out = []
    fact = 1
    for j in range(order + 1):
        if j:
            fact *= j
        out.append(sum((c * Fraction(k) ** j for k, c in terms.items()), Fraction(0)) / fact)
    return HSeries(out, order)


def _ratfunc_series(r, order):
    if r.is_zero():
        return HSeries([], order)
    num, den = r.laurent_at_exp(order)
    if not den.coeffs[0]:
        raise PoleError("scalar has a pole at h=0")
    return num / den


@lru_cache(maxsize=32)
def _s_series(order):
    return _ratfunc_series(_SIGMA, order).sqrt()


def h_series(x, order):
    """Expand a scalar in powers of h, with q = exp(h), to the given order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    x = scalar(x)
    out = _ratfunc_series(x.a, order)
    if not x.b.is_zero():
        out = out + _ratfunc_series(x.b, order) * _s_series(order)
    return out
