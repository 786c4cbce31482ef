"""The quantum Lie algebra (sl2)_h and its bracket inside U_q(sl2).

An :class:`Embedding` fixes three elements of U_q(sl2) spanning an
ad-closed subspace, together with the ad-words that act as those
elements.  The quantum Lie bracket is ``[a, b]_h = ad_a(b)``, decomposed
exactly back onto the three images.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product

from .errors import ClosureError, PoleError, TwistError
from .pbw import E, F, K, KINV, AdWord, AlgElement, ad_apply, casimir, casimir_word
from .qcoeff import ONE, ZERO, ExtScalar, S, scalar

__all__ = [
    "QLieVector",
    "Embedding",
    "StructureTable",
    "BASIS_NAMES",
    "XP",
    "XM",
    "HH",
    "BASIS",
    "standard_embedding",
    "twisted_embedding",
    "decompose",
    "bracket",
    "structure_table",
    "qconj_L",
    "check_qantisymmetry",
    "classical_limit",
    "expected_table",
    "classical_expected",
    "EXPECTED_RELATIONS",
]

BASIS_NAMES = ("Xp_h", "Xm_h", "H_h")


@dataclass(frozen=True)
class QLieVector:
    """Coordinates over the ordered basis (Xp_h, Xm_h, H_h)."""

    plus: ExtScalar = ZERO
    minus: ExtScalar = ZERO
    zero: ExtScalar = ZERO

    def __post_init__(self):
        for name in ("plus", "minus", "zero"):
            object.__setattr__(self, name, scalar(getattr(self, name)))

    @classmethod
    def from_coords(cls, coords):
        return cls(*coords)

    @property
    def coords(self):
        return (self.plus, self.minus, self.zero)

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def __add__(self, other):
        return QLieVector(*(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return QLieVector(*(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return QLieVector(*(-x for x in self.coords))

    def scale(self, lam):
        lam = scalar(lam)
        return QLieVector(*(lam * x for x in self.coords))

    def __rmul__(self, lam):
        return self.scale(lam)

    def qconj(self):
        return QLieVector(*(x.qconj() for x in self.coords))

    def __str__(self):
        from .render import render

        return render(self)


XP = QLieVector(ONE, ZERO, ZERO)
XM = QLieVector(ZERO, ONE, ZERO)
HH = QLieVector(ZERO, ZERO, ONE)
BASIS = (XP, XM, HH)


def qconj_L(v):
    """q-conjugate each coordinate in the distinguished basis."""
    return v.qconj()


# --- embeddings ---------------------------------------------------------------

def _sigma():
    return (ExtScalar.q_power(1) + ExtScalar.q_power(-1)).inverse() * 2


def _untwisted():
    sig = _sigma()
    q, qi = ExtScalar.q_power(1), ExtScalar.q_power(-1)
    images = (
        (KINV * E).scale(S),
        (KINV * F).scale(S),
        (E * F).scale(q * sig) - (F * E).scale(qi * sig),
    )
    words = (
        AdWord.word(("Kinv", "E"), S),
        AdWord.word(("Kinv", "F"), S),
        AdWord.word(("E", "F"), q * sig) - AdWord.word(("F", "E"), qi * sig),
    )
    return images, words


class _Solver:
    """Exact projection onto the span of three algebra elements.

    Gaussian elimination over the PBW coordinates, pivoting on the lowest
    monomial in lexicographic (a, b, c) order.
    """

    def __init__(self, images):
        monos = sorted(set().union(*(img.terms for img in images)))
        rows = [[img.coeff(m) for img in images] for m in monos]
        self.pivots = []  # (monomial, column)
        # reduced row echelon form of the 3-column matrix, tracked with the
        # row operations so decompose can reuse them on a right-hand side
        self.monos = monos
        n = len(images)
        work = [list(r) for r in rows]
        ops = [[ONE if i == j else ZERO for j in range(len(monos))] for i in range(len(monos))]
        r = 0
        for col in range(n):
            piv = next((i for i in range(r, len(work)) if not work[i][col].is_zero()), None)
            if piv is None:
                raise ValueError("embedding images are linearly dependent")
            work[r], work[piv] = work[piv], work[r]
            ops[r], ops[piv] = ops[piv], ops[r]
            inv = work[r][col].inverse()
            work[r] = [x * inv for x in work[r]]
            ops[r] = [x * inv for x in ops[r]]
            for i in range(len(work)):
                if i != r and not work[i][col].is_zero():
                    f = work[i][col]
                    work[i] = [x - f * y for x, y in zip(work[i], work[r])]
                    ops[i] = [x - f * y for x, y in zip(ops[i], ops[r])]
            r += 1
        # coordinate k = sum_j ops[k][j] * u[monos[j]]
        self.solve_rows = [
            {monos[j]: c for j, c in enumerate(ops[k]) if not c.is_zero()} for k in range(n)
        ]
        self.images = images

    def __call__(self, u):
        terms = u.terms
        coords = []
        for row in self.solve_rows:
            acc = ZERO
            for m, c in row.items():
                x = terms.get(m)
                if x is not None:
                    acc = acc + c * x
            coords.append(acc)
        residual = u
        for c, img in zip(coords, self.images):
            if not c.is_zero():
                residual = residual - img.scale(c)
        if not residual.is_zero():
            raise ClosureError("element is not in the span of the embedding", residual)
        return QLieVector(*coords)


@dataclass(frozen=True, eq=False)
class Embedding:
    """Images of (Xp_h, Xm_h, H_h) in U_q(sl2) with their ad-words."""

    images: tuple
    ad_words: tuple
    twist: tuple = (ONE,)

    @cached_property
    def solver(self):
        return _Solver(self.images)

    def word_of(self, v):
        """Combined ad-word of a QLieVector."""
        out = AdWord()
        for c, w in zip(v.coords, self.ad_words):
            if not c.is_zero():
                out = out + w.scale(c)
        return out

    def image_of(self, v):
        out = AlgElement()
        for c, img in zip(v.coords, self.images):
            if not c.is_zero():
                out = out + img.scale(c)
        return out


_STANDARD = None


def standard_embedding():
    """Embedding with Xpm_h = s K^-1 Xpm and H_h = sigma (q X+X- - q^-1 X-X+)."""
    global _STANDARD
    if _STANDARD is None:
        images, words = _untwisted()
        _STANDARD = Embedding(images, words, (ONE,))
        _STANDARD.solver  # noqa: B018  checks independence eagerly
    return _STANDARD


def twisted_embedding(p):
    """Embedding right-multiplied by p(C), C the Casimir.

    ``p`` lists polynomial coefficients from the constant term upward and
    must sum to exactly 1.
    """
    p = tuple(scalar(c) for c in p)
    if not p:
        raise TwistError("twist polynomial is empty")
    total = sum(p, ZERO)
    if total != ONE:
        raise TwistError(f"twist coefficients must sum to 1, got {total}")
    if p == (ONE,):
        return standard_embedding()
    c_elem = casimir()
    c_word = casimir_word()
    poly_elem = AlgElement()
    poly_word = AdWord()
    power_e = AlgElement.from_scalar(ONE)
    power_w = AdWord({(): ONE})
    for k, coeff in enumerate(p):
        if k:
            power_e = power_e * c_elem
            power_w = power_w * c_word
        if not coeff.is_zero():
            poly_elem = poly_elem + power_e.scale(coeff)
            poly_word = poly_word + power_w.scale(coeff)
    images, words = _untwisted()
    emb = Embedding(
        tuple(img * poly_elem for img in images),
        tuple(w * poly_word for w in words),
        p,
    )
    emb.solver  # noqa: B018
    return emb


def decompose(u, e):
    """Exact coordinates of ``u`` over the images of ``e``.

    Raises :class:`ClosureError` carrying the residual if ``u`` is not in
    the span.
    """
    return e.solver(u)


def bracket(a, b, e=None):
    """Quantum Lie bracket ``[a, b]_h = ad_a(b)``."""
    e = e or standard_embedding()
    return decompose(ad_apply(e.word_of(a), e.image_of(b)), e)


@dataclass(frozen=True)
class StructureTable:
    """``entries[i][j] = [basis_i, basis_j]_h`` as QLieVectors."""

    entries: tuple
    twist: tuple = field(default=(ONE,), compare=False)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def constants(self):
        """Flat iterator of ((i, j, k), scalar)."""
        for i, j in product(range(3), repeat=2):
            for k, c in enumerate(self.entries[i][j].coords):
                yield (i, j, k), c

    def apply(self, a, b):
        """Bracket of two vectors by bilinear extension of the table."""
        out = QLieVector()
        for i, ca in enumerate(a.coords):
            if ca.is_zero():
                continue
            for j, cb in enumerate(b.coords):
                if not cb.is_zero():
                    out = out + self.entries[i][j].scale(ca * cb)
        return out


def structure_table(e=None):
    e = e or standard_embedding()
    rows = tuple(tuple(bracket(x, y, e) for y in BASIS) for x in BASIS)
    return StructureTable(rows, e.twist)


def _build_expected():
    q, qi = ExtScalar.q_power(1), ExtScalar.q_power(-1)
    z = QLieVector()
    return {
        ("Xp_h", "Xp_h"): z,
        ("Xp_h", "Xm_h"): HH,
        ("Xp_h", "H_h"): XP.scale(qi * -2),
        ("Xm_h", "Xp_h"): -HH,
        ("Xm_h", "Xm_h"): z,
        ("Xm_h", "H_h"): XM.scale(q * 2),
        ("H_h", "Xp_h"): XP.scale(q * 2),
        ("H_h", "Xm_h"): XM.scale(qi * -2),
        ("H_h", "H_h"): HH.scale((q - qi) * 2),
    }


# The bracket relations as published, used as golden values by verify.
EXPECTED_RELATIONS = _build_expected()


def expected_table():
    rows = tuple(
        tuple(EXPECTED_RELATIONS[(a, b)] for b in BASIS_NAMES) for a in BASIS_NAMES
    )
    return StructureTable(rows)


def classical_expected():
    """The sl2 constants [X+, X-] = H, [H, X+-] = +-2 X+- as a 3x3x3 Fraction array."""
    c = [[[Fraction(0)] * 3 for _ in range(3)] for _ in range(3)]
    c[0][1][2], c[1][0][2] = Fraction(1), Fraction(-1)
    c[2][0][0], c[0][2][0] = Fraction(2), Fraction(-2)
    c[2][1][1], c[1][2][1] = Fraction(-2), Fraction(2)
    return c


# --- properties -----------------------------------------------------------------

@dataclass(frozen=True)
class AntisymmetryReport:
    passed: bool
    left: QLieVector
    right: QLieVector


def check_qantisymmetry(a, b, e=None):
    """Compare ``[a, b]_h~`` with ``-[b~, a~]_h``."""
    e = e or standard_embedding()
    left = qconj_L(bracket(a, b, e))
    right = -bracket(qconj_L(b), qconj_L(a), e)
    return AntisymmetryReport(left == right, left, right)


@dataclass(frozen=True)
class ClassicalLimit:
    constants: list  # constants[i][j][k] as Fractions
    antisymmetric: bool
    jacobi: bool
    matches_sl2: bool
    failures: list

    @property
    def passed(self):
        return self.antisymmetric and self.jacobi and self.matches_sl2


def _jacobi_ok(c):
    def br(x, y):
        out = [Fraction(0)] * 3
        for i in range(3):
            for j in range(3):
                if x[i] and y[j]:
                    for k in range(3):
                        out[k] += x[i] * y[j] * c[i][j][k]
        return out

    unit = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    bad = []
    for a, b, d in product(range(3), repeat=3):
        x, y, z = unit[a], unit[b], unit[d]
        lhs = br(x, br(y, z))
        rhs = [u + v for u, v in zip(br(br(x, y), z), br(y, br(x, z)))]
        if lhs != rhs:
            bad.append((a, b, d))
    return bad


def classical_limit(t):
    """Evaluate a structure table at q = 1 and validate it against sl2."""
    consts = [[[Fraction(0)] * 3 for _ in range(3)] for _ in range(3)]
    for (i, j, k), c in t.constants():
        try:
            consts[i][j][k] = c.eval_q1()
        except PoleError as exc:
            raise PoleError(
                f"entry [{BASIS_NAMES[i]}, {BASIS_NAMES[j]}] coordinate {BASIS_NAMES[k]}: {exc}"
            ) from exc
    failures = []
    anti = all(
        consts[i][j][k] == -consts[j][i][k] for i, j, k in product(range(3), repeat=3)
    )
    if not anti:
        failures.append("antisymmetry")
    bad = _jacobi_ok(consts)
    if bad:
        failures.append(f"jacobi {bad}")
    matches = consts == classical_expected()
    if not matches:
        failures.append("sl2 table mismatch")
    return ClassicalLimit(consts, anti, not bad, matches, failures)
