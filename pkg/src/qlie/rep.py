"""Matrix representations of (sl2)_h realised through the q-commutator.

Matrices are numpy object arrays of :class:`~qlie.qcoeff.ExtScalar`.  A
matrix q-conjugation is fixed by its images of the matrix units and
extended q-linearly: ``(sum m_ij E_ij)~ = sum qconj(m_ij) E_ij~``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .core import BASIS, BASIS_NAMES, QLieVector, StructureTable, qconj_L
from .errors import DimensionError
from .qcoeff import ONE, ZERO, ExtScalar, Q, S, scalar

__all__ = [
    "MatConjugation",
    "Representation",
    "RepReport",
    "as_matrix",
    "matrix_unit",
    "mat_qconj",
    "qcommutator",
    "builtin_rep2",
    "verify_representation",
    "classical_rep",
    "classical_table",
]


def as_matrix(rows):
    """Square object array of ExtScalar from nested sequences."""
    m = np.array([[scalar(x) for x in row] for row in rows], dtype=object)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"matrix must be square, got shape {m.shape}")
    return m


def zeros(n):
    m = np.empty((n, n), dtype=object)
    m.fill(ZERO)
    return m


def matrix_unit(n, i, j, coeff=ONE):
    m = zeros(n)
    m[i, j] = scalar(coeff)
    return m


def mat_equal(a, b):
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def _matmul(a, b):
    n = a.shape[0]
    out = zeros(n)
    for i, j in product(range(n), repeat=2):
        acc = ZERO
        for k in range(n):
            x, y = a[i, k], b[k, j]
            if not x.is_zero() and not y.is_zero():
                acc = acc + x * y
        out[i, j] = acc
    return out


@dataclass(frozen=True, eq=False)
class MatConjugation:
    """q-conjugation on n x n matrices given by the images of E_ij."""

    n: int
    images: dict  # (i, j) -> matrix, 0-based

    def __post_init__(self):
        for i, j in product(range(self.n), repeat=2):
            img = self.images.get((i, j))
            if img is None:
                raise DimensionError(f"missing image of matrix unit ({i + 1},{j + 1})")
            if img.shape != (self.n, self.n):
                raise DimensionError(f"image of ({i + 1},{j + 1}) has shape {img.shape}")

    def __call__(self, m):
        return mat_qconj(m, self)

    def involution_failures(self):
        """Matrix units u with u~~ != u."""
        bad = []
        for i, j in product(range(self.n), repeat=2):
            if not mat_equal(self(self.images[(i, j)]), matrix_unit(self.n, i, j)):
                bad.append((i, j))
        return bad

    def at_q1(self):
        return MatConjugation(self.n, {k: _eval_matrix(v) for k, v in self.images.items()})

    def is_identity(self):
        return all(
            mat_equal(self.images[(i, j)], matrix_unit(self.n, i, j))
            for i, j in product(range(self.n), repeat=2)
        )


def identity_conjugation(n):
    return MatConjugation(n, {(i, j): matrix_unit(n, i, j) for i, j in product(range(n), repeat=2)})


def mat_qconj(m, c):
    """Apply a matrix q-conjugation, extended q-linearly from the matrix units."""
    if m.shape != (c.n, c.n):
        raise DimensionError(f"matrix shape {m.shape} does not match conjugation dimension {c.n}")
    out = zeros(c.n)
    for i, j in product(range(c.n), repeat=2):
        x = m[i, j]
        if x.is_zero():
            continue
        xt = x.qconj()
        img = c.images[(i, j)]
        for k, l in product(range(c.n), repeat=2):
            y = img[k, l]
            if not y.is_zero():
                out[k, l] = out[k, l] + xt * y
    return out


def qcommutator(a, b, c):
    """``a b - (b~ a~)~`` for matrices a, b under conjugation c."""
    if a.shape != b.shape:
        raise DimensionError(f"shapes {a.shape} and {b.shape} differ")
    return _matmul(a, b) - mat_qconj(_matmul(mat_qconj(b, c), mat_qconj(a, c)), c)


@dataclass(frozen=True, eq=False)
class Representation:
    """Linear map from (sl2)_h to matrices plus a matrix q-conjugation."""

    n: int
    images: tuple  # matrices for (Xp_h, Xm_h, H_h)
    conj: MatConjugation

    def __post_init__(self):
        if self.conj.n != self.n:
            raise DimensionError("conjugation dimension does not match representation")
        for name, m in zip(BASIS_NAMES, self.images):
            if m.shape != (self.n, self.n):
                raise DimensionError(f"pi({name}) has shape {m.shape}, expected {self.n}x{self.n}")

    def pi(self, v):
        out = zeros(self.n)
        for c, m in zip(v.coords, self.images):
            if not c.is_zero():
                out = out + m * c
        return out

    def pi_tilde(self, v):
        # pi(v~) = pi~(v)
        return self.pi(qconj_L(v))

    def qbracket(self, a, b):
        """``pi(a) pi(b) - (pi~(b) pi~(a))~``."""
        lhs = _matmul(self.pi(a), self.pi(b))
        inner = _matmul(self.pi_tilde(b), self.pi_tilde(a))
        return lhs - mat_qconj(inner, self.conj)

    def at_q1(self):
        return Representation(self.n, tuple(_eval_matrix(m) for m in self.images), self.conj.at_q1())


def _eval_matrix(m):
    out = zeros(m.shape[0])
    for idx, x in np.ndenumerate(m):
        out[idx] = scalar(x.eval_q1())
    return out


def builtin_rep2():
    """The 2-dimensional representation with its matrix q-conjugation."""
    qi = ExtScalar.q_power(-1)
    # sqrt((q + q^-1)/2) = s (q + q^-1)/2
    root = S * (Q + qi) / 2
    xp = as_matrix([[0, root], [0, 0]])
    h = as_matrix([[Q, 0], [0, -qi]])
    inv = (Q + qi).inverse()
    conj = MatConjugation(
        2,
        {
            (0, 0): as_matrix([[2 * Q * inv, 0], [0, (Q - qi) * inv]]),
            (0, 1): matrix_unit(2, 0, 1),
            (1, 1): as_matrix([[(qi - Q) * inv, 0], [0, 2 * qi * inv]]),
            (1, 0): matrix_unit(2, 1, 0),
        },
    )
    return Representation(2, (xp, xp.T.copy(), h), conj)


@dataclass
class PairResult:
    pair: tuple  # basis names
    passed: bool
    qcommutator: object
    expected: object


@dataclass
class RepReport:
    pairs: list = field(default_factory=list)
    involution_failures: list = field(default_factory=list)
    linearity_ok: bool = True

    @property
    def passed(self):
        return all(p.passed for p in self.pairs) and not self.involution_failures and self.linearity_ok

    @property
    def failed_pairs(self):
        return [p.pair for p in self.pairs if not p.passed]


def _random_matrix(rng, n):
    from .sampling import random_scalar

    return as_matrix([[random_scalar(rng) for _ in range(n)] for _ in range(n)])


def check_qlinearity(conj, rng=None, cases=5):
    """Additivity and (lam m)~ = lam~ m~ on random matrices."""
    from .sampling import random_scalar

    rng = rng or random.Random(0)
    for _ in range(cases):
        a, b = _random_matrix(rng, conj.n), _random_matrix(rng, conj.n)
        lam = random_scalar(rng)
        if not mat_equal(conj(a + b), conj(a) + conj(b)):
            return False
        if not mat_equal(conj(a * lam), conj(a) * lam.qconj()):
            return False
    return True


def verify_representation(r, t, rng=None):
    """Check all nine q-commutators against a structure table."""
    report = RepReport()
    for (i, a), (j, b) in product(enumerate(BASIS), repeat=2):
        got = r.qbracket(a, b)
        want = r.pi(t[i, j])
        report.pairs.append(
            PairResult((BASIS_NAMES[i], BASIS_NAMES[j]), mat_equal(got, want), got, want)
        )
    report.involution_failures = r.conj.involution_failures()
    report.linearity_ok = check_qlinearity(r.conj, rng)
    return report


def classical_rep(r):
    """The representation with every entry evaluated at q = 1."""
    return r.at_q1()


def classical_table(t):
    """A structure table with every constant evaluated at q = 1."""
    rows = tuple(
        tuple(QLieVector(*(scalar(c.eval_q1()) for c in t[i, j].coords)) for j in range(3))
        for i in range(3)
    )
    return StructureTable(rows, t.twist)
