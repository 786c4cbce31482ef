"""Seeded random values for property checks.

Scalars are Laurent polynomials in q with exponents in [-2, 2] and
integer coefficients in [-3, 3], optionally times s.  All generators take
a ``random.Random`` so that suites are reproducible from one seed.
"""

from __future__ import annotations

import random

from .core import QLieVector
from .pbw import AlgElement
from .qcoeff import ExtScalar, RatFuncQ, S

DEFAULT_SEED = 20240601


def rng_for(seed=DEFAULT_SEED):
    return random.Random(seed)


def random_laurent(rng, degree=2, bound=3):
    terms = {e: rng.randint(-bound, bound) for e in range(-degree, degree + 1)}
    return ExtScalar(RatFuncQ.from_laurent(terms))


def random_scalar(rng, with_s=True):
    x = random_laurent(rng)
    if with_s and rng.random() < 0.3:
        x = x * S
    return x


def random_nonzero_scalar(rng, with_s=True):
    while True:
        x = random_scalar(rng, with_s)
        if not x.is_zero():
            return x


def random_ratfunc_scalar(rng):
    """A quotient of two random Laurent polynomials, plus an s component."""
    a = random_laurent(rng) / random_nonzero_scalar(rng, with_s=False)
    b = random_laurent(rng) / random_nonzero_scalar(rng, with_s=False)
    return a + b * S if rng.random() < 0.5 else a


def random_vector(rng):
    return QLieVector(random_scalar(rng), random_scalar(rng), random_scalar(rng))


def random_alg_element(rng, terms=3, max_deg=2):
    out = {}
    for _ in range(terms):
        mono = (rng.randint(0, max_deg), rng.randint(-max_deg, max_deg), rng.randint(0, max_deg))
        out[mono] = random_laurent(rng, degree=1, bound=2)
    return AlgElement(out)


def random_word(rng, length=6, letters=("E", "F", "K", "Kinv")):
    return tuple(rng.choice(letters) for _ in range(length))
