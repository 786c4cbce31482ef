import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from qlie.pbw import AlgElement
from qlie.qcoeff import ExtScalar, RatFuncQ, S

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SEED = 20240601


@pytest.fixture
def rng():
    return random.Random(SEED)


laurent_terms = st.dictionaries(st.integers(-3, 3), st.integers(-4, 4), max_size=4)


@st.composite
def laurent(draw):
    return ExtScalar(RatFuncQ.from_laurent(draw(laurent_terms)))


@st.composite
def ratfuncs(draw):
    num = draw(laurent())
    den = draw(laurent().filter(lambda x: not x.is_zero()))
    return num / den


@st.composite
def scalars(draw):
    a = draw(ratfuncs())
    if draw(st.booleans()):
        a = a + draw(laurent()) * S
    return a


nonzero_scalars = scalars().filter(lambda x: not x.is_zero())


@st.composite
def alg_elements(draw, max_terms=3, max_deg=2):
    monos = st.tuples(st.integers(0, max_deg), st.integers(-max_deg, max_deg), st.integers(0, max_deg))
    terms = draw(st.dictionaries(monos, laurent(), max_size=max_terms))
    return AlgElement(terms)
