from fractions import Fraction

import pytest
from hypothesis import strategies as st

from config.settings import Settings
from services.codes24 import load_database
from services.enumerator import EnumeratorService
from services.gf2core import BinaryCode
from services.polyring import MultiPoly, num_variables
from services.theorems import TheoremVerifier


@pytest.fixture(scope="session")
def service():
    return EnumeratorService(Settings(cache_url=None))


@pytest.fixture(scope="session")
def database():
    return load_database()


@pytest.fixture(scope="session")
def verifier(database, service):
    return TheoremVerifier(database=database, service=service)


@st.composite
def small_codes(draw, max_length=8, max_rows=4):
    n = draw(st.integers(min_value=1, max_value=max_length))
    rows = draw(st.lists(st.integers(min_value=0, max_value=(1 << n) - 1), max_size=max_rows))
    return BinaryCode(n, tuple(rows))


@st.composite
def small_polys(draw, genus=1, max_terms=4, max_degree=3):
    arity = num_variables(genus)
    exponent = st.tuples(*[st.integers(min_value=0, max_value=max_degree)] * arity)
    coefficient = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    terms = draw(st.dictionaries(exponent, coefficient, max_size=max_terms))
    return MultiPoly(genus, terms)


@st.composite
def integral_polys(draw, genus=1, max_terms=4, max_degree=3):
    arity = num_variables(genus)
    exponent = st.tuples(*[st.integers(min_value=0, max_value=max_degree)] * arity)
    terms = draw(st.dictionaries(exponent, st.integers(min_value=-50, max_value=50), max_size=max_terms))
    return MultiPoly(genus, {e: Fraction(c) for e, c in terms.items()})
