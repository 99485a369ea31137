"""Hypothesis strategies shared by the property tests."""
from fractions import Fraction

from hypothesis import strategies as st

from twoonemaps.passport import Passport
from twoonemaps.series import Monomial, Series, T, X, a, b

VARS = [a(0), a(1), a(2), b(0), b(1), T, X]

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=6)

monomials = st.dictionaries(st.sampled_from(VARS), st.integers(1, 3), max_size=3).map(Monomial)

series = st.dictionaries(monomials, coefficients, max_size=5).map(Series)


def truncated_series(n):
    return series.map(lambda s: s.truncate(n))


@st.composite
def passports(draw, max_edges=8):
    """Balanced passports (equal white and black degree sums)."""
    edges = draw(st.integers(1, max_edges))
    white = draw(compositions(edges))
    black = draw(compositions(edges))
    return Passport.from_degrees(white, black)


@st.composite
def compositions(draw, n):
    parts = []
    left = n
    while left:
        k = draw(st.integers(1, left))
        parts.append(k)
        left -= k
    return parts


def fraction_list(n):
    return st.lists(coefficients, min_size=n, max_size=n).map(lambda v: [Fraction(c) for c in v])
