from collections import Counter
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from twoonemaps.arith import (admissible_ramifications, analyze_report, format_valuations, is_prime,
                              newton_polygon, orbit_decompositions, root_valuations, s_invariant,
                              valuation, valuation_cases)
from twoonemaps.errors import DegenerateN, NotPrimePlusOne, ZeroPolynomial
from twoonemaps.passport import Passport

GOLDEN = Path(__file__).parent / "golden"
EIGHT_EDGES_A = Passport.parse("a1^4 a2^2 b1 b7")
EIGHT_EDGES_B = Passport.parse("a1^3 a2 a3 b1^2 b6")
DEG8_AT_7 = [49, -2352, 4998, -6160, 4851, -2520, 847, -168, 15]


def polymul(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] += x * y
    return out


def test_primes():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_s_invariant():
    assert s_invariant(EIGHT_EDGES_A, "white") == 2
    assert s_invariant(EIGHT_EDGES_B, "white") == 1
    assert s_invariant(EIGHT_EDGES_A, "black") is None


def test_admissible_two_degree_two_whites():
    rep = admissible_ramifications(EIGHT_EDGES_A, "white", 6)
    assert rep.admissible == [(2, [1]), (3, [2]), (4, [1]), (6, [1, 2])]
    assert all(e % 2 == 0 or e % 3 == 0 for e in rep.indices())


def test_admissible_one_each_of_degree_two_and_three():
    rep = admissible_ramifications(EIGHT_EDGES_B, "white", 8)
    assert rep.indices() == [3, 5, 6, 8]
    assert dict(rep.admissible)[8] == [3]
    assert all(e % 3 == 0 or e % 5 == 0 for e, h in rep.admissible if h != [3])


def test_orbit_decompositions():
    od = orbit_decompositions(EIGHT_EDGES_A, "white", 5)
    assert sorted(map(sorted, od.partitions())) == [[2, 3], [5]]
    five = dict(od.candidates[-1])[5] if len(od.candidates[-1]) == 1 else dict(od.candidates[0])[5]
    assert five == [[(2, 1), (3, 1)]]
    assert sorted(map(sorted, orbit_decompositions(EIGHT_EDGES_B, "white", 8).partitions())) == [[3, 5], [8]]


def test_prime_plus_one_required():
    with pytest.raises(NotPrimePlusOne):
        admissible_ramifications(Passport.parse("a1^3 a4 b1^2 b5"), "white", 4)


def test_degenerate_n():
    with pytest.raises(DegenerateN):
        valuation_cases(1, 2)


def test_valuation_cases_shape():
    cases = valuation_cases(5, 6)
    assert [c.case_id for c in cases[:2]] == ["ExceptionalUnit", "Uniform"]
    assert cases[1].vertex_valuation == Fraction(6, 6)


def test_valuation():
    assert valuation(0, 7) == float("inf")
    assert valuation(-49 * 3, 7) == 2
    assert valuation(15, 7) == 0


def test_newton_polygon_degree_eight():
    poly = newton_polygon(DEG8_AT_7, 7)
    assert poly.segments == ((Fraction(-1, 3), 3), (Fraction(-1, 5), 5))
    assert poly.vertices() == [(0, 2), (3, 1), (8, 0)]
    vals = root_valuations(DEG8_AT_7, 7)
    assert Counter(vals) == {Fraction(1, 3): 3, Fraction(1, 5): 5}
    assert format_valuations(vals) == "1/3 x3, 1/5 x5"


def test_newton_zero_polynomial():
    with pytest.raises(ZeroPolynomial):
        newton_polygon([0, 0], 3)


def test_newton_known_roots():
    # (x - 9)(x - 3)(x - 2) at p = 3: valuations 2, 1, 0
    f = polymul(polymul([-9, 1], [-3, 1]), [-2, 1])
    assert sorted(root_valuations(f, 3)) == [0, 1, 2]


@pytest.mark.parametrize("passport,name", [
    (EIGHT_EDGES_A, "analyze_a1^4_a2^2_b1_b7.txt"),
    (EIGHT_EDGES_B, "analyze_a1^3_a2_a3_b1^2_b6.txt"),
])
def test_report_golden(passport, name):
    assert analyze_report(passport) == (GOLDEN / name).read_text()


def test_report_sections():
    text = analyze_report(EIGHT_EDGES_A)
    for head in ("S-INVARIANT", "ADMISSIBLE-E", "ORBIT-DECOMPOSITIONS", "s(white)=2", "{2,3}", "{5}"):
        assert head in text


int_polys = st.lists(st.integers(-60, 60), min_size=2, max_size=7).filter(lambda c: c[-1] != 0 and any(c[:-1]))
small_primes = st.sampled_from([2, 3, 5, 7])


@settings(max_examples=300)
@given(int_polys, small_primes)
def test_hull_is_lower_convex_and_supports_all_points(coeffs, p):
    poly = newton_polygon(coeffs, p)
    verts = poly.vertices()
    pts = {i: valuation(c, p) for i, c in enumerate(coeffs) if c}
    assert all(pts[x] == y for x, y in verts)
    slopes = [s for s, _ in poly.segments]
    assert slopes == sorted(slopes) and len(set(slopes)) == len(slopes)
    for (x1, y1), (x2, y2) in zip(verts, verts[1:]):
        for x, y in pts.items():
            if x1 <= x <= x2:
                assert y >= y1 + Fraction(y2 - y1, x2 - x1) * (x - x1)
    assert sum(l for _, l in poly.segments) == max(pts) - min(pts)


@settings(max_examples=300)
@given(int_polys, int_polys, small_primes)
def test_root_valuations_multiply(f, g, p):
    fg = polymul(f, g)
    assert Counter(root_valuations(fg, p)) == Counter(root_valuations(f, p)) + Counter(root_valuations(g, p))


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), small_primes)
def test_valuation_additive(x, y, p):
    assume(x and y)
    assert valuation(x * y, p) == valuation(x, p) + valuation(y, p)
