from collections import Counter
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twoonemaps.errors import BudgetExceeded, NotATree
from twoonemaps.genfun import count_slice
from twoonemaps.maps import (BLACK, WHITE, PlaneMap, aut_order, decode, enumerate_21maps,
                             enumerate_plane_trees, isomorphic, maps_with_passport, mirror,
                             weighted_tree_count)
from twoonemaps.passport import Passport

GOLDEN = Path(__file__).parent / "golden"

# plane bipartite trees with colours, E = 0..8
TREE_CLASSES = [2, 1, 2, 3, 6, 10, 28, 63, 190]


def relabel(m: PlaneMap, perm) -> PlaneMap:
    """Apply a dart relabelling that maps edges to edges (keeps the 2i/2i+1 pairing)."""
    inv = {perm[d]: d for d in range(m.dart_count)}
    sigma = tuple(perm[m.sigma[inv[d]]] for d in range(m.dart_count))
    color = tuple(m.color[inv[d]] for d in range(m.dart_count))
    return PlaneMap(sigma, color)


def edge_perm(rng_edges, flips, n):
    perm = {}
    for i, (j, f) in enumerate(zip(rng_edges, flips)):
        perm[2 * i] = 2 * j + f
        perm[2 * i + 1] = 2 * j + 1 - f
    return perm


def test_validation():
    with pytest.raises(ValueError):
        PlaneMap((1, 0), (0, 0))
    with pytest.raises(ValueError):
        PlaneMap((0, 2, 1, 3), (0, 1, 0, 1))  # colours clash around a vertex
    with pytest.raises(ValueError):
        PlaneMap((), ())


def test_tree_class_counts():
    for e, n in enumerate(TREE_CLASSES):
        assert len(enumerate_plane_trees(e)) == n


def test_tree_automorphisms_example():
    p = Passport.parse("a1^2 a4 b1^2 b2^2")
    orders = sorted(a for t, a in enumerate_plane_trees(6) if t.passport() == p)
    assert orders == [1, 2]
    assert weighted_tree_count(p) == Fraction(3, 2)


def test_star_automorphisms():
    star = [t for t, _ in enumerate_plane_trees(4) if t.passport() == Passport.parse("a4 b1^4")][0]
    assert aut_order(star) == 4


def test_aut_order_rejects_non_tree():
    with pytest.raises(NotATree):
        aut_order(enumerate_21maps(3)[0])


@pytest.mark.parametrize("edges", range(1, 8))
def test_weighted_tree_formula(edges):
    weights: Counter = Counter()
    for t, a in enumerate_plane_trees(edges):
        weights[t.passport()] += Fraction(1, a)
    for p, w in weights.items():
        assert w == weighted_tree_count(p)


@pytest.mark.parametrize("edges", range(2, 8))
def test_brute_force_matches_generating_function(edges):
    got = Counter(m.passport() for m in enumerate_21maps(edges))
    assert dict(got) == count_slice(edges)


def test_every_map_has_a_digon():
    for e in range(2, 8):
        for m in enumerate_21maps(e):
            assert m.is_plane()
            assert m.face_degrees() == sorted([2, 2 * e - 2])
            assert len(m.vertices()) == e
            p = m.passport()
            assert max(p.white)[0] >= 2 and max(p.black)[0] >= 2


def test_only_two_edge_map_has_symmetry():
    from twoonemaps import _kernels
    (m,) = enumerate_21maps(2)
    assert _kernels.canonical_code(m.sigma, m.color)[2] == 2
    for e in range(3, 7):
        for m in enumerate_21maps(e):
            assert _kernels.canonical_code(m.sigma, m.color)[2] == 1


def test_six_edge_passport_has_two_mirror_pairs():
    p = Passport.parse("a1^2 a4 b1 b2 b3")
    found = maps_with_passport(p)
    assert len(found) == 4
    classes = {min(m.canonical_code(), mirror(m).canonical_code()) for m in found}
    assert len(classes) == 2
    assert all(not isomorphic(m, mirror(m)) for m in found)


def test_eight_edge_counts():
    assert len(maps_with_passport(Passport.parse("a1^4 a2^2 b1 b7"))) == 5
    assert len(maps_with_passport(Passport.parse("a1^3 a2 a3 b1^2 b6"))) == 8


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        enumerate_21maps(11)
    with pytest.raises(BudgetExceeded):
        enumerate_plane_trees(12, max_edges=11)


@pytest.mark.parametrize("edges", [2, 3, 4, 5])
def test_golden_text(edges):
    text = "\n\n".join(m.to_text() for m in enumerate_21maps(edges)) + "\n"
    assert text == (GOLDEN / f"enumerate_edges_{edges}.txt").read_text()


def test_text_round_trip():
    for m in enumerate_21maps(5):
        assert PlaneMap.from_text(m.to_text()) == m
    lone = PlaneMap((), (), BLACK)
    assert PlaneMap.from_text(lone.to_text()) == lone


def test_decode_round_trip_trees():
    for t, _ in enumerate_plane_trees(6):
        assert isomorphic(decode(t.canonical_code()), t)
        assert t.canonical() == t


@settings(max_examples=200)
@given(st.integers(2, 7), st.data())
def test_canonical_code_is_label_invariant(edges, data):
    maps = enumerate_21maps(edges)
    m = data.draw(st.sampled_from(maps))
    order = data.draw(st.permutations(range(edges)))
    flips = data.draw(st.lists(st.integers(0, 1), min_size=edges, max_size=edges))
    m2 = relabel(m, edge_perm(order, flips, edges))
    assert m2.canonical_code() == m.canonical_code()
    assert m2.face_degrees() == [2, 2 * edges - 2]
    assert isomorphic(decode(m2.canonical_code()), m)


def test_colours():
    assert (WHITE, BLACK) == (0, 1)
