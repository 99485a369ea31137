"""Generating functions for plane bipartite trees and 2^1-maps.

``A`` and ``B`` are the white/black vertex-degree series, ``T`` the tree
series built from their product, and ``M = D_a(T) * D_b(T)`` the series
of maps with one face of perimeter 2.  Coefficients of ``T`` are
automorphism-weighted tree counts; coefficients of ``M`` are plain counts.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .passport import Passport
from .series import Family, Monomial, Series, T, VarId, X, Y, a, b


def _power_sum_series(family: Family, marker: VarId, max_t: int, max_x: int | None) -> Series:
    if max_t < 1:
        raise ValueError("max_t must be >= 1")
    top = max_t if max_x is None else min(max_t, max_x)
    base = Series(
        {Monomial([(T, 1), (marker, i), (VarId(family, i), 1)]): 1 for i in range(1, top + 1)},
        truncation=max_t,
    )

    def small(m: Monomial) -> bool:
        return max_x is None or m.degree(marker) <= max_x

    total = Series((), truncation=max_t)
    power = Series.constant(1, truncation=max_t)
    for n in range(1, max_t + 1):
        power = (power * base).filter(small)
        total = total + power.scale(Fraction(1, n))
    return total


def series_A(max_t: int, max_x: int | None = None) -> Series:
    """``sum_n (1/n) (t x a1 + t x^2 a2 + ...)^n`` truncated at ``t^max_t``.

    Only ``a_i`` with ``i <= max_t`` are kept.  ``max_x`` additionally drops
    terms whose ``x``-degree exceeds it (used when building ``T``).
    """
    return _power_sum_series(Family.A, X, max_t, max_x)


def series_B(max_t: int, max_x: int | None = None) -> Series:
    """Black analogue of :func:`series_A` in ``b_j`` and ``y``."""
    return _power_sum_series(Family.B, Y, max_t, max_x)


@lru_cache(maxsize=None)
def series_T(max_t: int) -> Series:
    """Tree series: coefficient of ``a^k b^l t^(n+m) x^(n+m-1)`` is
    ``(n-1)! (m-1)! / (k! l!)``; single vertices contribute ``a0*t + b0*t``."""
    if max_t < 1:
        raise ValueError("max_t must be >= 1")
    # a tree with t^V has V-1 edges, so x and y never exceed max_t - 1
    cap = max(max_t - 1, 0)
    if cap == 0:
        prod = Series((), truncation=max_t)
    else:
        prod = series_A(max_t, cap) * series_B(max_t, cap)
    kept = prod.filter(lambda m: m.degree(X) == m.degree(Y) == m.degree(T) - 1)
    trees = kept.map_monomials(lambda m: m.without(Family.Y))
    singles = Series({Monomial([(a(0), 1), (T, 1)]): 1, Monomial([(b(0), 1), (T, 1)]): 1}, max_t)
    return trees + singles


def _apply_D(s: Series, family: Family) -> Series:
    acc: dict[Monomial, Fraction] = {}
    for m, c in s.terms.items():
        for var, e in m:
            if var.family != family:
                continue
            k = var.index
            weight = c * e * max(k, 1)
            exps = dict(m)
            exps[var] -= 1
            up = VarId(family, k + 2)
            exps[up] = exps.get(up, 0) + 1
            exps[X] = exps.get(X, 0) + 1
            m2 = Monomial(exps)
            acc[m2] = acc.get(m2, 0) + weight
    return Series(acc, s.truncation)


def apply_Da(s: Series) -> Series:
    """``a2 x d/da0 + a3 x d/da1 + 2 a4 x d/da2 + 3 a5 x d/da3 + ...``"""
    return _apply_D(s, Family.A)


def apply_Db(s: Series) -> Series:
    """Black analogue of :func:`apply_Da`; it also emits ``x``."""
    return _apply_D(s, Family.B)


@lru_cache(maxsize=None)
def series_M(max_t: int) -> Series:
    """Generating function of 2^1-maps, truncated at ``t^max_t``."""
    if max_t < 2:
        raise ValueError("max_t must be >= 2")
    tree = series_T(max_t)
    return (apply_Da(tree) * apply_Db(tree)).truncate(max_t)


def passport_monomial(p: Passport, t_exp: int, x_exp: int) -> Monomial:
    pairs = [(a(d), k) for d, k in p.white] + [(b(d), k) for d, k in p.black]
    if t_exp:
        pairs.append((T, t_exp))
    if x_exp:
        pairs.append((X, x_exp))
    return Monomial(pairs)


def passport_of_monomial(m: Monomial) -> Passport:
    return Passport.from_counts(m.family_exponents(Family.A), m.family_exponents(Family.B))


def passport_count(p: Passport) -> int:
    """Number of 2^1-maps with passport ``p``."""
    e = p.edges
    if e < 2:
        return 0
    c = series_M(e).coefficient(passport_monomial(p, e, e))
    if c.denominator != 1:
        raise ArithmeticError(f"non-integral map count {c} for {p}")
    return int(c)


def tree_coefficient(p: Passport) -> Fraction:
    """Coefficient of ``p`` in ``T``: the automorphism-weighted tree count."""
    v = p.white_count + p.black_count
    return series_T(v).coefficient(passport_monomial(p, v, p.edges))


def passport_sort_key(p: Passport):
    return (p.edges, str(p))


def count_slice(edges: int) -> dict[Passport, int]:
    """All passports with ``edges`` edges and their 2^1-map counts."""
    if edges < 2:
        return {}
    out: dict[Passport, int] = {}
    for m, c in series_M(edges):
        if m.degree(T) == edges and m.degree(X) == edges:
            if c.denominator != 1 or c < 0:
                raise ArithmeticError(f"bad coefficient {c} at {m}")
            out[passport_of_monomial(m)] = int(c)
    return dict(sorted(out.items(), key=lambda kv: passport_sort_key(kv[0])))

