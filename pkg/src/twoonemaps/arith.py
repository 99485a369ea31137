"""Arithmetic constraints for 2^1-maps with p+1 edges.

Covers the s-invariant of a passport side, the three valuation cases for
normalized models, the admissible ramification indices they imply, the
degree decompositions ``d = sum e_i n_i`` compatible with them, and
p-adic Newton polygons of integer polynomials.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Sequence

from .errors import DegenerateN, NotPrimePlusOne, ZeroPolynomial
from .passport import Passport

SIDES = ("white", "black")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def s_invariant(p: Passport, side: str = "white") -> int | None:
    """gcd of ``s_i s_j`` (2 <= i < j <= k) and ``s_i (s_i - 1)`` (2 <= i <= k),
    ``s_i`` being the number of vertices of degree ``i`` on ``side``.

    Returns ``None`` when every generator vanishes: no constraint follows.
    """
    counts = dict(p.side(side))
    top = max(counts)
    s = [counts.get(i, 0) for i in range(top + 1)]
    gens = [s[i] * (s[i] - 1) for i in range(2, top + 1)]
    gens += [s[i] * s[j] for i, j in combinations(range(2, top + 1), 2)]
    g = reduce(math.gcd, gens, 0)
    return g or None


def side_n(p: Passport, side: str) -> int:
    """Vertex count of ``side`` minus one."""
    return (p.white_count if side == "white" else p.black_count) - 1


@dataclass(frozen=True)
class ValuationCase:
    case_id: str  # "ExceptionalUnit" | "Uniform" | "SmallException"
    vertex_valuation: Fraction  # v(x_i) for the non-exceptional vertices
    difference_valuation: Fraction  # v(x_i - x_j)
    kappa: int | None = None  # valuation of the exceptional degree-1 vertex (case 3)


def valuation_cases(n: int, e: int) -> list[ValuationCase]:
    """Concrete valuations allowed for a normalized model with ``n + 1``
    white vertices over a prime of ramification index ``e``."""
    if e < 1:
        raise ValueError("ramification index must be positive")
    if n == 1:
        raise DegenerateN("n = 1: the (n - 1) denominators vanish")
    if n < 1:
        raise ValueError("n must be at least 1")
    v1 = Fraction(e, n - 1)
    v2 = Fraction(e, n + 1)
    out = [ValuationCase("ExceptionalUnit", v1, v1), ValuationCase("Uniform", v2, v2)]
    kappa = 1
    while (n + 1) * kappa < e:  # l = (e - 2 kappa)/(n - 1) > kappa
        l = Fraction(e - 2 * kappa, n - 1)
        out.append(ValuationCase("SmallException", l, l, kappa))
        kappa += 1
    return out


def _bullets(s: int, n: int, e: int, small: int | None = None) -> list[int]:
    """Which of the three divisibility conditions hold for ramification ``e``.

    ``small`` fixes the parameter of the third condition (the alternative
    reading where it is the maximal vertex degree); by default it ranges
    over all integers ``kappa >= 1``.
    """
    hits = []
    if (s * e) % (n - 1) == 0:
        hits.append(1)
    if (s * e) % (n + 1) == 0:
        hits.append(2)
    kappas = [small] if small is not None else range(1, e + 1)
    for kappa in kappas:
        num = s * (e - 2 * kappa)
        if num % (n - 1) == 0 and Fraction(e - 2 * kappa, n - 1) > kappa:
            hits.append(3)
            break
    return hits


@dataclass
class RamificationReport:
    side: str
    s: int | None
    n: int
    admissible: list[tuple[int, list[int]]]  # (e_tau, satisfied conditions); [] = unconstrained
    e_max: int
    alt_third: list[int] = field(default_factory=list)  # e_tau passing condition 3 read with max degree

    @property
    def unconstrained(self) -> bool:
        return self.s is None

    def indices(self) -> list[int]:
        return [e for e, _ in self.admissible]


def _check_prime_plus_one(p: Passport) -> None:
    if not is_prime(p.edges - 1):
        raise NotPrimePlusOne(f"edge count {p.edges} is not a prime plus one")


def admissible_ramifications(p: Passport, side: str, e_max: int) -> RamificationReport:
    """Ramification indices ``1..e_max`` allowed on ``side``.

    ``e`` is admissible when ``s e / (n - 1)`` or ``s e / (n + 1)`` is an
    integer, or ``s (e - 2 kappa) / (n - 1)`` is an integer for some
    ``kappa >= 1`` with ``(e - 2 kappa) / (n - 1) > kappa``.
    """
    _check_prime_plus_one(p)
    if e_max < 1:
        raise ValueError("e_max must be positive")
    s = s_invariant(p, side)
    n = side_n(p, side)
    if s is None:
        return RamificationReport(side, None, n, [(e, []) for e in range(1, e_max + 1)], e_max)
    if n == 1:
        raise DegenerateN(f"{side} side has two vertices; the (n - 1) denominators vanish")
    admissible = []
    alt = []
    kmax = max(p.side(side))[0]
    for e in range(1, e_max + 1):
        hits = _bullets(s, n, e)
        if hits:
            admissible.append((e, hits))
        if 3 in _bullets(s, n, e, small=kmax):
            alt.append(e)
    return RamificationReport(side, s, n, admissible, e_max, alt)


def _pair_multisets(d: int, es: Sequence[int], start: int = 0) -> list[list[tuple[int, int]]]:
    """Multisets of ``(e, n)`` with ``sum e n = d``, ``e`` from ``es``, ``n >= 1``.

    Pairs are generated in non-decreasing order to avoid repeats.
    """
    if d == 0:
        return [[]]
    pairs = [(e, k) for e in es for k in range(1, d // e + 1)]
    pairs.sort()
    out = []
    for idx in range(start, len(pairs)):
        e, k = pairs[idx]
        if e * k > d:
            continue
        for rest in _pair_multisets(d - e * k, es, idx):
            out.append([(e, k)] + rest)
    return out


def _partitions(n: int, largest: int | None = None):
    if largest is None:
        largest = n
    if n == 0:
        yield []
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield [first] + rest


@dataclass
class OrbitDecomposition:
    total: int
    admissible: list[int]
    # each candidate: [(orbit size d, [decompositions of d as [(e_i, n_i), ...]]), ...]
    candidates: list[list[tuple[int, list[list[tuple[int, int]]]]]]

    def partitions(self) -> list[list[int]]:
        return [[d for d, _ in cand] for cand in self.candidates]


def orbit_decompositions(p: Passport, side: str, degree_total: int) -> OrbitDecomposition:
    """Partitions of ``degree_total`` (the number of maps) into parts that
    each admit ``d = sum e_i n_i`` with every ``e_i`` admissible."""
    report = admissible_ramifications(p, side, degree_total)
    es = report.indices()
    cache: dict[int, list] = {}

    def decomps(d: int):
        if d not in cache:
            cache[d] = _pair_multisets(d, es)
        return cache[d]

    candidates = []
    for part in _partitions(degree_total):
        parts = sorted(part)
        if all(decomps(d) for d in parts):
            candidates.append([(d, decomps(d)) for d in parts])
    candidates.sort(key=lambda c: (len(c), [d for d, _ in c]), reverse=True)
    return OrbitDecomposition(degree_total, es, candidates)


def valuation(n: int, prime: int) -> float | int:
    """Exact ``prime``-adic valuation of an integer; ``inf`` for 0."""
    if n == 0:
        return math.inf
    n = abs(n)
    v = 0
    while n % prime == 0:
        n //= prime
        v += 1
    return v


@dataclass(frozen=True)
class NewtonPolygon:
    points: tuple[tuple[int, float | int], ...]
    segments: tuple[tuple[Fraction, int], ...]  # (slope, horizontal length), left to right

    def vertices(self) -> list[tuple[int, int]]:
        finite = [(i, v) for i, v in self.points if v != math.inf]
        x, y = finite[0]
        out = [(x, y)]
        for slope, length in self.segments:
            x, y = x + length, y + slope * length
            out.append((x, int(y)))
        return out


def _check_poly(coeffs: Sequence[int], prime: int) -> None:
    if not is_prime(prime):
        raise ValueError(f"{prime} is not prime")
    if not any(coeffs):
        raise ZeroPolynomial("all coefficients vanish")
    if coeffs[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")


def newton_polygon(coeffs: Sequence[int], prime: int) -> NewtonPolygon:
    """Lower convex hull of ``(i, v_p(c_i))``, coefficients lowest degree first."""
    coeffs = [int(c) for c in coeffs]
    _check_poly(coeffs, prime)
    points = tuple((i, valuation(c, prime)) for i, c in enumerate(coeffs))
    pts = [(i, v) for i, v in points if v != math.inf]
    hull: list[tuple[int, int]] = []
    for pt in pts:
        # drop the last hull point while it lies on or above the chord to pt
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    segments = tuple(
        (Fraction(y2 - y1, x2 - x1), x2 - x1) for (x1, y1), (x2, y2) in zip(hull, hull[1:])
    )
    return NewtonPolygon(points, segments)


def root_valuations(coeffs: Sequence[int], prime: int) -> list[Fraction]:
    """Valuations of the nonzero roots with multiplicity, segment by segment.

    A segment of slope ``-v`` and length ``L`` gives ``L`` roots of
    valuation ``v``; roots at zero (vanishing low coefficients) are left out.
    """
    poly = newton_polygon(coeffs, prime)
    out = []
    for slope, length in poly.segments:
        out.extend([-slope] * length)
    return out


def format_valuations(vals: Sequence[Fraction]) -> str:
    """``1/3 x3, 1/5 x5`` style multiset rendering, in order of appearance."""
    groups: list[list] = []
    for v in vals:
        if groups and groups[-1][0] == v:
            groups[-1][1] += 1
        else:
            groups.append([v, 1])
    return ", ".join(f"{v} x{k}" for v, k in groups)


def _fmt_decomp(d: int, dec: list[tuple[int, int]]) -> str:
    return f"{d}=" + "+".join(f"{e}*{k}" for e, k in dec)


def analyze_report(p: Passport, emax: int | None = None, map_count: int | None = None) -> str:
    """Plain-text report: S-INVARIANT, ADMISSIBLE-E, ORBIT-DECOMPOSITIONS."""
    from .genfun import passport_count

    _check_prime_plus_one(p)
    if map_count is None:
        map_count = passport_count(p)
    if emax is None:
        emax = max(map_count, 1)
    lines = [f"passport: {p}", f"edges: {p.edges} = {p.edges - 1}+1", f"maps: {map_count}", ""]
    lines.append("S-INVARIANT")
    for side in SIDES:
        s = s_invariant(p, side)
        lines.append(f"s({side})={s if s is not None else 'none (no constraint)'}  n={side_n(p, side)}")
    lines.append("")
    lines.append("ADMISSIBLE-E")
    for side in SIDES:
        rep = admissible_ramifications(p, side, emax)
        if rep.unconstrained:
            lines.append(f"{side}: all e in 1..{emax} (no constraint)")
            continue
        body = ", ".join(f"{e}[{','.join(map(str, h))}]" for e, h in rep.admissible) or "none"
        lines.append(f"{side}: {body}")
        third = [e for e, h in rep.admissible if h == [3]]
        if third:
            lines.append(f"{side}: admitted only by the third condition: {', '.join(map(str, third))}")
        kappa_read = sorted(e for e, h in rep.admissible if 3 in h)
        if kappa_read != rep.alt_third:
            alt = ", ".join(map(str, rep.alt_third)) or "none"
            lines.append(f"{side}: third condition with k = max degree instead: {alt}")
    lines.append("")
    lines.append("ORBIT-DECOMPOSITIONS")
    for side in SIDES:
        if map_count < 1:
            lines.append(f"{side}: no maps")
            continue
        od = orbit_decompositions(p, side, map_count)
        if s_invariant(p, side) is None:
            lines.append(f"{side}: unconstrained ({len(od.candidates)} partitions of {map_count})")
            continue
        if not od.candidates:
            lines.append(f"{side}: none")
        for cand in od.candidates:
            parts = "{" + ",".join(str(d) for d, _ in cand) + "}"
            detail = "; ".join(
                " | ".join(_fmt_decomp(d, dec) for dec in decs) for d, decs in cand
            )
            lines.append(f"{side}: {parts}  {detail}")
    return "\n".join(lines) + "\n"
