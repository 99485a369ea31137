"""Brute-force enumeration of bipartite plane trees and 2^1-maps.

A map is a rotation system on darts ``0..2E-1``: ``sigma`` is the
counterclockwise successor of each dart around its vertex and the edge
involution pairs ``2i`` with ``2i+1`` (``d ^ 1``).  ``color[d]`` is the
colour of the vertex dart ``d`` leaves (0 white, 1 black).  Faces are the
cycles of ``d -> sigma[d ^ 1]``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from . import _kernels
from .errors import BudgetExceeded, NotATree
from .passport import Passport

WHITE, BLACK = 0, 1
DEFAULT_MAX_EDGES = 10

CanonicalCode = tuple  # (root colour, sigma labels...), lexicographically minimal over roots


@dataclass(frozen=True)
class PlaneMap:
    sigma: tuple[int, ...]
    color: tuple[int, ...]
    lone: int | None = None  # colour of the single vertex of the edgeless tree

    def __post_init__(self):
        n = len(self.sigma)
        if n % 2 or len(self.color) != n:
            raise ValueError("dart count must be even and match the colour list")
        if n == 0:
            if self.lone not in (WHITE, BLACK):
                raise ValueError("edgeless map needs the colour of its vertex")
            return
        if sorted(self.sigma) != list(range(n)):
            raise ValueError("sigma is not a permutation")
        for d in range(n):
            if self.color[self.sigma[d]] != self.color[d]:
                raise ValueError("vertex darts carry different colours")
            if self.color[d ^ 1] == self.color[d]:
                raise ValueError("edge joins two vertices of the same colour")

    @property
    def dart_count(self) -> int:
        return len(self.sigma)

    @property
    def edge_count(self) -> int:
        return len(self.sigma) // 2

    def _cycles(self, perm) -> list[list[int]]:
        seen = [False] * len(perm)
        out = []
        for d in range(len(perm)):
            if not seen[d]:
                cyc = []
                e = d
                while not seen[e]:
                    seen[e] = True
                    cyc.append(e)
                    e = perm[e]
                out.append(cyc)
        return out

    def vertices(self) -> list[tuple[int, list[int]]]:
        """``(colour, ccw dart cycle)`` per vertex, ordered by smallest dart."""
        if not self.sigma:
            return [(self.lone, [])]
        return [(self.color[c[0]], c) for c in self._cycles(self.sigma)]

    def faces(self) -> list[list[int]]:
        if not self.sigma:
            return [[]]
        phi = [self.sigma[d ^ 1] for d in range(len(self.sigma))]
        return self._cycles(phi)

    def face_degrees(self) -> list[int]:
        return sorted(len(f) for f in self.faces())

    def euler_characteristic(self) -> int:
        return len(self.vertices()) - self.edge_count + len(self.faces())

    def is_connected(self) -> bool:
        n = len(self.sigma)
        if n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for e in (self.sigma[d], d ^ 1):
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        return len(seen) == n

    def is_plane(self) -> bool:
        return self.is_connected() and self.euler_characteristic() == 2

    def is_tree(self) -> bool:
        return self.is_plane() and len(self.faces()) == 1

    def passport(self) -> Passport:
        white: Counter = Counter()
        black: Counter = Counter()
        for col, cyc in self.vertices():
            (white if col == WHITE else black)[len(cyc)] += 1
        return Passport.from_counts(white, black)

    def canonical_code(self) -> CanonicalCode:
        if not self.sigma:
            return (self.lone,)
        code, _, _ = _kernels.canonical_code(self.sigma, self.color)
        return code

    def canonical(self) -> "PlaneMap":
        """Isomorphic copy relabelled by the minimal rooting."""
        if not self.sigma:
            return self
        return decode(self.canonical_code())

    def to_text(self) -> str:
        lines = [f"darts {self.dart_count}"]
        for col, cyc in self.vertices():
            tag = "w" if col == WHITE else "b"
            lines.append(f"{tag}: " + " ".join(map(str, cyc)) if cyc else f"{tag}:")
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "PlaneMap":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        head = lines[0].split()
        if head[0] != "darts":
            raise ValueError("map block must start with 'darts <n>'")
        n = int(head[1])
        sigma = [-1] * n
        color = [-1] * n
        lone = None
        for ln in lines[1:]:
            tag, _, rest = ln.partition(":")
            col = {"w": WHITE, "b": BLACK}[tag.strip()]
            cyc = [int(v) for v in rest.split()]
            if not cyc:
                lone = col
            for i, d in enumerate(cyc):
                sigma[d] = cyc[(i + 1) % len(cyc)]
                color[d] = col
        if -1 in sigma:
            raise ValueError("every dart must appear in exactly one vertex")
        return cls(tuple(sigma), tuple(color), lone)


def decode(code: CanonicalCode) -> PlaneMap:
    """Inverse of :meth:`PlaneMap.canonical_code`."""
    if len(code) == 1:
        return PlaneMap((), (), code[0])
    sigma = tuple(code[1:])
    n = len(sigma)
    color = [-1] * n
    color[0] = code[0]
    stack = [0]
    while stack:
        d = stack.pop()
        for e, c in ((sigma[d], color[d]), (d ^ 1, 1 - color[d])):
            if color[e] < 0:
                color[e] = c
                stack.append(e)
    return PlaneMap(sigma, tuple(color))


def mirror(m: PlaneMap) -> PlaneMap:
    """Orientation-reversed copy (clockwise rotation becomes counterclockwise)."""
    if not m.sigma:
        return m
    inv = [0] * m.dart_count
    for d, s in enumerate(m.sigma):
        inv[s] = d
    return PlaneMap(tuple(inv), m.color)


def isomorphic(m1: PlaneMap, m2: PlaneMap) -> bool:
    return m1.canonical_code() == m2.canonical_code()


def aut_order(t: PlaneMap) -> int:
    """Colour- and orientation-preserving automorphisms of a plane tree."""
    if not t.is_tree():
        raise NotATree("automorphism count is only defined here for plane trees")
    if not t.sigma:
        return 1
    _, _, count = _kernels.canonical_code(t.sigma, t.color)
    return count


def _check_budget(edges: int, max_edges: int) -> None:
    if edges < 0:
        raise ValueError("edge count must be non-negative")
    if edges > max_edges:
        raise BudgetExceeded(f"{edges} edges exceeds the enumeration guard of {max_edges}")


def _add_leaf(m: PlaneMap, after: int | None) -> PlaneMap:
    """Attach a new leaf in the corner following dart ``after`` (ccw)."""
    n = m.dart_count
    sigma = list(m.sigma) + [n, n + 1]
    if after is None:
        col = m.lone
    else:
        col = m.color[after]
        sigma[n] = m.sigma[after]
        sigma[after] = n
    color = list(m.color) + [col, 1 - col]
    return PlaneMap(tuple(sigma), tuple(color))


@lru_cache(maxsize=None)
def _trees(edges: int) -> tuple[tuple[PlaneMap, int], ...]:
    if edges == 0:
        return ((PlaneMap((), (), WHITE), 1), (PlaneMap((), (), BLACK), 1))
    found: dict[tuple, PlaneMap] = {}
    for parent, _ in _trees(edges - 1):
        corners = [None] if not parent.sigma else range(parent.dart_count)
        for d in corners:
            child = _add_leaf(parent, d)
            code, _, _ = _kernels.canonical_code(child.sigma, child.color)
            if code not in found:
                found[code] = decode(code)
    out = []
    for code in sorted(found):
        t = found[code]
        out.append((t, aut_order(t)))
    return tuple(out)


def enumerate_plane_trees(edges: int, max_edges: int = DEFAULT_MAX_EDGES) -> list[tuple[PlaneMap, int]]:
    """One representative per bipartite plane tree with ``edges`` edges,
    paired with its automorphism group order, sorted by canonical code."""
    _check_budget(edges, max_edges)
    return list(_trees(edges))


def weighted_tree_count(p: Passport) -> Fraction:
    """``(n-1)! (m-1)! / (prod k_i! prod l_j!)`` for ``n`` white, ``m`` black vertices."""
    n, m = p.white_count, p.black_count
    denom = prod(factorial(k) for _, k in p.white) * prod(factorial(k) for _, k in p.black)
    return Fraction(factorial(n - 1) * factorial(m - 1), denom)


def _corner_representatives(t: PlaneMap, col: int) -> list[int | None]:
    """One dart per automorphism orbit of corners at vertices of colour ``col``."""
    if not t.sigma:
        return [None] if t.lone == col else []
    seen = set()
    reps = []
    for d in range(t.dart_count):
        if t.color[d] != col:
            continue
        code, _ = _kernels.rooted_code(t.sigma, t.color, d)
        key = tuple(code)
        if key not in seen:
            seen.add(key)
            reps.append(d)
    return reps


def _glue(t1: PlaneMap, v_corner: int | None, t2: PlaneMap, u_corner: int | None) -> PlaneMap:
    """Join a white corner of ``t1`` to a black corner of ``t2`` by a double edge."""
    n1, n2 = t1.dart_count, t2.dart_count
    sigma = list(t1.sigma) + [s + n1 for s in t2.sigma]
    color = list(t1.color) + list(t2.color)
    w1 = n1 + n2
    b1, w2, b2 = w1 + 1, w1 + 2, w1 + 3
    sigma += [0, 0, 0, 0]
    color += [WHITE, BLACK, WHITE, BLACK]
    # ccw order at v: ..., w2, w1, ...; at u: ..., b1, b2, ...  (digon face {w1, b2})
    if v_corner is None:
        sigma[w2], sigma[w1] = w1, w2
    else:
        nxt = sigma[v_corner]
        sigma[v_corner], sigma[w2], sigma[w1] = w2, w1, nxt
    if u_corner is None:
        sigma[b1], sigma[b2] = b2, b1
    else:
        u = u_corner + n1
        nxt = sigma[u]
        sigma[u], sigma[b1], sigma[b2] = b1, b2, nxt
    return PlaneMap(tuple(sigma), tuple(color))


@lru_cache(maxsize=None)
def _maps21(edges: int) -> tuple[PlaneMap, ...]:
    found: dict[tuple, PlaneMap] = {}
    raw = 0
    for e1 in range(edges - 1):
        e2 = edges - 2 - e1
        for t1, _ in _trees(e1):
            white_reps = _corner_representatives(t1, WHITE)
            if not white_reps:
                continue
            for t2, _ in _trees(e2):
                black_reps = _corner_representatives(t2, BLACK)
                for vc in white_reps:
                    for uc in black_reps:
                        m = _glue(t1, vc, t2, uc)
                        raw += 1
                        code, _, mult = _kernels.canonical_code(m.sigma, m.color)
                        # the lone 2-edge map swaps its two digons; beyond that the digon is unique
                        if mult != 1 and edges > 2:
                            raise AssertionError("2^1-map with a nontrivial automorphism")
                        if code in found:
                            raise AssertionError("2^1-map constructed twice")
                        found[code] = decode(code)
    if raw != len(found):
        raise AssertionError("construction count differs from class count")
    return tuple(found[c] for c in sorted(found))


def enumerate_21maps(edges: int, max_edges: int = DEFAULT_MAX_EDGES) -> list[PlaneMap]:
    """All 2^1-maps with ``edges`` edges up to isomorphism, sorted by canonical code.

    Every map arises from exactly one ordered pair of trees with marked
    white/black corners (up to automorphism) by inserting the double edge;
    this is asserted during construction.
    """
    if edges < 2:
        raise ValueError("a 2^1-map has at least 2 edges")
    _check_budget(edges, max_edges)
    return list(_maps21(edges))


def maps_with_passport(p: Passport, max_edges: int = DEFAULT_MAX_EDGES) -> list[PlaneMap]:
    return [m for m in enumerate_21maps(p.edges, max_edges) if m.passport() == p]


def count_by_passport(maps) -> dict[Passport, int]:
    return dict(Counter(m.passport() for m in maps))


def passport_of(m: PlaneMap) -> Passport:
    return m.passport()


def face_degrees(m: PlaneMap) -> list[int]:
    return m.face_degrees()
