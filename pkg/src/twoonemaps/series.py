"""Exact sparse multivariate series over the rationals.

Variables come in five families: ``a_i`` and ``b_j`` (vertex degree
markers), ``t`` (vertex marker), ``x`` and ``y`` (edge markers).  A
:class:`Series` is a finite sum of monomials with nonzero
:class:`~fractions.Fraction` coefficients, optionally truncated in ``t``.
"""
from __future__ import annotations

import re
from enum import IntEnum
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple


class Family(IntEnum):
    A = 0
    B = 1
    T = 2
    X = 3
    Y = 4


class VarId(NamedTuple):
    family: Family
    index: int = 0

    def __str__(self) -> str:
        if self.family in (Family.A, Family.B):
            return f"{self.family.name.lower()}{self.index}"
        return self.family.name.lower()


def a(i: int) -> VarId:
    return VarId(Family.A, i)


def b(j: int) -> VarId:
    return VarId(Family.B, j)


T = VarId(Family.T)
X = VarId(Family.X)
Y = VarId(Family.Y)

_VAR_RE = re.compile(r"^([abtxy])(\d*)(?:\^(\d+))?$")


class Monomial(tuple):
    """Sorted tuple of ``(VarId, exponent)`` pairs with positive exponents."""

    __slots__ = ()

    def __new__(cls, pairs: Iterable[tuple[VarId, int]] | Mapping[VarId, int] = ()):
        if isinstance(pairs, Mapping):
            pairs = pairs.items()
        acc: dict[VarId, int] = {}
        for var, exp in pairs:
            if not isinstance(var, VarId):
                var = VarId(*var)
            if var.family not in (Family.A, Family.B) and var.index != 0:
                raise ValueError(f"variable {var.family.name} carries no index")
            acc[var] = acc.get(var, 0) + exp
        if any(e < 0 for e in acc.values()):
            raise ValueError("negative exponent")
        return super().__new__(cls, sorted((v, e) for v, e in acc.items() if e))

    @classmethod
    def _raw(cls, pairs) -> "Monomial":
        return tuple.__new__(cls, pairs)

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Parse ``a1^2*b2*t^3*x^2`` (``1`` is the empty monomial)."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        pairs = []
        for factor in text.split("*"):
            m = _VAR_RE.match(factor.strip())
            if not m:
                raise ValueError(f"bad factor {factor!r}")
            fam = Family[m.group(1).upper()]
            if fam in (Family.A, Family.B):
                if not m.group(2):
                    raise ValueError(f"missing index in {factor!r}")
                var = VarId(fam, int(m.group(2)))
            else:
                if m.group(2):
                    raise ValueError(f"unexpected index in {factor!r}")
                var = VarId(fam)
            pairs.append((var, int(m.group(3) or 1)))
        return cls(pairs)

    def degree(self, var: VarId) -> int:
        for v, e in self:
            if v == var:
                return e
        return 0

    def total_degree(self) -> int:
        return sum(e for _, e in self)

    def family_exponents(self, family: Family) -> dict[int, int]:
        return {v.index: e for v, e in self if v.family == family}

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        if not other:
            return self
        if not self:
            return other
        acc = dict(self)
        for v, e in other:
            acc[v] = acc.get(v, 0) + e
        return Monomial._raw(sorted(acc.items()))

    def without(self, family: Family) -> "Monomial":
        return Monomial._raw(tuple(p for p in self if p[0].family != family))

    def sort_key(self):
        return (self.total_degree(), tuple((v.family, v.index, e) for v, e in self))

    def __str__(self) -> str:
        if not self:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self)

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


ONE = Monomial()


def _coerce_monomial(m) -> Monomial:
    if isinstance(m, Monomial):
        return m
    if isinstance(m, str):
        return Monomial.parse(m)
    return Monomial(m)


def _min_trunc(p: int | None, q: int | None) -> int | None:
    if p is None:
        return q
    if q is None:
        return p
    return min(p, q)


class Series:
    """Immutable sparse series ``{Monomial: Fraction}``.

    ``truncation`` bounds the tracked exponent of ``t``; ``None`` means
    unbounded.  Terms above the bound are dropped on construction.
    """

    __slots__ = ("_terms", "_truncation")

    def __init__(self, terms: Mapping | Iterable = (), truncation: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for m, c in items:
            m = _coerce_monomial(m)
            if truncation is not None and m.degree(T) > truncation:
                continue
            acc[m] = acc.get(m, 0) + Fraction(c)
        self._terms = {m: c for m, c in acc.items() if c}
        self._truncation = truncation

    @classmethod
    def _wrap(cls, terms: dict, truncation: int | None) -> "Series":
        s = object.__new__(cls)
        s._terms = terms
        s._truncation = truncation
        return s

    @classmethod
    def var(cls, var: VarId, truncation: int | None = None) -> "Series":
        return cls({Monomial([(var, 1)]): 1}, truncation)

    @classmethod
    def constant(cls, c, truncation: int | None = None) -> "Series":
        return cls({ONE: c}, truncation)

    @classmethod
    def parse(cls, text: str, truncation: int | None = None) -> "Series":
        """Inverse of ``str``: ``3/2*a1^2*t + -1*b2``."""
        text = text.strip()
        if not text or text == "0":
            return cls((), truncation)
        terms = []
        for chunk in text.split(" + "):
            factors = chunk.strip().split("*")
            coeff = Fraction(1)
            if re.match(r"^-?\d+(/\d+)?$", factors[0]):
                coeff = Fraction(factors.pop(0))
            elif factors[0].startswith("-"):
                coeff = Fraction(-1)
                factors[0] = factors[0][1:]
            terms.append((Monomial.parse("*".join(factors)) if factors else ONE, coeff))
        return cls(terms, truncation)

    @property
    def truncation(self) -> int | None:
        return self._truncation

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        for m in sorted(self._terms, key=Monomial.sort_key):
            yield m, self._terms[m]

    def coefficient(self, m) -> Fraction:
        return self._terms.get(_coerce_monomial(m), Fraction(0))

    def truncate(self, n: int | None) -> "Series":
        n = _min_trunc(self._truncation, n)
        if n is None:
            return self
        return Series._wrap({m: c for m, c in self._terms.items() if m.degree(T) <= n}, n)

    def __add__(self, other) -> "Series":
        if not isinstance(other, Series):
            other = Series.constant(other)
        trunc = _min_trunc(self._truncation, other._truncation)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            v = acc.get(m, 0) + c
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        return Series._wrap(acc, None).truncate(trunc)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series._wrap({m: -c for m, c in self._terms.items()}, self._truncation)

    def __sub__(self, other) -> "Series":
        if not isinstance(other, Series):
            other = Series.constant(other)
        return self + (-other)

    def scale(self, c) -> "Series":
        c = Fraction(c)
        if not c:
            return Series._wrap({}, self._truncation)
        return Series._wrap({m: v * c for m, v in self._terms.items()}, self._truncation)

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            return self.scale(other)
        trunc = _min_trunc(self._truncation, other._truncation)
        acc: dict[Monomial, Fraction] = {}
        # bucket by t-degree so truncated pairs are skipped without forming them
        right: dict[int, list] = {}
        for m, c in other._terms.items():
            right.setdefault(m.degree(T), []).append((m, c))
        for m1, c1 in self._terms.items():
            d1 = m1.degree(T)
            for d2, bucket in right.items():
                if trunc is not None and d1 + d2 > trunc:
                    continue
                for m2, c2 in bucket:
                    m = m1 * m2
                    acc[m] = acc.get(m, 0) + c1 * c2
        return Series._wrap({m: c for m, c in acc.items() if c}, trunc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Series":
        if n < 0:
            raise ValueError("negative power")
        result = Series.constant(1, self._truncation)
        for _ in range(n):
            result = result * self
        return result

    def filter(self, predicate: Callable[[Monomial], bool]) -> "Series":
        return Series._wrap({m: c for m, c in self._terms.items() if predicate(m)}, self._truncation)

    def map_monomials(self, f: Callable[[Monomial], Monomial]) -> "Series":
        """Apply ``f`` to every monomial, merging collisions."""
        acc: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            m2 = f(m)
            acc[m2] = acc.get(m2, 0) + c
        return Series._wrap({m: c for m, c in acc.items() if c}, None).truncate(self._truncation)

    def derivative(self, var: VarId) -> "Series":
        acc: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            e = m.degree(var)
            if e:
                m2 = Monomial._raw(tuple((v, k - 1 if v == var else k) for v, k in m if v != var or k > 1))
                acc[m2] = acc.get(m2, 0) + c * e
        return Series._wrap(acc, self._truncation)

    def __eq__(self, other) -> bool:
        if isinstance(other, Series):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self:
            if not m:
                parts.append(str(c))
            elif c == 1:
                parts.append(str(m))
            elif c == -1:
                parts.append(f"-{m}")
            else:
                parts.append(f"{c}*{m}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Series({str(self)!r}, truncation={self._truncation})"
