"""Passports: white and black vertex degree multisets."""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import MalformedPassport

_TOKEN = re.compile(r"^([ab])(\d+)(?:\^(\d+))?$")


def _freeze(m: Mapping[int, int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((d, k) for d, k in m.items() if k))


@dataclass(frozen=True)
class Passport:
    """Degree -> multiplicity for each colour, stored as sorted pairs.

    The degree sums of both colours must agree (the edge count).
    """

    white: tuple[tuple[int, int], ...]
    black: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for side in (self.white, self.black):
            for d, k in side:
                if d < 1 or k < 1:
                    raise MalformedPassport(f"bad degree/multiplicity {d}^{k}")
        if not self.white or not self.black:
            raise MalformedPassport("both colours need at least one vertex")
        sw = sum(d * k for d, k in self.white)
        sb = sum(d * k for d, k in self.black)
        if sw != sb:
            raise MalformedPassport(f"white degree sum {sw} != black degree sum {sb}")

    @classmethod
    def from_counts(cls, white: Mapping[int, int], black: Mapping[int, int]) -> "Passport":
        return cls(_freeze(white), _freeze(black))

    @classmethod
    def from_degrees(cls, white: Iterable[int], black: Iterable[int]) -> "Passport":
        return cls.from_counts(Counter(white), Counter(black))

    @classmethod
    def parse(cls, text: str) -> "Passport":
        """Parse ``a1^4 a2^2 b1 b7``; token order is irrelevant, repeats add up."""
        white: Counter = Counter()
        black: Counter = Counter()
        tokens = text.replace("*", " ").split()
        if not tokens:
            raise MalformedPassport("empty passport")
        for tok in tokens:
            m = _TOKEN.match(tok)
            if not m:
                raise MalformedPassport(f"bad passport token {tok!r}")
            side = white if m.group(1) == "a" else black
            side[int(m.group(2))] += int(m.group(3) or 1)
        return cls.from_counts(white, black)

    @property
    def edges(self) -> int:
        return sum(d * k for d, k in self.white)

    @property
    def white_count(self) -> int:
        return sum(k for _, k in self.white)

    @property
    def black_count(self) -> int:
        return sum(k for _, k in self.black)

    def side(self, color: str) -> tuple[tuple[int, int], ...]:
        if color == "white":
            return self.white
        if color == "black":
            return self.black
        raise ValueError(f"side must be 'white' or 'black', not {color!r}")

    def degrees(self, color: str) -> list[int]:
        return [d for d, k in self.side(color) for _ in range(k)]

    def __str__(self) -> str:
        def fmt(letter, side):
            return [f"{letter}{d}" if k == 1 else f"{letter}{d}^{k}" for d, k in side]

        return " ".join(fmt("a", self.white) + fmt("b", self.black))
