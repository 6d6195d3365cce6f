"""
Partitions and the combinatorics of Young diagrams.

Diagrams use English notation: box (i, j) sits in row i, column j, both
counted from 1, and has content j - i.

>>> lam = Partition([4, 2, 1])
>>> contents(lam)
(-2, -1, 0, 0, 1, 2, 3)
>>> e_core(Partition([5, 3, 2]), 4)
Partition(1, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .errors import check_size, guards
from .exactalg import LaurentQ, XPoly, qnumber

__all__ = [
    "Partition", "StandardTableau", "BorderStrip",
    "partitions", "partitions_up_to",
    "contents", "q_contents", "contents_mod_e",
    "removable_border_strips", "e_core",
    "standard_tableaux", "num_standard_tableaux",
    "content_polynomial",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers; trailing zeros are dropped."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Comma-separated parts; the empty string is the empty partition."""
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        return cls(int(p) for p in text.replace(" ", "").split(",") if p)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def support_rank(self) -> int:
        """|mu| + l(mu): the least n for which S_n has reduced cycle type mu."""
        return sum(self) + len(self)

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def boxes(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self, 1) for j in range(1, row + 1)]

    def __repr__(self):
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")" if self else "()"


def partitions(n: int) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order: (n), (n-1,1), ..."""
    def rec(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest
    for parts in rec(n, n):
        yield Partition(parts)


def partitions_up_to(k: int) -> list[Partition]:
    return [p for size in range(k + 1) for p in partitions(size)]


def contents(lam: Partition) -> tuple[int, ...]:
    return tuple(sorted(j - i for i, j in lam.boxes()))


def q_contents(lam: Partition) -> tuple[LaurentQ, ...]:
    return tuple(qnumber(c) for c in contents(lam))


def contents_mod_e(lam: Partition, e: int) -> tuple[int, ...]:
    if e < 1:
        raise ValueError("e must be positive")
    return tuple(sorted(c % e for c in contents(lam)))


def content_polynomial(lam: Partition) -> XPoly:
    """prod over boxes of (x + [content]_q)."""
    out = XPoly([1])
    for c in contents(lam):
        out = out * XPoly([qnumber(c), 1])
    return out


@dataclass(frozen=True)
class BorderStrip:
    boxes: frozenset

    @property
    def top_right(self) -> tuple[int, int]:
        return min(self.boxes, key=lambda b: (b[0], -b[1]))

    def __len__(self):
        return len(self.boxes)

    def remove_from(self, lam: Partition) -> Partition:
        rows = list(lam)
        for i, _ in self.boxes:
            rows[i - 1] -= 1
        return Partition(sorted(rows, reverse=True))


def removable_border_strips(lam: Partition, e: int) -> list[BorderStrip]:
    """
    All border strips of size e whose removal leaves a partition, ordered by
    the row of their top-right box.

    Each one is the rim segment cut out by a box of hook length e.
    """
    if e < 1:
        raise ValueError("e must be positive")
    conj = lam.conjugate()
    diagram = set(lam.boxes())
    strips = []
    for i, row in enumerate(lam, 1):
        for j in range(1, row + 1):
            if (row - j) + (conj[j - 1] - i) + 1 != e:
                continue
            rim = frozenset(
                (r, c) for r, c in diagram
                if r >= i and c >= j and (r + 1, c + 1) not in diagram
            )
            strips.append(BorderStrip(rim))
    strips.sort(key=lambda s: s.top_right)
    return strips


def e_core(lam: Partition, e: int) -> Partition:
    """Remove size-e border strips (first in order each time) until none is left."""
    current = Partition(lam)
    while True:
        strips = removable_border_strips(current, e)
        if not strips:
            return current
        current = strips[0].remove_from(current)


@dataclass(frozen=True)
class StandardTableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.shape.size
        if tuple(len(r) for r in self.rows) != tuple(self.shape):
            raise ValueError("rows do not match the shape")
        if sorted(x for r in self.rows for x in r) != list(range(1, n + 1)):
            raise ValueError("labels must be 1..n")
        for r in self.rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError("rows must increase")
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(lower[j] <= upper[j] for j in range(len(lower))):
                raise ValueError("columns must increase")

    @property
    def size(self) -> int:
        return self.shape.size

    def position(self, m: int) -> tuple[int, int]:
        for i, r in enumerate(self.rows, 1):
            if m in r:
                return i, r.index(m) + 1
        raise KeyError(m)

    def content(self, m: int) -> int:
        """c_T(m): content of the box labelled m."""
        i, j = self.position(m)
        return j - i

    def column_word(self) -> tuple[int, ...]:
        cols = self.shape.conjugate()
        return tuple(self.rows[i][j] for j in range(len(cols)) for i in range(cols[j]))

    def swap(self, a: int, b: int) -> StandardTableau | None:
        """Exchange labels a and b; None if the result is not standard."""
        swapped = tuple(tuple(b if x == a else a if x == b else x for x in r) for r in self.rows)
        try:
            return StandardTableau(self.shape, swapped)
        except ValueError:
            return None


def standard_tableaux(lam: Partition, max_size: int | None = None) -> list[StandardTableau]:
    """All standard tableaux of shape lam, sorted by column reading word."""
    check_size(lam.size, guards.max_enum if max_size is None else max_size, "|lambda|")
    return list(_standard_tableaux(Partition(lam)))


@lru_cache(maxsize=None)
def _standard_tableaux(lam: Partition) -> tuple[StandardTableau, ...]:
    n = lam.size
    found = []

    def place(rows: list[list[int]], m: int):
        if m > n:
            found.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(m)
                place(rows, m + 1)
                rows[i].pop()

    place([[] for _ in lam], 1)
    tabs = [StandardTableau(lam, r) for r in found]
    tabs.sort(key=StandardTableau.column_word)
    return tuple(tabs)


def num_standard_tableaux(lam: Partition) -> int:
    """Hook length formula."""
    conj = lam.conjugate()
    hooks = 1
    for i, j in lam.boxes():
        hooks *= (lam[i - 1] - j) + (conj[j - 1] - i) + 1
    return factorial(lam.size) // hooks
