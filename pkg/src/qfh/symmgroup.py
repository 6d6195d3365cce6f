"""
Permutations in one-line notation, reduced words, cycle types, and the
integral group algebra of S_n.

Products compose as functions: ``(w * v)(i) = w(v(i))``. Right
multiplication by ``s_i`` therefore swaps the entries in positions i, i+1.

>>> w = Permutation.from_cycles("(1 3)", 3)
>>> w, length(w), reduced_word(w)
(Permutation(3, 2, 1), 3, [1, 2, 1])
>>> reduced_cycle_type(Permutation.from_cycles("(1 2 3)(4 5)", 6))
Partition(2, 1)
"""

from __future__ import annotations

import re
from collections import Counter, defaultdict
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterable

from .combinat import Partition
from .errors import check_size, guards

__all__ = [
    "Permutation", "length", "reduced_word", "from_word", "cycles", "cycle_type",
    "reduced_cycle_type", "class_elements", "class_size", "minimal_length_class_reps",
    "minimal_rep", "reduced_cycle_types", "all_permutations",
    "ga_mul", "ga_add", "ga_scale", "class_sum", "classical_jm",
]


class Permutation(tuple):
    """A bijection of {1..n} stored as its image list."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation in one-line notation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def simple(cls, i: int, n: int) -> Permutation:
        """The adjacent transposition s_i = (i i+1)."""
        if not 1 <= i < n:
            raise ValueError(f"s_{i} does not exist in S_{n}")
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        return cls(img)

    @classmethod
    def transposition(cls, a: int, b: int, n: int) -> Permutation:
        img = list(range(1, n + 1))
        img[a - 1], img[b - 1] = img[b - 1], img[a - 1]
        return cls(img)

    @classmethod
    def from_cycles(cls, text: str | Iterable[Iterable[int]], n: int) -> Permutation:
        """Build from cycle notation such as "(1 2 3)(4 5)" or [[1, 2, 3], [4, 5]]."""
        if isinstance(text, str):
            groups = re.findall(r"\(([^()]*)\)", text)
            if re.sub(r"\(([^()]*)\)", "", text).strip():
                raise ValueError(f"cannot parse cycle notation: {text!r}")
            cyc = [[int(x) for x in re.split(r"[\s,]+", g.strip()) if x] for g in groups]
        else:
            cyc = [list(c) for c in text]
        img = list(range(1, n + 1))
        seen = set()
        for c in cyc:
            for a, b in zip(c, c[1:] + c[:1]):
                if not 1 <= a <= n or a in seen:
                    raise ValueError(f"bad cycle {c} for n={n}")
                seen.add(a)
                img[a - 1] = b
        return cls(img)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if len(other) != len(self):
            raise ValueError("permutations of different degrees")
        return Permutation(self[j - 1] for j in other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, x in enumerate(self, 1):
            inv[x - 1] = i
        return Permutation(inv)

    def right_simple(self, i: int) -> Permutation:
        """w * s_i."""
        img = list(self)
        img[i - 1], img[i] = img[i], img[i - 1]
        return Permutation(img)

    def left_simple(self, i: int) -> Permutation:
        """s_i * w."""
        return Permutation(i + 1 if x == i else i if x == i + 1 else x for x in self)

    def right_descents(self) -> list[int]:
        return [i for i in range(1, len(self)) if self[i - 1] > self[i]]

    def cycle_string(self) -> str:
        cyc = [c for c in cycles(self) if len(c) > 1]
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"

    def __repr__(self):
        return f"Permutation({', '.join(map(str, self))})"

    def __str__(self):
        return self.cycle_string()


def length(w: Permutation) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def reduced_word(w: Permutation) -> list[int]:
    """A reduced word, peeling off the smallest right descent each time."""
    word = []
    while True:
        desc = w.right_descents()
        if not desc:
            break
        d = desc[0]
        word.append(d)
        w = w.right_simple(d)
    word.reverse()
    return word


def from_word(word: Iterable[int], n: int) -> Permutation:
    w = Permutation.identity(n)
    for i in word:
        w = w.right_simple(i)
    return w


def cycles(w: Permutation) -> list[list[int]]:
    seen = set()
    out = []
    for start in range(1, len(w) + 1):
        if start in seen:
            continue
        c = [start]
        seen.add(start)
        x = w(start)
        while x != start:
            c.append(x)
            seen.add(x)
            x = w(x)
        out.append(c)
    return out


def cycle_type(w: Permutation) -> Partition:
    return Partition(sorted((len(c) for c in cycles(w)), reverse=True))


def reduced_cycle_type(w: Permutation) -> Partition:
    return Partition(p - 1 for p in cycle_type(w) if p > 1)


def reduced_cycle_types(n: int) -> list[Partition]:
    """All mu with |mu| + l(mu) <= n, ordered by size then reverse lex."""
    from .combinat import partitions_up_to
    return [mu for mu in partitions_up_to(n) if mu.support_rank <= n]


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def class_size(n: int, mu: Partition) -> int:
    """Size of the class of reduced cycle type mu in S_n (zero if empty)."""
    mu = Partition(mu)
    if mu.support_rank > n:
        return 0
    lengths = [p + 1 for p in mu] + [1] * (n - mu.support_rank)
    denom = 1
    for part, mult in Counter(lengths).items():
        denom *= part ** mult * factorial(mult)
    return factorial(n) // denom


def class_elements(n: int, mu: Partition, max_n: int | None = None) -> list[Permutation]:
    """Every permutation of S_n with reduced cycle type mu, in lexicographic order."""
    check_size(n, guards.max_enum if max_n is None else max_n, "n")
    mu = Partition(mu)
    return list(_class_elements(n, mu))


@lru_cache(maxsize=64)
def _class_elements(n: int, mu: Partition) -> tuple[Permutation, ...]:
    if mu.support_rank > n:
        return ()
    need = Counter(p + 1 for p in mu)
    need[1] += n - mu.support_rank
    img = [0] * (n + 1)
    out = []

    def rec(free: list[int]):
        if not free:
            out.append(Permutation(img[1:]))
            return
        a = free[0]
        rest = free[1:]
        for size in sorted(need):
            if not need[size]:
                continue
            need[size] -= 1
            for tail in permutations(rest, size - 1):
                cyc = (a,) + tail
                for x, y in zip(cyc, cyc[1:] + cyc[:1]):
                    img[x] = y
                rec([x for x in rest if x not in tail])
            need[size] += 1

    rec(list(range(1, n + 1)))
    out.sort()
    return tuple(out)


def minimal_length_class_reps(n: int, mu: Partition) -> list[Permutation]:
    elems = class_elements(n, mu)
    if not elems:
        return []
    lens = [length(w) for w in elems]
    m = min(lens)
    return [w for w, l in zip(elems, lens) if l == m]


def minimal_rep(n: int, mu: Partition) -> Permutation:
    """
    A minimal-length element of reduced cycle type mu: cycles on consecutive
    blocks of sizes mu_i + 1. Its length is |mu|.
    """
    mu = Partition(mu)
    if mu.support_rank > n:
        raise ValueError(f"no element of reduced cycle type {mu} in S_{n}")
    img = list(range(1, n + 1))
    start = 1
    for p in mu:
        block = list(range(start, start + p + 1))
        for a, b in zip(block, block[1:] + block[:1]):
            img[a - 1] = b
        start += p + 1
    return Permutation(img)


# group algebra Z S_n: dicts Permutation -> int

def ga_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for w, c in b.items():
        v = out.get(w, 0) + c
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def ga_scale(a: dict, c: int) -> dict:
    return {w: c * v for w, v in a.items()} if c else {}


def ga_mul(a: dict, b: dict) -> dict:
    out: dict = defaultdict(int)
    for x, cx in a.items():
        for y, cy in b.items():
            out[x * y] += cx * cy
    return {w: c for w, c in out.items() if c}


def class_sum(n: int, mu: Partition) -> dict:
    """X_mu as a group-algebra element."""
    return {w: 1 for w in class_elements(n, mu)}


def classical_jm(i: int, n: int) -> dict:
    """L_i = sum_{j<i} (j i) in Z S_n."""
    return {Permutation.transposition(j, i, n): 1 for j in range(1, i)}
