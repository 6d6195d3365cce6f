"""
The Iwahori-Hecke algebra H_n(q) with (T_i - q)(T_i + 1) = 0.

>>> s1 = generator(1, 3)
>>> print(s1 * s1)
(q)*T() + (q - 1)*T(1 2)
>>> print(jm_element(3, 3))
(q^-1)*T(2 3) + (q^-2)*T(1 3)
"""

from __future__ import annotations

from typing import Iterable, Mapping

import numpy as np

from ..exactalg import LaurentQ
from ..symmgroup import Permutation, from_word, length, reduced_word
from .dense import DenseElem
from .tables import tables

__all__ = [
    "HeckeElem", "RankMismatch", "IndexOutOfRange",
    "T", "T_word", "generator", "identity", "jm_element", "is_central",
    "specialize_q1", "mul",
]


class RankMismatch(ValueError):
    """Operands live in Hecke algebras of different rank."""


class IndexOutOfRange(IndexError):
    pass


class HeckeElem:
    """A finite sum of T_w with Laurent polynomial coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Permutation, LaurentQ | int] | None = None):
        self.n = n
        self._terms: dict[Permutation, LaurentQ] = {}
        for w, c in (terms or {}).items():
            w = Permutation(w)
            if len(w) != n:
                raise RankMismatch(f"{w!r} is not in S_{n}")
            c = LaurentQ(c) if isinstance(c, int) else c
            if c:
                self._terms[w] = self._terms.get(w, LaurentQ()) + c
        self._terms = {w: c for w, c in self._terms.items() if c}

    @classmethod
    def _raw(cls, n: int, terms: dict) -> HeckeElem:
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        return obj

    @property
    def terms(self) -> dict[Permutation, LaurentQ]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, w) -> LaurentQ:
        return self._terms.get(Permutation(w), LaurentQ())

    def support(self) -> list[Permutation]:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other: HeckeElem):
        if self.n != other.n:
            raise RankMismatch(f"H_{self.n} vs H_{other.n}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, HeckeElem):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            v = out.get(w, LaurentQ()) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return HeckeElem._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElem._raw(self.n, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: LaurentQ | int) -> HeckeElem:
        if isinstance(c, int):
            c = LaurentQ(c)
        if not c:
            return HeckeElem(self.n)
        return HeckeElem._raw(self.n, {w: c * v for w, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentQ)):
            return self.scale(other)
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentQ)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> HeckeElem:
        out = identity(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def to_dense(self) -> DenseElem:
        tab = tables(self.n)
        return DenseElem.from_terms(self.n, {tab.index(w): c for w, c in self._terms.items()})

    @classmethod
    def from_dense(cls, d: DenseElem) -> HeckeElem:
        return cls._raw(d.n, {d.tab.perm(i): c for i, c in d.terms().items()})

    def __repr__(self):
        return f"HeckeElem(n={self.n}, {len(self._terms)} terms)"

    def __str__(self):
        if not self._terms:
            return "0"
        order = sorted(self._terms, key=lambda w: (length(w), reduced_word(w)))
        return " + ".join(f"({self._terms[w]})*T{w.cycle_string() if length(w) else '()'}"
                          for w in order)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"perm": list(w), "coeff": self._terms[w].to_json()}
                      for w in sorted(self._terms)],
        }

    @classmethod
    def from_json(cls, data) -> HeckeElem:
        return cls(int(data["n"]), {Permutation(t["perm"]): LaurentQ.from_json(t["coeff"])
                                    for t in data["terms"]})


def T(w: Permutation | Iterable[int], n: int | None = None) -> HeckeElem:
    w = Permutation(w)
    return HeckeElem._raw(len(w) if n is None else n, {w: LaurentQ(1)})


def T_word(word: Iterable[int], n: int) -> HeckeElem:
    """T_{i_1} T_{i_2} ... computed by multiplying generators."""
    out = identity(n)
    for i in word:
        out = out * generator(i, n)
    return out


def identity(n: int) -> HeckeElem:
    return T(Permutation.identity(n))


def generator(i: int, n: int) -> HeckeElem:
    if not 1 <= i < n:
        raise IndexOutOfRange(f"T_{i} does not exist in H_{n}")
    return T(Permutation.simple(i, n))


def jm_element(i: int, n: int) -> HeckeElem:
    """L_i = sum_{j<i} q^(j-i) T_(j i); L_1 = 0."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"L_{i} does not exist in H_{n}")
    return HeckeElem._raw(n, {Permutation.transposition(j, i, n): LaurentQ.monomial(j - i)
                              for j in range(1, i)})


def mul(a: HeckeElem, b: HeckeElem) -> HeckeElem:
    """Product in H_n(q); see `mul_dense`."""
    if a.n != b.n:
        raise RankMismatch(f"H_{a.n} vs H_{b.n}")
    if not a or not b:
        return HeckeElem(a.n)
    tab = tables(a.n)
    bt = {tab.index(w): c for w, c in b.items()}
    return HeckeElem.from_dense(mul_dense(a.to_dense(), bt))


def mul_dense(a: DenseElem, b: dict[int, LaurentQ]) -> DenseElem:
    """
    a * sum_y b_y T_y with b given by permutation index.

    Every T_y is reached by right-multiplying generators along its reduced
    word; the words form a tree (parent of y is y s_d for the smallest right
    descent d), which is walked depth-first so shared prefixes are computed once.
    """
    tab = a.tab
    children: dict[int, list[tuple[int, int]]] = {}
    seen = {0}
    for y in b:
        while y not in seen:
            seen.add(y)
            parent, d = tab.word_parent(y)
            children.setdefault(parent, []).append((y, d))
            y = parent
    maxlen = max(int(tab.length[y]) for y in b)
    lo = a.offset + min(c.valuation() for c in b.values())
    hi = a.offset + a.width + max(c.degree() for c in b.values()) + maxlen
    acc = np.zeros((tab.size, hi - lo), dtype=object if a.arr.dtype == object else np.int64)

    def accumulate(state: DenseElem, c: LaurentQ):
        nonlocal acc
        if acc.dtype != object and (state.arr.dtype == object or int(np.abs(acc).max(initial=0)) > 2 ** 40):
            acc = acc.astype(object)
        for e, v in c.items():
            start = state.offset + e - lo
            acc[:, start:start + state.width] += v * state.arr

    stack = [(0, a)]
    while stack:
        node, state = stack.pop()
        if node in b:
            accumulate(state, b[node])
        for child, d in children.get(node, ()):
            stack.append((child, state.right_gen(d)))
    return DenseElem(a.n, lo, acc, tab).trim()


def is_central(z: HeckeElem) -> bool:
    """Whether z commutes with every T_{s_i}."""
    d = z.to_dense()
    return all(d.right_gen(i).equals(d.left_gen(i)) for i in range(1, z.n))


def specialize_q1(z: HeckeElem) -> dict[Permutation, int]:
    out = {w: c.at_one() for w, c in z.items()}
    return {w: c for w, c in out.items() if c}


def check_word(word: Iterable[int], n: int) -> Permutation:
    """The permutation of a word, insisting the word is reduced."""
    word = list(word)
    w = from_word(word, n)
    if length(w) != len(word):
        raise ValueError(f"word {word} is not reduced")
    return w


def basis_element(w: Permutation) -> HeckeElem:
    """T_w assembled from the deterministic reduced word."""
    return T_word(reduced_word(w), len(w))
