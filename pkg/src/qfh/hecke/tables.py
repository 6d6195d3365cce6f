"""
Dense lookup tables for S_n.

Permutations are indexed by their lexicographic rank (the rank of the
Lehmer code), so index 0 is the identity and index n!-1 the longest
element. Everything is a numpy array so that whole-group operations
vectorize.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import factorial

import numpy as np

from ..combinat import Partition
from ..symmgroup import Permutation, reduced_cycle_types


def lehmer_rank(perms: np.ndarray) -> np.ndarray:
    """Lexicographic rank of each row of an (M, n) array of one-line images."""
    m, n = perms.shape
    rank = np.zeros(m, dtype=np.int64)
    for i in range(n):
        smaller = (perms[:, i + 1:] < perms[:, i:i + 1]).sum(axis=1)
        rank += smaller * factorial(n - 1 - i)
    return rank


class SymTables:
    """Index tables for S_n: products with generators, lengths, inverses, classes."""

    def __init__(self, n: int):
        self.n = n
        self.size = factorial(n)
        perms = np.array(list(permutations(range(1, n + 1))), dtype=np.int8)
        self.perms = perms.reshape(self.size, n)
        self.fact = [factorial(n - 1 - i) for i in range(n)]

        lehmer = np.zeros((self.size, n), dtype=np.int64)
        for i in range(n):
            lehmer[:, i] = (self.perms[:, i + 1:] < self.perms[:, i:i + 1]).sum(axis=1)
        self.length = lehmer.sum(axis=1)

        # rmul[i-1][w] = index of w s_i ; lmul[i-1][w] = index of s_i w
        self.rmul = []
        self.lmul = []
        for i in range(1, n):
            p = self.perms.copy()
            p[:, [i - 1, i]] = p[:, [i, i - 1]]
            self.rmul.append(lehmer_rank(p))
            p = self.perms.copy()
            lo, hi = p == i, p == i + 1
            p[lo], p[hi] = i + 1, i
            self.lmul.append(lehmer_rank(p))
        self.rdesc = [self.perms[:, i - 1] > self.perms[:, i] for i in range(1, n)]
        self.ldesc = [self.length[self.lmul[i]] < self.length for i in range(n - 1)]

        invp = np.empty_like(self.perms)
        rows = np.arange(self.size)[:, None]
        invp[rows, self.perms.astype(np.int64) - 1] = np.arange(1, n + 1, dtype=np.int8)
        self.inv = lehmer_rank(invp)

        self._classify()
        self.by_length = [np.flatnonzero(self.length == l)
                          for l in range(int(self.length.max()) + 1 if self.size else 1)]

    def _classify(self):
        n, size = self.n, self.size
        p0 = self.perms.astype(np.int64) - 1
        ident = np.arange(n)
        cur = np.broadcast_to(ident, (size, n)).copy()
        cyclen = np.zeros((size, n), dtype=np.int64)
        rows = np.arange(size)[:, None]
        for k in range(1, n + 1):
            cur = p0[rows, cur]
            hit = (cur == ident) & (cyclen == 0)
            cyclen[hit] = k
        # multiplicity of each cycle length L >= 2
        counts = np.zeros((size, n + 1), dtype=np.int64)
        for length_ in range(2, n + 1):
            counts[:, length_] = (cyclen == length_).sum(axis=1) // length_
        self.types = reduced_cycle_types(n)
        key_of = {}
        for idx, mu in enumerate(self.types):
            vec = [0] * (n + 1)
            for part in mu:
                vec[part + 1] += 1
            key_of[tuple(vec)] = idx
        uniq, inverse = np.unique(counts, axis=0, return_inverse=True)
        lookup = np.array([key_of[tuple(int(x) for x in row)] for row in uniq], dtype=np.int64)
        self.class_id = lookup[inverse.reshape(-1)]
        self.class_index = {mu: i for i, mu in enumerate(self.types)}
        minlen = np.full(len(self.types), np.iinfo(np.int64).max)
        np.minimum.at(minlen, self.class_id, self.length)
        self.class_minlen = minlen
        self.is_minimal = self.length == minlen[self.class_id]

    def index(self, w) -> int:
        """Rank of a single permutation."""
        w = list(w)
        r = 0
        for i, x in enumerate(w):
            r += sum(1 for y in w[i + 1:] if y < x) * self.fact[i]
        return r

    def perm(self, idx: int) -> Permutation:
        return Permutation(int(x) for x in self.perms[idx])

    def word_parent(self, idx: int) -> tuple[int, int]:
        """(index of w s_d, d) for the smallest right descent d; (-1, 0) at the identity."""
        for i in range(1, self.n):
            if self.rdesc[i - 1][idx]:
                return int(self.rmul[i - 1][idx]), i
        return -1, 0

    def class_of(self, mu: Partition) -> int:
        return self.class_index[Partition(mu)]


@lru_cache(maxsize=4)
def tables(n: int) -> SymTables:
    return SymTables(n)
