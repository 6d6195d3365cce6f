"""
Dense elements of H_n(q).

A `DenseElem` stores an (n!, D) integer array: row w, column j holds the
coefficient of q^(offset + j) on T_w. Integer arrays are promoted to object
dtype as soon as entries approach the int64 range, so arithmetic stays exact.
"""

from __future__ import annotations

import numpy as np

from ..exactalg import LaurentQ
from .tables import SymTables, tables

# above this magnitude int64 arrays switch to Python integers
_SAFE = 2 ** 40


def _guard(arr: np.ndarray) -> np.ndarray:
    if arr.dtype != object and arr.size and int(np.abs(arr).max()) > _SAFE:
        return arr.astype(object)
    return arr


class DenseElem:
    __slots__ = ("n", "tab", "offset", "arr")

    def __init__(self, n: int, offset: int, arr: np.ndarray, tab: SymTables | None = None):
        self.n = n
        self.tab = tab if tab is not None else tables(n)
        self.offset = offset
        self.arr = _guard(arr)

    @classmethod
    def zero(cls, n: int) -> DenseElem:
        tab = tables(n)
        return cls(n, 0, np.zeros((tab.size, 0), dtype=np.int64), tab)

    @classmethod
    def from_terms(cls, n: int, terms: dict[int, LaurentQ]) -> DenseElem:
        """From a map (permutation index -> LaurentQ)."""
        tab = tables(n)
        exps = [e for c in terms.values() for e in c.terms]
        if not exps:
            return cls.zero(n)
        lo, hi = min(exps), max(exps)
        big = any(abs(v) > _SAFE for c in terms.values() for v in c.terms.values())
        arr = np.zeros((tab.size, hi - lo + 1), dtype=object if big else np.int64)
        for idx, c in terms.items():
            for e, v in c.items():
                arr[idx, e - lo] = v
        return cls(n, lo, arr, tab)

    @property
    def width(self) -> int:
        return self.arr.shape[1]

    def trim(self) -> DenseElem:
        nz = np.flatnonzero(np.any(self.arr != 0, axis=0))
        if not nz.size:
            return DenseElem.zero(self.n)
        a, b = int(nz[0]), int(nz[-1]) + 1
        if a == 0 and b == self.width:
            return self
        return DenseElem(self.n, self.offset + a, self.arr[:, a:b], self.tab)

    def is_zero(self) -> bool:
        return not np.any(self.arr != 0)

    def coeff(self, idx: int) -> LaurentQ:
        row = self.arr[idx]
        return LaurentQ({self.offset + j: int(v) for j, v in enumerate(row) if v})

    def terms(self) -> dict[int, LaurentQ]:
        rows = np.flatnonzero(np.any(self.arr != 0, axis=1))
        return {int(i): self.coeff(int(i)) for i in rows}

    def _padded(self, lo: int, hi: int) -> np.ndarray:
        """Array re-based to columns lo..hi-1."""
        out = np.zeros((self.tab.size, hi - lo), dtype=self.arr.dtype)
        if self.width:
            out[:, self.offset - lo:self.offset - lo + self.width] = self.arr
        return out

    def __add__(self, other: DenseElem) -> DenseElem:
        if not self.width:
            return other
        if not other.width:
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.offset + self.width, other.offset + other.width)
        a = self._padded(lo, hi)
        b = other._padded(lo, hi)
        if a.dtype != b.dtype:
            a, b = a.astype(object), b.astype(object)
        return DenseElem(self.n, lo, a + b, self.tab).trim()

    def __neg__(self):
        return DenseElem(self.n, self.offset, -self.arr, self.tab)

    def __sub__(self, other: DenseElem) -> DenseElem:
        return self + (-other)

    def scale(self, c: LaurentQ | int) -> DenseElem:
        c = LaurentQ(c) if isinstance(c, int) else c
        if not c or not self.width:
            return DenseElem.zero(self.n)
        lo, hi = c.valuation(), c.degree()
        big = self.arr.dtype == object or any(abs(v) > 2 ** 20 for v in c.terms.values())
        out = np.zeros((self.tab.size, self.width + hi - lo), dtype=object if big else self.arr.dtype)
        for e, v in c.items():
            out[:, e - lo:e - lo + self.width] += v * self.arr
        return DenseElem(self.n, self.offset + lo, out, self.tab)

    def right_gen(self, i: int) -> DenseElem:
        """self * T_{s_i}."""
        t = self.tab
        a = self.arr
        r, desc = t.rmul[i - 1], t.rdesc[i - 1]
        asc = ~desc
        out = np.zeros((t.size, self.width + 1), dtype=a.dtype)
        # T_w T_s = T_ws when w s > w
        out[r[asc], :-1] = a[asc]
        # T_w T_s = q T_ws + (q-1) T_w when w s < w
        out[r[desc], 1:] = a[desc]
        out[desc, 1:] += a[desc]
        out[desc, :-1] -= a[desc]
        return DenseElem(self.n, self.offset, out, t)

    def left_gen(self, i: int) -> DenseElem:
        """T_{s_i} * self."""
        t = self.tab
        a = self.arr
        l, desc = t.lmul[i - 1], t.ldesc[i - 1]
        asc = ~desc
        out = np.zeros((t.size, self.width + 1), dtype=a.dtype)
        out[l[asc], :-1] = a[asc]
        out[l[desc], 1:] = a[desc]
        out[desc, 1:] += a[desc]
        out[desc, :-1] -= a[desc]
        return DenseElem(self.n, self.offset, out, t)

    def right_word(self, word) -> DenseElem:
        out = self
        for i in word:
            out = out.right_gen(i)
        return out

    def equals(self, other: DenseElem) -> bool:
        return (self - other).is_zero()


def _dot_exact(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """a.T @ b without overflow: float64 BLAS when provably exact, else Python ints."""
    if a.dtype != object and b.dtype != object and a.size and b.size:
        bound = int(np.abs(a).max()) * int(np.abs(b).max()) * a.shape[0]
        if bound < 2 ** 52:
            return np.rint(a.T.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
        if bound < 2 ** 62:
            return a.T @ b
    return a.T.astype(object) @ b.astype(object)


def trace_coefficient(a: DenseElem, b: DenseElem, w: int) -> LaurentQ:
    """
    Coefficient of T_w in a*b without forming the product.

    With tau the coefficient of T_id, tau(T_x T_y) = q^l(x) [y = x^-1], so
    [T_w](ab) = q^-l(w) * sum_x q^l(x) a_x c_{x^-1} where c = b T_{w^-1}.
    """
    t = a.tab
    if not a.width or not b.width:
        return LaurentQ()
    from ..symmgroup import reduced_word
    winv = t.perm(int(t.inv[w]))
    c = b.right_word(reduced_word(winv))
    if not c.width:
        return LaurentQ()
    total: dict[int, int] = {}
    base = a.offset + c.offset - int(t.length[w])
    for ell, idx in enumerate(t.by_length):
        if not idx.size:
            continue
        m = _dot_exact(a.arr[idx], c.arr[t.inv[idx]])
        for i in range(m.shape[0]):
            for j in np.flatnonzero(m[i]):
                e = base + ell + i + int(j)
                total[e] = total.get(e, 0) + int(m[i, j])
    return LaurentQ(total)
