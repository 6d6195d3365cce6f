"""
The Geck-Rouquier basis of Z(H_n(q)).

Two constructions are provided. `geck_rouquier_basis` solves the defining
linear system exactly over Q(q), then checks that every coefficient is a
Laurent polynomial and that q = 1 gives the class sums. `gamma_fast` uses the
recursion forced by centrality and is validated against the linear solve in
the test suite; it reaches ranks where the solve is impractical.

Centrality gives, for a generator s and any x:

* z_x = z_{sxs} whenever l(sxs) = l(x) (cyclic shifts), and
* z_x = q^-1 z_{sxs} + (1 - q^-1) z_{xs} whenever l(sxs) = l(x) - 2.

Every x reaches a minimal-length element of its class or a length-reducing
conjugation through cyclic shifts (Geck-Pfeiffer), which fixes everything.

>>> from qfh.combinat import Partition
>>> print(gamma(3, Partition([1])))
(1)*T(1 2) + (1)*T(2 3) + (q^-1)*T(1 3)
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .. import cache
from ..combinat import Partition
from ..errors import check_size, guards
from ..exactalg import LaurentQ, NotLaurent, q
from ..linalg import sparse_solve
from ..symmgroup import class_sum
from .algebra import HeckeElem, is_central
from .dense import DenseElem
from .tables import SymTables, tables

__all__ = [
    "NotCentral", "InconsistentCoefficients", "NonzeroResidual",
    "geck_rouquier_basis", "gamma", "gamma_fast", "gamma_expand", "centrality_rows",
]


class NotCentral(ValueError):
    pass


class InconsistentCoefficients(ArithmeticError):
    """Minimal-length elements of one class carry different coefficients."""


class NonzeroResidual(ArithmeticError):
    pass


_ONE = LaurentQ(1)
_QM1 = q - 1


def centrality_rows(tab: SymTables) -> list[dict[int, LaurentQ]]:
    """
    Rows of [z, T_s] = 0, read off coefficient by coefficient.

    [z T_s]_v is z_{vs} + (q-1) z_v if s is a right descent of v and q z_{vs}
    otherwise; [T_s z]_v is the mirror image. Rows are divided by q when that
    is a common factor.
    """
    rows = []
    for i in range(tab.n - 1):
        rm, lm, rd, ld = tab.rmul[i], tab.lmul[i], tab.rdesc[i], tab.ldesc[i]
        for v in range(tab.size):
            vs, sv = int(rm[v]), int(lm[v])
            if vs == sv:
                continue
            r, l = bool(rd[v]), bool(ld[v])
            if r == l:
                row = {vs: _ONE, sv: -_ONE}
            elif r:
                row = {vs: _ONE, v: _QM1, sv: -q}
            else:
                row = {vs: q, sv: -_ONE, v: -_QM1}
            rows.append(row)
    return rows


def _key(n: int, mu: Partition) -> str:
    return f"n={n},mu={','.join(map(str, mu))}"


_memory: dict[int, dict[Partition, HeckeElem]] = {}


def geck_rouquier_basis(n: int, max_n: int | None = None) -> dict[Partition, HeckeElem]:
    """
    {mu: Gamma_mu} for every mu with |mu| + l(mu) <= n, by exact linear solve.

    Raises SizeGuard above the configured rank, NotLaurent if a coefficient
    is not in Z[q, q^-1] and ValueError if q = 1 does not give the class sum.
    """
    check_size(n, guards.max_n if max_n is None else max_n, "n")
    if n in _memory:
        return dict(_memory[n])
    tab = tables(n)
    found = {}
    for mu in tab.types:
        rec = cache.lookup("gamma", _key(n, mu))
        if rec is None:
            break
        found[mu] = HeckeElem.from_json(rec)
    else:
        _memory[n] = found
        return dict(found)

    basis = _solve(tab)
    for mu, g in basis.items():
        cache.store("gamma", _key(n, mu), g.to_json())
    _memory[n] = basis
    return dict(basis)


def _solve(tab: SymTables) -> dict[Partition, HeckeElem]:
    n = tab.n
    rows = centrality_rows(tab)
    rhs: list[dict] = [{} for _ in rows]
    for w in np.flatnonzero(tab.is_minimal):
        rows.append({int(w): _ONE})
        rhs.append({int(tab.class_id[w]): 1})
    sol = sparse_solve(rows, rhs, range(tab.size))
    terms: list[dict] = [{} for _ in tab.types]
    for w, vec in sol.items():
        perm = tab.perm(w)
        for c, val in vec.items():
            if not val.is_laurent():
                raise NotLaurent(f"coefficient of T_{perm} in Gamma_{tab.types[c]} is {val}")
            terms[c][perm] = val.to_laurent()
    basis = {}
    for c, mu in enumerate(tab.types):
        g = HeckeElem._raw(n, {w: v for w, v in terms[c].items() if v})
        at_one = {w: v.at_one() for w, v in g.items() if v.at_one()}
        if at_one != class_sum(n, mu):
            raise ValueError(f"Gamma_{mu} does not specialise to the class sum")
        basis[mu] = g
    return basis


def gamma(n: int, mu: Partition, max_n: int | None = None) -> HeckeElem:
    """Gamma_mu in H_n(q); zero when |mu| + l(mu) > n."""
    mu = Partition(mu)
    if mu.support_rank > n:
        return HeckeElem(n)
    return geck_rouquier_basis(n, max_n)[mu]


class _Plan:
    """The mu-independent part of the recursion for one rank."""

    def __init__(self, tab: SymTables):
        n, size, ln = tab.n, tab.size, tab.length
        ar = np.arange(size)
        self.tab = tab
        self.conj = np.array([tab.lmul[i][tab.rmul[i]] for i in range(n - 1)]).reshape(n - 1, size)
        self.rmul = np.array(tab.rmul).reshape(n - 1, size)
        reducer = np.full(size, -1)
        for i in reversed(range(n - 1)):
            reducer[ln[self.conj[i]] == ln - 2] = i
        src, dst = [], []
        for i in range(n - 1):
            mask = (ln[self.conj[i]] == ln) & (self.conj[i] != ar)
            src.append(ar[mask])
            dst.append(self.conj[i][mask])
        src = np.concatenate(src) if src else np.zeros(0, dtype=np.int64)
        dst = np.concatenate(dst) if dst else np.zeros(0, dtype=np.int64)
        graph = coo_matrix((np.ones(src.size), (src, dst)), shape=(size, size)).tocsr()
        ncomp, comp = connected_components(graph, directed=False)
        self.comp = comp
        big = np.iinfo(np.int64).max
        rep = np.full(ncomp, big)
        has = reducer >= 0
        np.minimum.at(rep, comp[has], ar[has])
        first = np.full(ncomp, big)
        np.minimum.at(first, comp, ar)
        self.comp_len = ln[first]
        self.comp_class = tab.class_id[first]
        self.minimal = rep == big
        if np.any(self.minimal & ~tab.is_minimal[first]):
            raise AssertionError("cyclic-shift class without reduction is not minimal")
        # recursion data for reducible components
        self.levels = []
        for ell in range(int(self.comp_len.max()) + 1):
            cs = np.flatnonzero((self.comp_len == ell) & ~self.minimal)
            if cs.size:
                x = rep[cs]
                s = reducer[x]
                self.levels.append((cs, comp[self.conj[s, x]], comp[self.rmul[s, x]]))
        self.width = int(ln.max()) + 1 if size else 1

    def evaluate(self, mu: Partition) -> DenseElem:
        tab = self.tab
        c_mu = tab.class_of(mu)
        # column d holds the coefficient of q^-d
        zc = np.zeros((self.comp_len.size, self.width), dtype=np.int64)
        zc[self.minimal & (self.comp_class == c_mu), 0] = 1
        for cs, sxs, xs in self.levels:
            a, b = zc[sxs], zc[xs]
            val = b.copy()
            val[:, 1:] += a[:, :-1] - b[:, :-1]
            zc[cs] = val
        arr = zc[self.comp][:, ::-1]
        return DenseElem(tab.n, -(self.width - 1), np.ascontiguousarray(arr), tab).trim()


@lru_cache(maxsize=2)
def _plan(n: int) -> _Plan:
    return _Plan(tables(n))


@lru_cache(maxsize=12)
def gamma_fast(n: int, mu: Partition) -> DenseElem:
    """Gamma_mu as a dense element, by the centrality recursion."""
    mu = Partition(mu)
    if mu.support_rank > n:
        return DenseElem.zero(n)
    return _plan(n).evaluate(mu)


def gamma_expand(z: HeckeElem, max_n: int | None = None) -> dict[Partition, LaurentQ]:
    """
    Coordinates of a central element in the Geck-Rouquier basis, read off at
    minimal-length elements and confirmed by reconstruction.
    """
    if not z:
        return {}
    if not is_central(z):
        raise NotCentral("element does not commute with every generator")
    tab = tables(z.n)
    d = z.to_dense()
    out = {}
    for c, mu in enumerate(tab.types):
        reps = np.flatnonzero(tab.is_minimal & (tab.class_id == c))
        vals = {d.coeff(int(w)) for w in reps}
        if len(vals) != 1:
            raise InconsistentCoefficients(f"class {mu}: {sorted(map(str, vals))}")
        (v,) = vals
        if v:
            out[mu] = v
    basis = geck_rouquier_basis(z.n, max_n)
    recon = HeckeElem(z.n)
    for mu, c in out.items():
        recon = recon + basis[mu].scale(c)
    if recon != z:
        raise NonzeroResidual("central element is not spanned by its read-off coordinates")
    return out
