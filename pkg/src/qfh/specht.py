"""
Seminormal Specht modules over Q(q), central characters and blocks.

In the seminormal basis v_T the generator T_i acts on the span of v_T and
v_S, S = s_i T, through

    T_i v_T = x v_T + v_S,      x = (q - 1) / (1 - q^(a - b)),

where a, b are the contents of i and i+1 in T, and T_i v_S is forced by the
trace q - 1 and determinant -q. When i and i+1 share a row T_i acts by q,
when they share a column by -1. The Jucys-Murphy elements then act
diagonally with L_i v_T = [c_T(i)]_q v_T.

>>> rep = seminormal_rep(Partition([2, 1]))
>>> rep.dim
2
>>> print(central_character(Partition([1, 1]), Partition([1])))
-1
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .combinat import (Partition, StandardTableau, contents, e_core, partitions,
                       standard_tableaux)
from .errors import check_size, guards
from .exactalg import LaurentQ, RationalQ, q, qnumber
from .hecke import HeckeElem, gamma, jm_element
from .hecke.tables import tables
from .symfunc import evaluate

__all__ = [
    "SeminormalRep", "BlockPartition", "NotScalarMatrix", "RouteMismatch",
    "seminormal_rep", "central_character", "central_character_seminormal",
    "jm_eigenvalues", "character_table", "blocks",
]


class NotScalarMatrix(ArithmeticError):
    pass


class RouteMismatch(ArithmeticError):
    """The two central-character computations disagree."""


_ZERO = RationalQ(0)
_ONE = RationalQ(1)
_Q = RationalQ(q)


def _zeros(d: int) -> np.ndarray:
    out = np.empty((d, d), dtype=object)
    out[...] = _ZERO
    return out


def _identity(d: int) -> np.ndarray:
    out = _zeros(d)
    for i in range(d):
        out[i, i] = _ONE
    return out


def _is_zero(mat: np.ndarray) -> bool:
    return all(not x for x in mat.flat)


@dataclass
class SeminormalRep:
    shape: Partition
    n: int
    tableaux: list[StandardTableau]
    generators: list[np.ndarray]
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.tableaux)

    def generator(self, i: int) -> np.ndarray:
        return self.generators[i - 1]

    def basis_matrix(self, w_index: int) -> np.ndarray:
        """rho(T_w) for w given by its index in the S_n tables."""
        if w_index in self._cache:
            return self._cache[w_index]
        if w_index == 0:
            mat = _identity(self.dim)
        else:
            parent, d = tables(self.n).word_parent(w_index)
            mat = self.basis_matrix(parent).dot(self.generators[d - 1])
        self._cache[w_index] = mat
        return mat

    def act(self, h: HeckeElem) -> np.ndarray:
        """rho(h), acting on column vectors."""
        if h.n != self.n:
            raise ValueError(f"element of H_{h.n} acting on a module for H_{self.n}")
        tab = tables(self.n)
        out = _zeros(self.dim)
        for w, c in h.items():
            out = out + self.basis_matrix(tab.index(w)) * RationalQ(c)
        return out

    def jm_matrix(self, i: int) -> np.ndarray:
        """rho(L_i), pushed through the representation."""
        return self.act(jm_element(i, self.n))

    def check_relations(self) -> None:
        """Raise AssertionError unless quadratic, braid and commuting relations hold."""
        d = self.dim
        one = _identity(d)
        g = self.generators
        for i, t in enumerate(g):
            assert _is_zero((t - one * _Q).dot(t + one)), f"quadratic relation fails at T_{i + 1}"
        for i in range(len(g)):
            for j in range(i + 1, len(g)):
                a, b = g[i], g[j]
                if j == i + 1:
                    ok = _is_zero(a.dot(b).dot(a) - b.dot(a).dot(b))
                else:
                    ok = _is_zero(a.dot(b) - b.dot(a))
                assert ok, f"relation between T_{i + 1} and T_{j + 1} fails"

    def check_jm(self) -> None:
        """L_i lower triangular with diagonal [c_T(i)]_q in the fixed tableau order."""
        for i in range(1, self.n + 1):
            mat = self.jm_matrix(i)
            for r in range(self.dim):
                for c in range(r + 1, self.dim):
                    assert not mat[r, c], f"L_{i} not lower triangular"
                expected = RationalQ(qnumber(self.tableaux[r].content(i)))
                assert mat[r, r] == expected, f"L_{i} diagonal at row {r}"


def seminormal_rep(lam: Partition) -> SeminormalRep:
    lam = Partition(lam)
    check_size(lam.size, guards.max_enum, "|lambda|")
    tabs = standard_tableaux(lam)
    pos = {t.rows: k for k, t in enumerate(tabs)}
    d = len(tabs)
    gens = []
    for i in range(1, lam.size):
        mat = _zeros(d)
        for k, t in enumerate(tabs):
            (ri, ci), (rj, cj) = t.position(i), t.position(i + 1)
            if ri == rj:
                mat[k, k] = _Q
                continue
            if ci == cj:
                mat[k, k] = -_ONE
                continue
            a, b = t.content(i), t.content(i + 1)
            s = pos[t.swap(i, i + 1).rows]
            x = RationalQ(q - 1) / RationalQ(1 - LaurentQ.monomial(a - b))
            mat[k, k] = x
            if k < s:
                mat[s, k] = _ONE
            else:
                x_s = RationalQ(q - 1) / RationalQ(1 - LaurentQ.monomial(b - a))
                mat[s, k] = x * x_s + _Q
        gens.append(mat)
    return SeminormalRep(lam, lam.size, tabs, gens)


def jm_eigenvalues(lam: Partition) -> list[LaurentQ]:
    """Eigenvalues q [c]_q of the normalized JM elements q L_i, over the boxes of lam."""
    return [qnumber(c) * q for c in contents(lam)]


def central_character_seminormal(lam: Partition, mu: Partition,
                                 rep: SeminormalRep | None = None) -> LaurentQ:
    """Scalar by which Gamma_mu acts on S^lam, read off the seminormal matrices."""
    lam, mu = Partition(lam), Partition(mu)
    n = lam.size
    rep = rep or seminormal_rep(lam)
    mat = rep.act(gamma(n, mu))
    c = mat[0, 0]
    if not _is_zero(mat - _identity(rep.dim) * c):
        raise NotScalarMatrix(f"Gamma_{mu} on S^{lam} is not scalar")
    if not c.is_laurent():
        raise NotScalarMatrix(f"scalar {c} is not a Laurent polynomial")
    return c.to_laurent()


def central_character(lam: Partition, mu: Partition, check: bool | None = None) -> LaurentQ:
    """
    Scalar by which Gamma_mu acts on S^lam: f_mu at the JM eigenvalues
    q [c]_q of lam, with t = |lam|. With `check` (default for |lam| <= 6)
    the seminormal computation must agree.
    """
    from .fhq import psi_inverse
    lam, mu = Partition(lam), Partition(mu)
    n = lam.size
    if mu.support_rank > n:
        raise ValueError(f"Gamma_{mu} does not exist in H_{n}")
    value = evaluate(psi_inverse(mu), jm_eigenvalues(lam), n)
    if check is None:
        check = n <= 6
    if check:
        other = central_character_seminormal(lam, mu)
        if other != value:
            raise RouteMismatch(f"lambda={lam}, mu={mu}: {value} vs {other}")
    return value


def character_table(n: int, mu: Partition, check: bool | None = None) -> dict[Partition, LaurentQ]:
    return {lam: central_character(lam, mu, check) for lam in partitions(n)}


@dataclass(frozen=True)
class BlockPartition:
    n: int
    e: int | float
    classes: tuple[tuple[Partition, ...], ...]

    def block_of(self, lam: Partition) -> tuple[Partition, ...]:
        for c in self.classes:
            if Partition(lam) in c:
                return c
        raise KeyError(lam)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "e": "inf" if math.isinf(self.e) else int(self.e),
            "blocks": [[list(p) for p in c] for c in self.classes],
        }


def blocks(n: int, e: int | float) -> BlockPartition:
    """Group the partitions of n by e-core; e = inf gives singletons."""
    if not (math.isinf(e) or (int(e) == e and e >= 2)):
        raise ValueError("e must be an integer >= 2 or infinity")
    groups: dict = {}
    for lam in partitions(n):
        key = lam if math.isinf(e) else e_core(lam, int(e))
        groups.setdefault(key, []).append(lam)
    return BlockPartition(n, e, tuple(tuple(g) for g in groups.values()))
