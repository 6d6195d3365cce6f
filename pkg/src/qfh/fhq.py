"""
The q-Farahat-Higman algebra FH_q.

FH_q has an R[q,q^-1]-basis K_mu (all partitions mu) and structure
constants phi_{mu,nu}^lambda(q, t): the integer-valued polynomials in t that
give the coefficient of Gamma_lambda in Gamma_mu Gamma_nu inside Z(H_n(q))
at t = n, for every n (Gamma_lambda = 0 when |lambda| + l(lambda) > n).

Structure constants are interpolated from exact Hecke algebra products. For
a given lambda the nodes are the ranks n >= |lambda| + l(lambda); the t-degree
is at most |mu| + |nu| - |lambda|, and every fit is checked on the nodes it
did not use.

>>> table = structure_constants(Partition([1]), Partition([1]))
>>> for lam in sorted(table):
...     print(lam, table[lam])
() (q)*C(t,2)
(1) (q - 1)*C(t,1) + (-q + 1)
(1,1) (q + q^-1)
(2) (q + 1 + q^-1)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from . import cache
from .combinat import Partition, partitions, partitions_up_to
from .errors import check_size, guards
from .exactalg import IVLPoly, LaurentQ, NotLaurent, interpolate_binomial
from .hecke import HeckeElem, gamma, gamma_expand, mul
from .hecke.dense import trace_coefficient
from .hecke.grbasis import gamma_fast
from .hecke.tables import tables
from .linalg import det, inverse
from .symfunc import LinearCombination, SymFuncElem, m, m_to_e
from .symmgroup import (class_elements, class_sum, ga_add, ga_scale, minimal_rep,
                        reduced_cycle_type)

__all__ = [
    "FHqElem", "FHElem", "K", "ValidationFailed", "TDependentEntry", "NonUnitDeterminant",
    "ResidualNonzero", "NMatrix",
    "structure_constants", "fhq_mul", "phi_nq", "theta",
    "classical_structure_constants", "classical_phi_n",
    "psi", "n_matrix", "psi_inverse",
]

# ranks at which products are formed explicitly and fully expanded; above
# this only the needed coefficients are extracted with the trace form
DIRECT_MAX = 6


class ValidationFailed(ArithmeticError):
    """An interpolant missed a held-out node."""


class TDependentEntry(ArithmeticError):
    pass


class NonUnitDeterminant(ArithmeticError):
    pass


class ResidualNonzero(ArithmeticError):
    pass


class FHqElem(LinearCombination):
    """An element sum a_mu(q, t) K_mu of FH_q."""

    __slots__ = ()
    _label = "K"

    def filtration_degree(self) -> int | None:
        return self.degree()

    def __mul__(self, other):
        if isinstance(other, (int, LaurentQ, IVLPoly)):
            return self.scale(other)
        if isinstance(other, FHqElem):
            return fhq_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentQ, IVLPoly)):
            return self.scale(other)
        return NotImplemented

    def to_json(self) -> list:
        return [{"partition": list(lam), "coeff": self._terms[lam].to_json()}
                for lam in sorted(self._terms)]

    @classmethod
    def from_json(cls, data):
        return cls({tuple(r["partition"]): IVLPoly.from_json(r["coeff"]) for r in data})


class FHElem(FHqElem):
    """Element of the classical Farahat-Higman algebra (coefficients free of q)."""

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, (int, LaurentQ, IVLPoly)):
            return self.scale(other)
        if isinstance(other, FHElem):
            return _bilinear(self, other, classical_structure_constants, FHElem)
        return NotImplemented


def K(mu: Iterable[int], coeff=1) -> FHqElem:
    return FHqElem({tuple(mu): coeff})


# interpolation -------------------------------------------------------------


def _fit(lam: Partition, points: list[tuple[int, LaurentQ]], cap: int) -> IVLPoly:
    """Lowest-degree interpolant (degree <= cap) through all points."""
    pts = sorted(points)
    for deg in range(min(cap, len(pts) - 1) + 1):
        if len(pts) <= deg + 1 and deg < cap:
            break
        poly = interpolate_binomial(pts[:deg + 1])
        if all(poly(n) == v for n, v in pts[deg + 1:]):
            if len(pts) == deg + 1:
                raise ValidationFailed(f"no held-out node left for {lam}")
            return poly
    raise ValidationFailed(f"coefficient of {lam} has no interpolant of degree <= {cap}: {pts}")


def _nodes(lam: Partition, k: int) -> range:
    """Ranks used for lambda: from |lam| + l(lam), degree cap plus one held out."""
    return range(lam.support_rank, lam.support_rank + (k - lam.size) + 2)


def _key(mu: Partition, nu: Partition) -> tuple[Partition, Partition]:
    return tuple(sorted((Partition(mu), Partition(nu))))


_memory: dict[tuple, dict[Partition, IVLPoly]] = {}


def structure_constants(mu: Partition, nu: Partition) -> dict[Partition, IVLPoly]:
    """{lambda: phi_{mu,nu}^lambda(q, t)}, zero entries omitted."""
    mu, nu = _key(mu, nu)
    k = mu.size + nu.size
    check_size(k, guards.k_max, "|mu| + |nu|")
    if (mu, nu) in _memory:
        return dict(_memory[(mu, nu)])
    skey = f"mu={','.join(map(str, mu))};nu={','.join(map(str, nu))}"
    rec = cache.lookup("phi", skey)
    if rec is not None:
        out = {Partition(r["lambda"]): IVLPoly.from_json(r["phi"]) for r in rec}
    else:
        out = _compute_structure_constants(mu, nu)
        cache.store("phi", skey, [{"lambda": list(l), "phi": p.to_json()}
                                  for l, p in sorted(out.items())])
    _memory[(mu, nu)] = out
    return dict(out)


def _compute_structure_constants(mu: Partition, nu: Partition) -> dict[Partition, IVLPoly]:
    k = mu.size + nu.size
    if not mu:
        return {nu: IVLPoly(1)}
    lams = partitions_up_to(k)
    wanted: dict[int, list[Partition]] = {}
    for lam in lams:
        for n in _nodes(lam, k):
            wanted.setdefault(n, []).append(lam)
    values: dict[int, dict[Partition, LaurentQ]] = {}
    for n in sorted(wanted):
        if max(mu.support_rank, nu.support_rank) > n:
            values[n] = {}
        elif n <= DIRECT_MAX:
            # internal ranks are bounded by k_max, not by the user-facing rank guard
            coeffs = gamma_expand(mul(gamma(n, mu, DIRECT_MAX), gamma(n, nu, DIRECT_MAX)), DIRECT_MAX)
            stray = [lam for lam in coeffs if lam.size > k]
            if stray:
                raise ValidationFailed(f"Gamma_{stray[0]} occurs in Gamma_{mu} Gamma_{nu} at n={n}")
            values[n] = coeffs
        else:
            values[n] = _coefficients_fast(n, mu, nu, wanted[n])
    out = {}
    for lam in lams:
        pts = [(n, values[n].get(lam, LaurentQ())) for n in sorted(values)
               if n >= lam.support_rank and (n <= DIRECT_MAX or lam in wanted[n])]
        poly = _fit(lam, pts, k - lam.size)
        if poly:
            out[lam] = poly
    return out


def _coefficients_fast(n: int, mu: Partition, nu: Partition,
                       lams: list[Partition]) -> dict[Partition, LaurentQ]:
    a, b = gamma_fast(n, mu), gamma_fast(n, nu)
    tab = tables(n)
    out = {}
    for lam in lams:
        if lam.support_rank > n:
            continue
        c = trace_coefficient(a, b, tab.index(minimal_rep(n, lam)))
        if c:
            out[lam] = c
    return out


def _bilinear(a: FHqElem, b: FHqElem, constants, cls):
    out: dict[Partition, IVLPoly] = {}
    for mu, ca in a.items():
        for nu, cb in b.items():
            c = ca * cb
            for lam, phi in constants(mu, nu).items():
                out[lam] = out.get(lam, IVLPoly()) + c * phi
    return cls._raw({lam: v for lam, v in out.items() if v})


def fhq_mul(a: FHqElem, b: FHqElem) -> FHqElem:
    return _bilinear(a, b, structure_constants, FHqElem)


def phi_nq(x: FHqElem, n: int) -> HeckeElem:
    """Sum a_mu(q, n) Gamma_mu in H_n(q)."""
    out = HeckeElem(n)
    for mu, c in x.items():
        if mu.support_rank <= n:
            v = c(n)
            if v:
                out = out + gamma(n, mu).scale(v)
    return out


def theta(x: FHqElem) -> FHElem:
    """Substitute q = 1 in every coefficient."""
    return FHElem._raw({lam: v for lam, v in ((l, c.at_q1()) for l, c in x.items()) if v})


# classical Farahat-Higman algebra -----------------------------------------


@lru_cache(maxsize=None)
def classical_structure_constants(mu: Partition, nu: Partition) -> dict[Partition, IVLPoly]:
    """
    phi_{mu,nu}^lambda(t) for Z(Z S_n), by counting: the coefficient of X_lambda
    in X_mu X_nu is #{x in C_mu : x^-1 w in C_nu} for a fixed w of type lambda.
    """
    mu, nu = _key(mu, nu)
    k = mu.size + nu.size
    check_size(k, guards.k_max, "|mu| + |nu|")
    if not mu:
        return {nu: IVLPoly(1)}
    out = {}
    for lam in partitions_up_to(k):
        pts = []
        for n in _nodes(lam, k):
            w = minimal_rep(n, lam)
            count = sum(1 for x in class_elements(n, mu) if reduced_cycle_type(x.inverse() * w) == nu)
            pts.append((n, LaurentQ(count)))
        poly = _fit(lam, pts, k - lam.size)
        if poly:
            out[lam] = poly
    return out


def classical_phi_n(x: FHElem, n: int) -> dict:
    """Sum a_mu(n) X_mu in the group algebra Z S_n."""
    out: dict = {}
    for mu, c in x.items():
        if mu.support_rank <= n:
            v = c(n)
            if v:
                out = ga_add(out, ga_scale(class_sum(n, mu), v.constant()))
    return out


# the isomorphism Psi_q ------------------------------------------------------


@lru_cache(maxsize=None)
def _psi_e_monomial(lam: Partition) -> FHqElem:
    """Psi_q(e_{lam_1} e_{lam_2} ...)."""
    if not lam:
        return K(())
    head = FHqElem({mu: 1 for mu in partitions(lam[0])})
    return _psi_e_monomial(Partition(lam[1:])) * head


def psi(f: SymFuncElem) -> FHqElem:
    """Psi_q: e_r goes to the sum of K_mu over mu |- r."""
    out = FHqElem()
    for lam, c in m_to_e(f).items():
        out = out + _psi_e_monomial(lam).scale(c)
    return out


@dataclass(frozen=True)
class NMatrix:
    """Top filtration layer of Psi_q on m_mu, |mu| = k: entry [nu][mu]."""

    k: int
    basis: tuple[Partition, ...]
    entries: tuple[tuple[LaurentQ, ...], ...]
    determinant: LaurentQ

    def column(self, mu: Partition) -> dict[Partition, LaurentQ]:
        j = self.basis.index(Partition(mu))
        return {nu: self.entries[i][j] for i, nu in enumerate(self.basis)}

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "basis": [list(p) for p in self.basis],
            "entries": [[c.to_json() for c in row] for row in self.entries],
            "det": self.determinant.to_json(),
        }


@lru_cache(maxsize=None)
def n_matrix(k: int) -> NMatrix:
    check_size(k, guards.k_max, "k")
    basis = tuple(sorted(partitions(k)))
    cols = []
    for mu in basis:
        image = psi(m(mu))
        col = []
        for nu in basis:
            c = image[nu]
            if not c.is_constant():
                raise TDependentEntry(f"N[{nu}][{mu}] = {c} depends on t")
            col.append(c.constant())
        cols.append(col)
    entries = tuple(tuple(cols[j][i] for j in range(len(basis))) for i in range(len(basis)))
    d = det(entries)
    if not d.is_laurent() or not d.to_laurent().is_unit():
        raise NonUnitDeterminant(f"det N^({k}) = {d}")
    return NMatrix(k, basis, entries, d.to_laurent())


@lru_cache(maxsize=None)
def _n_inverse(k: int) -> tuple[tuple[LaurentQ, ...], ...]:
    nm = n_matrix(k)
    inv = inverse(nm.entries)
    out = []
    for row in inv:
        for c in row:
            if not c.is_laurent():
                raise NotLaurent(f"inverse of N^({k}) has entry {c}")
        out.append(tuple(c.to_laurent() for c in row))
    return tuple(out)


@lru_cache(maxsize=None)
def psi_inverse(mu: Partition) -> SymFuncElem:
    """f_mu: the symmetric function with psi(f_mu) = K_mu."""
    mu = Partition(mu)
    check_size(mu.size, guards.k_max, "|mu|")
    target = K(mu)
    f = SymFuncElem()
    while target:
        d = target.degree()
        basis = n_matrix(d).basis
        ninv = _n_inverse(d)
        top = [target[nu] for nu in basis]
        g = SymFuncElem()
        for i, lam in enumerate(basis):
            c = IVLPoly()
            for j in range(len(basis)):
                if ninv[i][j] and top[j]:
                    c = c + top[j] * ninv[i][j]
            if c:
                g = g + m(lam, c)
        f = f + g
        target = target - psi(g)
        if target and target.degree() >= d:
            raise ResidualNonzero(f"degree {d} layer did not cancel")
    if psi(f) != K(mu):
        raise ResidualNonzero(f"psi(f_{mu}) != K_{mu}")
    return f
