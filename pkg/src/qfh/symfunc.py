"""
Symmetric functions with coefficients in R[q, q^-1], where R is the ring of
integer-valued polynomials in t.

`SymFuncElem` stores monomial-basis coordinates; `EPolyElem` stores the same
kind of object as a polynomial in e_1, e_2, ... (keys are partitions listing
the e-indices of each monomial).

>>> print(monomial_mul(m([1]), m([1])))
m(2) + 2*m(1,1)
>>> print(m_to_e(m([2])))
e(1,1) - 2*e(2)
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .combinat import Partition
from .exactalg import IVLPoly, LaurentQ

__all__ = [
    "LinearCombination", "SymFuncElem", "EPolyElem", "m", "e", "one",
    "monomial_mul", "monomial_mul_expand", "e_to_m", "m_to_e",
    "evaluate", "monomial_value", "elementary_values",
]

Coeff = IVLPoly | LaurentQ | int


def _ivl(c: Coeff) -> IVLPoly:
    return c if isinstance(c, IVLPoly) else IVLPoly(c)


def _fmt_coeff(c: IVLPoly) -> str:
    if c.is_constant():
        k = c.constant()
        if k.is_constant():
            return str(k.constant())
        return str(k) if len(k.terms) == 1 else f"({k})"
    return f"({c})"


class LinearCombination:
    """Shared behaviour of the two coordinate systems."""

    __slots__ = ("_terms",)
    _label = "?"

    @staticmethod
    def _order(lam: Partition):
        return (-lam.size, tuple(-x for x in lam))

    def __init__(self, terms: Mapping[Iterable[int], Coeff] | None = None):
        self._terms: dict[Partition, IVLPoly] = {}
        for lam, c in (terms or {}).items():
            lam = Partition(lam)
            c = _ivl(c)
            v = self._terms.get(lam, IVLPoly()) + c
            if v:
                self._terms[lam] = v
            else:
                self._terms.pop(lam, None)

    @classmethod
    def _raw(cls, terms: dict):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @property
    def terms(self) -> dict[Partition, IVLPoly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, lam) -> IVLPoly:
        return self._terms.get(Partition(lam), IVLPoly())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int | None:
        return max(l.size for l in self._terms) if self._terms else None

    def __add__(self, other):
        if isinstance(other, (int, LaurentQ, IVLPoly)):
            other = type(self)({(): other})
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._terms)
        for lam, c in other._terms.items():
            v = out.get(lam, IVLPoly()) + c
            if v:
                out[lam] = v
            else:
                out.pop(lam, None)
        return type(self)._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Coeff):
        c = _ivl(c)
        out = {lam: c * v for lam, v in self._terms.items()}
        return type(self)._raw({lam: v for lam, v in out.items() if v})

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self._terms.items())))

    def map_coeffs(self, f):
        out = {lam: f(c) for lam, c in self._terms.items()}
        return type(self)._raw({lam: v for lam, v in out.items() if v})

    def at_q1(self):
        return self.map_coeffs(IVLPoly.at_q1)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for lam in sorted(self._terms, key=self._order):
            c = _fmt_coeff(self._terms[lam])
            basis = f"{self._label}({','.join(map(str, lam))})" if lam else ""
            if not basis:
                parts.append(c)
            elif c == "1":
                parts.append(basis)
            elif c == "-1":
                parts.append("-" + basis)
            else:
                parts.append(f"{c}*{basis}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class SymFuncElem(LinearCombination):
    """Element of R[q,q^-1] (x) Lambda in the monomial basis."""

    __slots__ = ()
    _label = "m"

    @property
    def min_vars(self) -> int:
        """Fewest variables in which this element is represented faithfully."""
        return max((len(l) for l in self._terms), default=0)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentQ, IVLPoly)):
            return self.scale(other)
        if isinstance(other, SymFuncElem):
            return monomial_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentQ, IVLPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        out = one()
        for _ in range(k):
            out = out * self
        return out

    def to_json(self) -> list:
        return [{"partition": list(lam), "coeff": self._terms[lam].to_json()}
                for lam in sorted(self._terms)]

    @classmethod
    def from_json(cls, data) -> SymFuncElem:
        return cls({tuple(r["partition"]): IVLPoly.from_json(r["coeff"]) for r in data})


class EPolyElem(LinearCombination):
    """Polynomial in the elementary symmetric functions."""

    __slots__ = ()
    _label = "e"

    @staticmethod
    def _order(lam: Partition):
        # e_1^2 before e_2, as polynomials are usually written
        return (-lam.size, -len(lam), tuple(lam))

    def __mul__(self, other):
        if isinstance(other, (int, LaurentQ, IVLPoly)):
            return self.scale(other)
        if not isinstance(other, EPolyElem):
            return NotImplemented
        out: dict[Partition, IVLPoly] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                key = Partition(sorted(a + b, reverse=True))
                out[key] = out.get(key, IVLPoly()) + ca * cb
        return EPolyElem._raw({k: v for k, v in out.items() if v})

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentQ, IVLPoly)):
            return self.scale(other)
        return NotImplemented

    def to_json(self) -> list:
        return [{"epartition": list(lam), "coeff": self._terms[lam].to_json()}
                for lam in sorted(self._terms)]

    @classmethod
    def from_json(cls, data) -> EPolyElem:
        return cls({tuple(r["epartition"]): IVLPoly.from_json(r["coeff"]) for r in data})


def m(lam: Iterable[int], coeff: Coeff = 1) -> SymFuncElem:
    return SymFuncElem({tuple(lam): coeff})


def e(r: int) -> SymFuncElem:
    """e_r = m_(1^r)."""
    return m([1] * r)


def one() -> SymFuncElem:
    return m(())


def _rearrangements(parts: Sequence[int], length: int) -> set[tuple[int, ...]]:
    padded = tuple(parts) + (0,) * (length - len(parts))
    return set(permutations(padded))


@lru_cache(maxsize=None)
def _mm_table(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """m_lam * m_mu = sum c_nu m_nu: c_nu counts (alpha, beta) with alpha + beta = nu."""
    n_vars = len(lam) + len(mu)
    alphas = _rearrangements(lam, n_vars)
    betas = _rearrangements(mu, n_vars)
    counts: Counter = Counter()
    for a in alphas:
        for b in betas:
            s = tuple(x + y for x, y in zip(a, b))
            if all(s[i] >= s[i + 1] for i in range(n_vars - 1)):
                counts[Partition(s)] += 1
    return tuple(sorted(counts.items()))


def monomial_mul(a: SymFuncElem, b: SymFuncElem) -> SymFuncElem:
    """Product in the monomial basis, coefficient of m_nu read at the exponent vector nu."""
    out: dict[Partition, IVLPoly] = {}
    for lam, ca in a.items():
        for mu, cb in b.items():
            c = ca * cb
            for nu, k in _mm_table(lam, mu):
                out[nu] = out.get(nu, IVLPoly()) + c * k
    return SymFuncElem._raw({k: v for k, v in out.items() if v})


def _expand(f: SymFuncElem, n_vars: int) -> dict[tuple[int, ...], IVLPoly]:
    poly: dict[tuple[int, ...], IVLPoly] = {}
    for lam, c in f.items():
        if len(lam) > n_vars:
            continue
        for alpha in _rearrangements(lam, n_vars):
            poly[alpha] = poly.get(alpha, IVLPoly()) + c
    return poly


def monomial_mul_expand(a: SymFuncElem, b: SymFuncElem) -> SymFuncElem:
    """The same product computed by multiplying out polynomials in enough variables."""
    n_vars = a.min_vars + b.min_vars
    pa, pb = _expand(a, n_vars), _expand(b, n_vars)
    prod: dict[tuple[int, ...], IVLPoly] = {}
    for x, cx in pa.items():
        for y, cy in pb.items():
            k = tuple(i + j for i, j in zip(x, y))
            prod[k] = prod.get(k, IVLPoly()) + cx * cy
    out = {}
    for k, c in prod.items():
        if c and all(k[i] >= k[i + 1] for i in range(len(k) - 1)):
            out[Partition(k)] = c
    return SymFuncElem._raw(out)


@lru_cache(maxsize=None)
def _e_monomial(lam: Partition) -> SymFuncElem:
    """e_{lam_1} e_{lam_2} ... in the monomial basis."""
    if not lam:
        return one()
    return monomial_mul(_e_monomial(Partition(lam[1:])), e(lam[0]))


def e_to_m(p: EPolyElem) -> SymFuncElem:
    out = SymFuncElem()
    for lam, c in p.items():
        out = out + _e_monomial(lam).scale(c)
    return out


def m_to_e(f: SymFuncElem) -> EPolyElem:
    """
    The unique e-polynomial equal to f.

    e_{lam'} = m_lam + (terms lower in dominance order), so repeatedly
    cancelling the lexicographically largest monomial terminates.
    """
    rest = f
    out: dict[Partition, IVLPoly] = {}
    while rest:
        top = max(rest.terms, key=lambda l: (l.size, tuple(l)))
        c = rest[top]
        key = top.conjugate()
        out[key] = out.get(key, IVLPoly()) + c
        rest = rest - _e_monomial(key).scale(c)
    return EPolyElem._raw({k: v for k, v in out.items() if v})


def monomial_value(lam: Partition, values: Sequence) -> LaurentQ:
    """m_lam evaluated at the given values (fewer values than parts gives 0)."""
    lam = Partition(lam)
    vals = list(values)
    if len(lam) > len(vals):
        return LaurentQ()

    @lru_cache(maxsize=None)
    def rec(rest: tuple[int, ...], k: int):
        # sum over placements of the multiset rest into variables x_1..x_k
        if not rest:
            return LaurentQ(1)
        if len(rest) > k:
            return LaurentQ()
        x = vals[k - 1]
        total = rec(rest, k - 1)
        for p in sorted(set(rest)):
            i = rest.index(p)
            total = total + x ** p * rec(rest[:i] + rest[i + 1:], k - 1)
        return total

    return rec(tuple(lam), len(vals))


def elementary_values(values: Sequence, top: int) -> list:
    """[e_0, ..., e_top] at the given values: E_r <- E_r + E_{r-1} x."""
    vals = list(values)
    if not vals:
        return [LaurentQ(1)] + [LaurentQ()] * top
    zero = vals[0] * 0
    unit = zero + 1
    out = [unit] + [zero] * top
    for x in vals:
        for r in range(top, 0, -1):
            out[r] = out[r] + out[r - 1] * x
    return out


def evaluate(f: SymFuncElem | EPolyElem, values: Sequence[LaurentQ], t: int) -> LaurentQ:
    """f at the multiset `values` with t set to the given integer."""
    vals = [LaurentQ(v) if isinstance(v, int) else v for v in values]
    total = LaurentQ()
    if isinstance(f, EPolyElem):
        top = max((max(lam) for lam in f.terms if lam), default=0)
        ev = elementary_values(vals, top)
        for lam, c in f.items():
            term = c(t)
            for r in lam:
                term = term * ev[r]
            total = total + term
        return total
    for lam, c in f.items():
        if len(lam) <= len(vals):
            total = total + c(t) * monomial_value(lam, vals)
    return total
