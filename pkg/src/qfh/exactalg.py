"""
Exact coefficient arithmetic.

Three value types live here:

* `LaurentQ`  -- elements of Z[q, q^-1], stored sparsely as exponent -> int.
* `RationalQ` -- elements of Q(q), a reduced fraction num/den of polynomials.
* `IVLPoly`   -- integer-valued polynomials in t with Laurent coefficients,
  stored in the binomial basis ``sum_r c_r(q) * binom(t, r)``.

Everything is exact; Python ints carry arbitrary precision.

>>> qnumber(3)
q^2 + q + 1
>>> qnumber(-2)
-q^-1 - q^-2
>>> p = IVLPoly({2: q})
>>> p(4)
6*q
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, lcm
from typing import Iterable, Mapping

from sympy.polys.densearith import dup_exquo
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_gcd

__all__ = [
    "LaurentQ", "RationalQ", "IVLPoly", "XPoly",
    "NonIntegral", "NotLaurent",
    "q", "qnumber", "binom", "ivl_eval", "interpolate_binomial",
    "binomial_product_coefficient",
]


class NonIntegral(ArithmeticError):
    """An interpolant does not lie in the integer-valued ring."""


class NotLaurent(ArithmeticError):
    """A rational function is not a Laurent polynomial."""


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentQ:
    """An element of Z[q, q^-1]; immutable, zero coefficients never stored."""

    __slots__ = ("_t", "_h")

    def __init__(self, terms: Mapping[int, int] | int | None = None):
        if terms is None:
            self._t = {}
        elif isinstance(terms, int):
            self._t = {0: terms} if terms else {}
        else:
            self._t = {int(e): int(c) for e, c in terms.items() if c}
        self._h = None

    @classmethod
    def _raw(cls, d: dict) -> LaurentQ:
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._t = d
        obj._h = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentQ:
        return cls._raw({exponent: coeff} if coeff else {})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def degree(self) -> int | None:
        return max(self._t) if self._t else None

    def valuation(self) -> int | None:
        return min(self._t) if self._t else None

    def is_unit(self) -> bool:
        """True for the units of Z[q, q^-1], which are exactly +-q^m."""
        return len(self._t) == 1 and abs(next(iter(self._t.values()))) == 1

    def is_constant(self) -> bool:
        return not self._t or set(self._t) == {0}

    def constant(self) -> int:
        return self._t.get(0, 0)

    def at_one(self) -> int:
        return sum(self._t.values())

    def evaluate(self, value) -> Fraction | int:
        """Substitute a number for q (Fraction for negative exponents)."""
        total = 0
        for e, c in self._t.items():
            total += c * (Fraction(value) ** e if e < 0 else value ** e)
        return total

    def shift(self, k: int) -> LaurentQ:
        """Multiply by q^k."""
        return LaurentQ._raw({e + k: c for e, c in self._t.items()})

    # arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentQ | None:
        if isinstance(other, LaurentQ):
            return other
        if isinstance(other, int):
            return LaurentQ(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._t:
            return self
        d = dict(self._t)
        for e, c in o._t.items():
            v = d.get(e, 0) + c
            if v:
                d[e] = v
            else:
                d.pop(e, None)
        return LaurentQ._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentQ._raw({})
            return LaurentQ._raw({e: c * other for e, c in self._t.items()})
        if not isinstance(other, LaurentQ):
            return NotImplemented
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (f, k), = b.items()
            return LaurentQ._raw({e + f: c * k for e, c in a.items()})
        d: dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentQ._raw({e: c for e, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise NotLaurent(f"{self} is not invertible in Z[q,q^-1]")
            (e, c), = self._t.items()
            return LaurentQ._raw({-e * (-k): c ** (-k)})
        result = LaurentQ(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, other: LaurentQ | int) -> LaurentQ:
        """Exact division in Z[q, q^-1]; raises NotLaurent if it does not divide."""
        return (RationalQ(self) / RationalQ(other)).to_laurent()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    # display / serialization -----------------------------------------------

    def __repr__(self):
        return str(self)

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for e in sorted(self._t, reverse=True):
            c = self._t[e]
            if e == 0:
                mono = str(abs(c))
            else:
                power = "q" if e == 1 else f"q^{e}"
                mono = power if abs(c) == 1 else f"{abs(c)}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out

    def to_json(self) -> dict[str, str]:
        return {str(e): str(c) for e, c in sorted(self._t.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> LaurentQ:
        return cls({int(e): int(c) for e, c in data.items()})


q = LaurentQ.monomial(1)


def qnumber(m: int) -> LaurentQ:
    """The q-number [m]_q, extended to negative m by [m]_q = -(q^-1 + ... + q^m)."""
    if m >= 0:
        return LaurentQ._raw({e: 1 for e in range(m)})
    return LaurentQ._raw({e: -1 for e in range(m, 0)})


# ---------------------------------------------------------------------------
# Rational functions
#
# Polynomials below are lists of coefficients, lowest degree first.


def _trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _padd(a: list, b: list, sign: int = 1) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + sign * (b[i] if i < len(b) else 0)
           for i in range(n)]
    return _trim(out)


def _to_dup(p: list) -> list:
    return [QQ(c.numerator, c.denominator) if isinstance(c, Fraction) else QQ(c)
            for c in reversed(p)]


def _from_dup(p: list) -> list:
    return [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(p)]


class RationalQ:
    """
    An element of Q(q) in canonical form num/den.

    The denominator is a primitive integer polynomial with positive leading
    coefficient, coprime to the numerator; the numerator may then need
    rational coefficients (1/2 has numerator 1/2 and denominator 1).
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None):
        if isinstance(num, RationalQ) and den is None:
            self.num, self.den = num.num, num.den
            return
        n_list, n_shift = _as_poly(num)
        if den is None:
            d_list, d_shift = [1], 0
        else:
            d_list, d_shift = _as_poly(den)
        shift = n_shift - d_shift
        if shift > 0:
            n_list = [0] * shift + n_list
        elif shift < 0:
            d_list = [0] * (-shift) + d_list
        self.num, self.den = _normalize(n_list, d_list)

    @classmethod
    def _raw(cls, num: tuple, den: tuple) -> RationalQ:
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def _build(cls, num: list, den: list) -> RationalQ:
        return cls._raw(*_normalize(num, den))

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_laurent(self) -> bool:
        return (all(c == 0 for c in self.den[:-1]) and self.den[-1] == 1
                and all(Fraction(c).denominator == 1 for c in self.num))

    def to_laurent(self) -> LaurentQ:
        if not self.is_laurent():
            raise NotLaurent(f"{self} is not a Laurent polynomial")
        m = len(self.den) - 1
        return LaurentQ({i - m: int(c) for i, c in enumerate(self.num) if c})

    def at_one(self) -> Fraction:
        d = sum(self.den)
        if d == 0:
            raise ZeroDivisionError("pole at q = 1")
        return Fraction(sum(Fraction(c) for c in self.num)) / d

    @staticmethod
    def _coerce(other) -> RationalQ | None:
        if isinstance(other, RationalQ):
            return other
        if isinstance(other, (int, Fraction, LaurentQ)):
            return RationalQ(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return RationalQ._build(_padd(list(self.num), list(o.num)), list(self.den))
        num = _padd(_pmul(list(self.num), list(o.den)), _pmul(list(o.num), list(self.den)))
        return RationalQ._build(num, _pmul(list(self.den), list(o.den)))

    __radd__ = __add__

    def __neg__(self):
        return RationalQ._raw(tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return RationalQ._raw((), (1,))
        return RationalQ._build(_pmul(list(self.num), list(o.num)),
                                _pmul(list(self.den), list(o.den)))

    __rmul__ = __mul__

    def inverse(self) -> RationalQ:
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return RationalQ._build(list(self.den), list(self.num))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return str(self)

    def __str__(self):
        num = _poly_str(self.num)
        if self.den == (1,):
            return num
        return f"({num})/({_poly_str(self.den)})"


def _poly_str(p) -> str:
    if not p:
        return "0"
    terms = []
    for e in range(len(p) - 1, -1, -1):
        c = p[e]
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            power = "q" if e == 1 else f"q^{e}"
            terms.append(power if c == 1 else ("-" + power if c == -1 else f"{c}*{power}"))
    return " + ".join(terms).replace("+ -", "- ")


def _as_poly(x) -> tuple[list, int]:
    """Coefficient list (lowest first) and q-exponent of the lowest slot."""
    if isinstance(x, RationalQ):
        raise TypeError("nested RationalQ")
    if isinstance(x, (int, Fraction)):
        return ([x] if x else []), 0
    if isinstance(x, LaurentQ):
        if x.is_zero():
            return [], 0
        lo, hi = x.valuation(), x.degree()
        return [x._t.get(e, 0) for e in range(lo, hi + 1)], lo
    if isinstance(x, (list, tuple)):
        return list(x), 0
    raise TypeError(f"cannot read {type(x).__name__} as a polynomial in q")


def _normalize(num: list, den: list) -> tuple[tuple, tuple]:
    num, den = _trim(list(num)), _trim(list(den))
    if not den:
        raise ZeroDivisionError("zero denominator in Q(q)")
    if not num:
        return (), (1,)
    # cancel common powers of q
    k = 0
    while not num[k] and not den[k]:
        k += 1
    if k:
        num, den = num[k:], den[k:]
    if len(den) > 1 and any(den[:-1]):
        g = dup_gcd(_to_dup(num), _to_dup(den), QQ)
        if len(g) > 1:
            num = _from_dup(dup_exquo(_to_dup(num), g, QQ))
            den = _from_dup(dup_exquo(_to_dup(den), g, QQ))
    # make den primitive over Z with positive leading coefficient
    fr = [Fraction(c) for c in den]
    scale = Fraction(lcm(*(c.denominator for c in fr)))
    ints = [int(c * scale) for c in fr]
    content = gcd(*ints)
    if ints[-1] < 0:
        content = -content
    scale /= content
    den_t = tuple(c // content for c in ints)
    num_t = tuple(_simplify(Fraction(c) * scale) for c in num)
    return num_t, den_t


def _simplify(c: Fraction):
    return c.numerator if c.denominator == 1 else c


# ---------------------------------------------------------------------------
# Integer-valued polynomials


def binom(n: int, r: int) -> int:
    """binom(n, r) as a polynomial in n; valid for negative n."""
    if r < 0:
        return 0
    if n >= 0:
        return comb(n, r)
    # binom(-m, r) = (-1)^r binom(m + r - 1, r)
    return (-1) ** r * comb(-n + r - 1, r)


@lru_cache(maxsize=None)
def binomial_product_coefficient(i: int, j: int, k: int) -> int:
    """N_ijk in binom(t,i)*binom(t,j) = sum_k N_ijk binom(t,k)."""
    if k < max(i, j) or k > i + j:
        return 0
    return comb(k, i) * comb(i, k - j)


class IVLPoly:
    """
    sum_r c_r(q) binom(t, r) with c_r in Z[q, q^-1].

    >>> p = IVLPoly({1: q - 1, 0: 1 - q})   # (q-1)(t-1)
    >>> p(1), p(3)
    (0, 2*q - 2)
    """

    __slots__ = ("_c", "_h")

    def __init__(self, coeffs: Mapping[int, LaurentQ | int] | LaurentQ | int | None = None):
        if coeffs is None:
            self._c = {}
        elif isinstance(coeffs, (LaurentQ, int)):
            c = LaurentQ(coeffs) if isinstance(coeffs, int) else coeffs
            self._c = {0: c} if c else {}
        else:
            d = {}
            for r, c in coeffs.items():
                if r < 0:
                    raise ValueError("binomial index must be nonnegative")
                c = LaurentQ(c) if isinstance(c, int) else c
                if c:
                    d[int(r)] = c
            self._c = d
        self._h = None

    @classmethod
    def _raw(cls, d: dict) -> IVLPoly:
        obj = cls.__new__(cls)
        obj._c = d
        obj._h = None
        return obj

    @classmethod
    def binomial(cls, r: int, coeff: LaurentQ | int = 1) -> IVLPoly:
        return cls({r: coeff})

    @property
    def coeffs(self) -> dict[int, LaurentQ]:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def __getitem__(self, r: int) -> LaurentQ:
        return self._c.get(r, LaurentQ())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def degree(self) -> int | None:
        """Degree in t (None for zero)."""
        return max(self._c) if self._c else None

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def constant(self) -> LaurentQ:
        """The value as a Laurent polynomial; requires t-independence."""
        if not self.is_constant():
            raise ValueError(f"{self} depends on t")
        return self._c.get(0, LaurentQ())

    def __call__(self, n: int) -> LaurentQ:
        return ivl_eval(self, n)

    def at_q1(self) -> IVLPoly:
        return IVLPoly({r: c.at_one() for r, c in self._c.items()})

    def map_coeffs(self, f) -> IVLPoly:
        return IVLPoly({r: f(c) for r, c in self._c.items()})

    @staticmethod
    def _coerce(other) -> IVLPoly | None:
        if isinstance(other, IVLPoly):
            return other
        if isinstance(other, (int, LaurentQ)):
            return IVLPoly(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = dict(self._c)
        for r, c in o._c.items():
            v = d[r] + c if r in d else c
            if v:
                d[r] = v
            else:
                d.pop(r, None)
        return IVLPoly._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return IVLPoly._raw({r: -c for r, c in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentQ)):
            if not other:
                return IVLPoly._raw({})
            return IVLPoly({r: c * other for r, c in self._c.items()})
        if not isinstance(other, IVLPoly):
            return NotImplemented
        d: dict[int, LaurentQ] = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                ab = a * b
                for k in range(max(i, j), i + j + 1):
                    d[k] = d.get(k, LaurentQ()) + ab * binomial_product_coefficient(i, j, k)
        return IVLPoly({k: c for k, c in d.items() if c})

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self._c.items()))
        return self._h

    def __repr__(self):
        return str(self)

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for r in sorted(self._c, reverse=True):
            c = self._c[r]
            if r == 0:
                parts.append(f"({c})")
            else:
                factor = "" if c == 1 else f"({c})*"
                parts.append(f"{factor}C(t,{r})")
        return " + ".join(parts)

    def to_json(self) -> dict[str, dict[str, str]]:
        return {str(r): c.to_json() for r, c in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data) -> IVLPoly:
        return cls({int(r): LaurentQ.from_json(c) for r, c in data.items()})


def ivl_eval(p: IVLPoly, n: int) -> LaurentQ:
    """Evaluate t -> n exactly."""
    total = LaurentQ()
    for r, c in p.items():
        b = binom(n, r)
        if b:
            total = total + c * b
    return total


def interpolate_binomial(points: Iterable[tuple[int, LaurentQ | int]]) -> IVLPoly:
    """
    The unique IVLPoly of t-degree < len(points) through the given points.

    Consecutive nodes are fitted division-free with forward differences;
    other node sets go through an exact rational solve whose result must
    come out integral.

    >>> interpolate_binomial([(0, 0), (1, 0), (2, q), (3, 3*q)])
    (q)*C(t,2)
    """
    pts = sorted(((int(n), LaurentQ(v) if isinstance(v, int) else v) for n, v in points),
                 key=lambda p: p[0])
    if not pts:
        raise ValueError("need at least one point")
    nodes = [n for n, _ in pts]
    if len(set(nodes)) != len(nodes):
        raise ValueError("interpolation nodes must be distinct")
    values = [v for _, v in pts]
    if nodes == list(range(nodes[0], nodes[0] + len(nodes))):
        return _fit_consecutive(nodes[0], values)
    return _fit_general(nodes, values)


def _fit_consecutive(n0: int, values: list[LaurentQ]) -> IVLPoly:
    # Newton form in binom(t - n0, r), then Vandermonde's identity
    # binom(t - n0, r) = sum_j binom(-n0, r - j) binom(t, j).
    diffs = []
    row = list(values)
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    out: dict[int, LaurentQ] = {}
    for r, d in enumerate(diffs):
        if not d:
            continue
        for j in range(r + 1):
            w = binom(-n0, r - j)
            if w:
                out[j] = out.get(j, LaurentQ()) + d * w
    return IVLPoly({j: c for j, c in out.items() if c})


def _fit_general(nodes: list[int], values: list[LaurentQ]) -> IVLPoly:
    m = len(nodes)
    exps = sorted({e for v in values for e in v._t})
    # rows binom(n_i, r); solve for every q-exponent at once
    a = [[Fraction(binom(n, r)) for r in range(m)]
         + [Fraction(v._t.get(e, 0)) for e in exps]
         for n, v in zip(nodes, values)]
    for col in range(m):
        piv = next(i for i in range(col, m) if a[i][col])
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(m):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    out = {}
    for r in range(m):
        coeffs = {}
        for k, e in enumerate(exps):
            c = a[r][m + k]
            if c.denominator != 1:
                raise NonIntegral(f"coefficient of binom(t,{r}) has non-integral q^{e} term {c}")
            if c:
                coeffs[e] = int(c)
        if coeffs:
            out[r] = LaurentQ(coeffs)
    return IVLPoly(out)


# ---------------------------------------------------------------------------
# Polynomials in x over Z[q, q^-1]


class XPoly:
    """Polynomial in x with LaurentQ coefficients, lowest degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[LaurentQ | int] = ()):
        c = [LaurentQ(a) if isinstance(a, int) else a for a in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def x(cls) -> XPoly:
        return cls([0, 1])

    def degree(self) -> int:
        return len(self.c) - 1

    def __add__(self, other):
        other = other if isinstance(other, XPoly) else XPoly([other])
        n = max(len(self.c), len(other.c))
        z = LaurentQ()
        return XPoly([(self.c[i] if i < len(self.c) else z) + (other.c[i] if i < len(other.c) else z)
                      for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return XPoly([-a for a in self.c])

    def __sub__(self, other):
        other = other if isinstance(other, XPoly) else XPoly([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, XPoly):
            return XPoly([a * other for a in self.c])
        if not self.c or not other.c:
            return XPoly()
        out = [LaurentQ()] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] = out[i + j] + a * b
        return XPoly(out)

    __rmul__ = __mul__

    def compose_linear(self, a: LaurentQ | int, b: LaurentQ | int) -> XPoly:
        """p(a*x + b), by Horner."""
        lin = XPoly([b, a])
        out = XPoly()
        for coeff in reversed(self.c):
            out = out * lin + XPoly([coeff])
        return out

    def __eq__(self, other):
        if isinstance(other, (int, LaurentQ)):
            other = XPoly([other])
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for i in range(len(self.c) - 1, -1, -1):
            if self.c[i]:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(f"({self.c[i]})" + ("*" + mono if mono else ""))
        return " + ".join(terms)

