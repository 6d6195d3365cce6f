"""
Exact linear algebra over Q(q).

Dense routines work on lists of lists of `RationalQ`. `sparse_solve` handles
the large, very sparse systems that characterise central elements: rows are
dicts ``unknown -> coefficient`` and every row carries a (sparse) vector of
right-hand sides, so several systems sharing one matrix are solved at once.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Hashable, Sequence

from .exactalg import LaurentQ, RationalQ

__all__ = [
    "Underdetermined", "Inconsistent",
    "to_rational_matrix", "det", "inverse", "sparse_solve",
]


class Underdetermined(ArithmeticError):
    """The system does not pin down every unknown."""


class Inconsistent(ArithmeticError):
    """The system has no solution."""


def to_rational_matrix(rows) -> list[list[RationalQ]]:
    return [[RationalQ(x) for x in row] for row in rows]


def det(matrix: Sequence[Sequence]) -> RationalQ:
    a = to_rational_matrix(matrix)
    n = len(a)
    result = RationalQ(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            return RationalQ(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            result = -result
        p = a[col][col]
        result = result * p
        inv = p.inverse()
        for i in range(col + 1, n):
            if a[i][col]:
                f = a[i][col] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return result


def inverse(matrix: Sequence[Sequence]) -> list[list[RationalQ]]:
    a = to_rational_matrix(matrix)
    n = len(a)
    for i, row in enumerate(a):
        row.extend(RationalQ(1 if j == i else 0) for j in range(n))
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def _is_unit(c: RationalQ) -> bool:
    return len(c.num) >= 1 and c.den[:-1] == (0,) * (len(c.den) - 1) \
        and sum(1 for x in c.num if x) == 1


def sparse_solve(
    rows: list[dict[Hashable, RationalQ | LaurentQ | int]],
    rhs: list[dict[Hashable, RationalQ | LaurentQ | int]],
    unknowns: Sequence[Hashable],
) -> dict[Hashable, dict[Hashable, RationalQ]]:
    """
    Solve ``sum_u rows[i][u] * x_u = rhs[i]`` for every unknown.

    The right-hand sides are vectors indexed by arbitrary keys; the solution
    maps each unknown to its vector of values (zeros omitted). Pivots are taken
    from rows with a single remaining unknown first, preferring unit
    coefficients; when none remain, a shortest row is used for a general
    elimination step.

    Raises `Inconsistent` if a row reduces to ``0 = nonzero`` and
    `Underdetermined` if some unknown is left free.
    """
    work: list[dict] = [{u: RationalQ(c) for u, c in r.items() if c} for r in rows]
    vec: list[dict] = [{k: RationalQ(c) for k, c in b.items() if c} for b in rhs]
    occurs: dict[Hashable, set[int]] = defaultdict(set)
    for i, r in enumerate(work):
        for u in r:
            occurs[u].add(i)

    solution: dict[Hashable, dict] = {}
    deferred: dict[Hashable, tuple[dict, dict]] = {}
    singles_unit: list[int] = []
    singles_other: list[int] = []

    def enqueue(i: int) -> None:
        r = work[i]
        if len(r) == 1:
            (c,) = r.values()
            (singles_unit if _is_unit(c) else singles_other).append(i)

    for i in range(len(work)):
        enqueue(i)

    def substitute(u, value: dict) -> None:
        for i in list(occurs.pop(u, ())):
            r = work[i]
            c = r.pop(u)
            if value:
                b = vec[i]
                for k, v in value.items():
                    nv = b.get(k, RationalQ(0)) - c * v
                    if nv:
                        b[k] = nv
                    else:
                        b.pop(k, None)
            if not r:
                if vec[i]:
                    raise Inconsistent(f"row {i} reduces to 0 = {vec[i]}")
            else:
                enqueue(i)

    remaining = set(unknowns)
    while remaining:
        i = None
        while singles_unit or singles_other:
            cand = singles_unit.pop() if singles_unit else singles_other.pop()
            if len(work[cand]) == 1:
                i = cand
                break
        if i is not None:
            (u, c), = work[i].items()
            inv = c.inverse()
            value = {k: v * inv for k, v in vec[i].items()}
            work[i] = {}
            vec[i] = {}
            occurs[u].discard(i)
            solution[u] = value
            remaining.discard(u)
            substitute(u, value)
            continue
        # no single-unknown row: eliminate with a shortest row
        live = [j for j, r in enumerate(work) if r]
        if not live:
            break
        j = min(live, key=lambda j: len(work[j]))
        pivot_row = work[j]
        u = next(iter(pivot_row))
        inv = pivot_row[u].inverse()
        prow = {w: c * inv for w, c in pivot_row.items()}
        pvec = {k: v * inv for k, v in vec[j].items()}
        for i2 in list(occurs[u]):
            if i2 == j:
                continue
            f = work[i2][u]
            r = work[i2]
            for w, c in prow.items():
                nv = r.get(w, RationalQ(0)) - f * c
                if nv:
                    if w not in r:
                        occurs[w].add(i2)
                    r[w] = nv
                else:
                    if w in r:
                        del r[w]
                        occurs[w].discard(i2)
            b = vec[i2]
            for k, v in pvec.items():
                nv = b.get(k, RationalQ(0)) - f * v
                if nv:
                    b[k] = nv
                else:
                    b.pop(k, None)
            if not r and b:
                raise Inconsistent(f"row {i2} reduces to 0 = {b}")
            enqueue(i2)
        # u now occurs only in the pivot row, which expresses it through the
        # other unknowns; park it until those are known
        for w in prow:
            occurs[w].discard(j)
        occurs.pop(u, None)
        work[j], vec[j] = {}, {}
        deferred[u] = (prow, pvec)
        remaining.discard(u)

    # back-substitute unknowns eliminated in general steps, newest first
    for u, (prow, pvec) in reversed(list(deferred.items())):
        value = dict(pvec)
        for w, c in prow.items():
            if w == u:
                continue
            if w not in solution:
                raise Underdetermined(f"unknown {w!r} is free")
            for k, v in solution[w].items():
                nv = value.get(k, RationalQ(0)) - c * v
                if nv:
                    value[k] = nv
                else:
                    value.pop(k, None)
        solution[u] = value

    missing = [u for u in unknowns if u not in solution]
    if missing:
        raise Underdetermined(f"{len(missing)} unknowns left free, e.g. {missing[0]!r}")
    for i, r in enumerate(work):
        if not r and vec[i]:
            raise Inconsistent(f"row {i} reduces to 0 = {vec[i]}")
    return solution

