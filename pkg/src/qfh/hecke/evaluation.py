"""
Evaluation of symmetric functions at Jucys-Murphy elements.

`jm_element` follows L_i = sum_{j<i} q^(j-i) T_(i,j), whose eigenvalues on
the seminormal basis are the q-numbers [c]_q. Evaluation uses the rescaled
elements q L_i, the normalization under which e_r goes to the sum of the
Gamma_mu over mu |- r. Both facts are checked in the test suite.
"""

from __future__ import annotations

from ..exactalg import q
from ..symfunc import EPolyElem, SymFuncElem, m_to_e
from .algebra import HeckeElem, identity, jm_element

__all__ = ["jm_normalized", "elementary_at_jm", "ev_n"]


def jm_normalized(i: int, n: int) -> HeckeElem:
    """q L_i = sum_{j<i} q^(j-i+1) T_(i,j)."""
    return jm_element(i, n).scale(q)


def elementary_at_jm(n: int, top: int) -> list[HeckeElem]:
    """[e_0, ..., e_top] at qL_1, ..., qL_n."""
    out = [identity(n)] + [HeckeElem(n) for _ in range(top)]
    for i in range(2, n + 1):  # L_1 = 0 contributes nothing
        x = jm_normalized(i, n)
        for r in range(min(top, i - 1), 0, -1):
            if out[r - 1]:
                out[r] = out[r] + out[r - 1] * x
    return out


def ev_n(f: SymFuncElem | EPolyElem, n: int) -> HeckeElem:
    """Set t = n and evaluate at the (normalized) JM elements of H_n(q)."""
    p = f if isinstance(f, EPolyElem) else m_to_e(f)
    top = max((max(lam) for lam in p.terms if lam), default=0)
    ev = elementary_at_jm(n, top)
    total = HeckeElem(n)
    for lam, c in p.items():
        coeff = c(n)
        if not coeff:
            continue
        term = identity(n)
        for r in lam:
            term = term * ev[r]
            if not term:
                break
        total = total + term.scale(coeff)
    return total
