"""
Exact computation in the centres of Iwahori-Hecke algebras H_n(q).

Subpackages and modules:

- `exactalg`: Laurent polynomials, rational functions in q, integer-valued polynomials
- `combinat`: partitions, tableaux, contents, border strips and e-cores
- `symmgroup`: permutations, reduced words, cycle types, class sums
- `hecke`: H_n(q) in the T_w basis, JM elements, the Geck-Rouquier basis
- `symfunc`: monomial and elementary symmetric functions
- `fhq`: the q-Farahat-Higman algebra, Psi_q and the f_mu
- `specht`: seminormal Specht modules, central characters, blocks
"""

from .combinat import Partition, contents, e_core, partitions, q_contents
from .errors import SizeGuard, guards
from .exactalg import IVLPoly, LaurentQ, RationalQ, q, qnumber
from .fhq import FHqElem, K, n_matrix, psi, psi_inverse, structure_constants
from .hecke import (HeckeElem, T, ev_n, gamma, gamma_expand, geck_rouquier_basis,
                    is_central, jm_element)
from .specht import blocks, central_character, character_table, seminormal_rep
from .symfunc import SymFuncElem, e, m
from .symmgroup import Permutation

__version__ = "0.1.0"

__all__ = [
    "Partition", "contents", "e_core", "partitions", "q_contents",
    "SizeGuard", "guards",
    "IVLPoly", "LaurentQ", "RationalQ", "q", "qnumber",
    "FHqElem", "K", "n_matrix", "psi", "psi_inverse", "structure_constants",
    "HeckeElem", "T", "ev_n", "gamma", "gamma_expand", "geck_rouquier_basis",
    "is_central", "jm_element",
    "blocks", "central_character", "character_table", "seminormal_rep",
    "SymFuncElem", "e", "m", "Permutation",
]
