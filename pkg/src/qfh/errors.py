"""Exception types shared across modules, and the size guards."""

from __future__ import annotations

from dataclasses import dataclass


class SizeGuard(ValueError):
    """A request exceeds a configured size bound."""


@dataclass
class Guards:
    # ranks for which central elements are built by the exact linear solve
    max_n: int = 7
    # largest filtration degree |mu|+|nu| for structure constants
    k_max: int = 4
    # largest tableau / class enumeration size
    max_enum: int = 10


guards = Guards()


def check_size(value: int, bound: int, what: str) -> None:
    if value > bound:
        raise SizeGuard(f"{what} = {value} exceeds the configured bound {bound}")
