"""Exact integer linear algebra on top of the selected kernel backend."""

from __future__ import annotations

from typing import Sequence

from ._backend import kernels
from .board import DomainError


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals, by fraction-free (Bareiss) elimination."""
    work = [[int(x) for x in row] for row in rows]
    if work and any(len(r) != len(work[0]) for r in work):
        raise DomainError("ragged matrix")
    return kernels.bareiss_rank(work)


def nullity(rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    return len(rows[0]) - integer_rank(rows)


def matvec(neighbors: Sequence[Sequence[int]], x: Sequence[int]) -> list[int]:
    """``A x`` for a 0/1 symmetric matrix given by neighbour lists."""
    return [sum(x[u] for u in nb) for nb in neighbors]
