"""Coordinates and integer vectors on the triangular board.

Cell ``(i, j)`` is the ``j``-th dot of row ``i`` (both 1-based, ``1 <= j <= i <= n``)
and has linear label ``T(i-1) + j``.  Columns are indexed by ``j`` and diagonals by
the offset ``i - j``.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator


class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


def tri_number(n: int) -> int:
    """The ``n``-th triangular number ``n(n+1)/2``; ``T(0) = 0``."""
    if n < 0:
        raise DomainError(f"triangular number needs n >= 0, got {n}")
    return n * (n + 1) // 2


def tri_poly(m: int) -> int:
    """``m(m+1)/2`` evaluated for any integer ``m``.

    Several closed forms feed a negative argument into ``T``; the polynomial
    extension is what makes those eigenvectors work (``T(-1) = 0``, ``T(-2) = 1``).
    """
    return m * (m + 1) // 2


@dataclass(frozen=True, order=True)
class TriCoord:
    i: int
    j: int
    n: int

    def __post_init__(self) -> None:
        if not (1 <= self.j <= self.i <= self.n):
            raise DomainError(f"({self.i},{self.j}) is not a cell of the side-{self.n} board")

    @property
    def label(self) -> int:
        return coord_label(self.i, self.j, self.n)

    @property
    def diagonal(self) -> int:
        return self.i - self.j


def coord_label(i: int, j: int, n: int) -> int:
    """1-based linear label of cell ``(i, j)``."""
    if not (1 <= j <= i <= n):
        raise DomainError(f"({i},{j}) is not a cell of the side-{n} board")
    return tri_number(i - 1) + j


def label_to_coord(label: int, n: int) -> TriCoord:
    if not (1 <= label <= tri_number(n)):
        raise DomainError(f"label {label} outside [1, {tri_number(n)}]")
    # largest i with T(i-1) < label
    i = (math.isqrt(8 * (label - 1) + 1) - 1) // 2 + 1
    return TriCoord(i, label - tri_number(i - 1), n)


def cells(n: int) -> Iterator[tuple[int, int]]:
    """All cells in label order."""
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            yield i, j


class Line(enum.Enum):
    ROW = "row"
    COL = "col"
    DIAG = "diag"


@dataclass(frozen=True)
class TriVector:
    """Exact integer vector indexed by board cells (label order)."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError("board side must be >= 0")
        if len(self.entries) != tri_number(self.n):
            raise DomainError(f"expected {tri_number(self.n)} entries, got {len(self.entries)}")
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    @classmethod
    def from_function(cls, n: int, f: Callable[[int, int], int]) -> "TriVector":
        return cls(n, tuple(f(i, j) for i, j in cells(n)))

    @classmethod
    def zeros(cls, n: int) -> "TriVector":
        return cls(n, (0,) * tri_number(n))

    @classmethod
    def ones(cls, n: int) -> "TriVector":
        return cls(n, (1,) * tri_number(n))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[coord_label(i, j, self.n) - 1]

    def at_label(self, label: int) -> int:
        if not (1 <= label <= len(self.entries)):
            raise DomainError(f"label {label} outside [1, {len(self.entries)}]")
        return self.entries[label - 1]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def _check(self, other: "TriVector") -> None:
        if other.n != self.n:
            raise DomainError(f"board sides differ: {self.n} vs {other.n}")

    def __add__(self, other: "TriVector") -> "TriVector":
        self._check(other)
        return TriVector(self.n, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "TriVector") -> "TriVector":
        self._check(other)
        return TriVector(self.n, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "TriVector":
        return TriVector(self.n, tuple(-a for a in self.entries))

    def scale(self, k: int) -> "TriVector":
        return TriVector(self.n, tuple(k * a for a in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def to_json(self) -> dict:
        return {"n": self.n, "entries": list(self.entries)}

    @classmethod
    def from_json(cls, data: dict | str) -> "TriVector":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), tuple(data["entries"]))

    def render(self) -> str:
        """Triangle layout, row ``i`` centred under row ``i-1``."""
        if self.n == 0:
            return ""
        width = max(len(str(x)) for x in self.entries) + 1
        width += width % 2  # even, so half-cell indents stay whole
        lines = []
        for i in range(1, self.n + 1):
            row = "".join(str(self[i, j]).rjust(width) for j in range(1, i + 1))
            lines.append(" " * ((self.n - i) * width // 2) + row)
        return "\n".join(lines)


def vector_sum(n: int, terms: Iterable[tuple[int, TriVector]]) -> TriVector:
    """Integer linear combination ``sum(coef * vec)``."""
    acc = [0] * tri_number(n)
    for coef, vec in terms:
        if vec.n != n:
            raise DomainError(f"board sides differ: {n} vs {vec.n}")
        for k, x in enumerate(vec.entries):
            if x:
                acc[k] += coef * x
    return TriVector(n, tuple(acc))


def rotate_pos(v: TriVector) -> TriVector:
    """120-degree rotation: ``v+[(i,j)] = v[(n-i+j, n-i+1)]``."""
    n = v.n
    return TriVector.from_function(n, lambda i, j: v[n - i + j, n - i + 1])


def rotate_neg(v: TriVector) -> TriVector:
    """240-degree rotation, the inverse of :func:`rotate_pos`: ``v-[(i,j)] = v[(n-j+1, i-j+1)]``."""
    n = v.n
    return TriVector.from_function(n, lambda i, j: v[n - j + 1, i - j + 1])


def rcd_vector(kind: Line | str, n: int, index: int) -> TriVector:
    """Indicator of row ``r`` / column ``c`` (1..n) or diagonal offset ``d`` (0..n-1)."""
    kind = Line(kind)
    if kind is Line.DIAG:
        if not (0 <= index <= n - 1):
            raise DomainError(f"diagonal offset {index} outside [0, {n - 1}]")
        return TriVector.from_function(n, lambda i, j: int(i - j == index))
    if not (1 <= index <= n):
        raise DomainError(f"{kind.value} index {index} outside [1, {n}]")
    if kind is Line.ROW:
        return TriVector.from_function(n, lambda i, j: int(i == index))
    return TriVector.from_function(n, lambda i, j: int(j == index))


def line_cells(kind: Line | str, n: int, index: int) -> list[tuple[int, int]]:
    kind = Line(kind)
    if kind is Line.ROW:
        return [(index, j) for j in range(1, index + 1)]
    if kind is Line.COL:
        return [(i, index) for i in range(index, n + 1)]
    return [(j + index, j) for j in range(1, n - index + 1)]


@dataclass(frozen=True)
class SumVectors:
    """Line sums of a board vector.

    ``by_diag[k]`` (0-based storage) holds the sum over diagonal offset ``k``,
    i.e. the 1-based slot ``k+1``.
    """

    by_row: tuple[int, ...]
    by_col: tuple[int, ...]
    by_diag: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "row": list(self.by_row),
            "col": list(self.by_col),
            "diag": {str(k): s for k, s in enumerate(self.by_diag)},
        }


def sum_vectors(v: TriVector) -> SumVectors:
    n = v.n
    rows = [0] * n
    cols = [0] * n
    diags = [0] * n
    for (i, j), x in zip(cells(n), v.entries):
        rows[i - 1] += x
        cols[j - 1] += x
        diags[i - j] += x
    return SumVectors(tuple(rows), tuple(cols), tuple(diags))
