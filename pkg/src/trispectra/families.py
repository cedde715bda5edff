"""Closed-form eigenvectors of the triangular graph.

Five families live here:

* ``t`` -- a 10-cell stencil slid over the board; spans the ``-3`` eigenspace.
* ``u``, ``v`` -- eigenvalues ``-2 .. floor((n-7)/2)``.
* ``x``, ``y`` -- eigenvalues ``ceil((n-4)/2) .. n-3``.

``u`` and ``x`` each have two independent constructions (cell-by-cell case
formulas and sums of row/column/diagonal indicators) that must agree entrywise;
``y``'s hexagonal layer has a second construction by trimming the ``v`` layer of
the next board size.  Where the literal case formulas for ``x`` and ``y`` fail the
eigen-equation, the readings used below are the ones singled out by
:mod:`trispectra.reconcile`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .board import (
    DomainError,
    Line,
    SumVectors,
    TriVector,
    rcd_vector,
    rotate_neg,
    rotate_pos,
    sum_vectors,
    tri_poly,
    vector_sum,
)
from .graphs import LabeledGraph, build_triangular
from .linalg import integer_rank, matvec


class Family(enum.Enum):
    T = "t"
    U = "u"
    V = "v"
    X = "x"
    Y = "y"


@dataclass(frozen=True)
class FamilyVector:
    family: Family
    n: int
    parameter: int | tuple[int, int]
    data: TriVector

    @property
    def eigenvalue(self) -> int:
        return -3 if self.family is Family.T else int(self.parameter)

    def to_json(self) -> dict:
        param = list(self.parameter) if isinstance(self.parameter, tuple) else self.parameter
        return {
            "family": self.family.value,
            "n": self.n,
            "parameter": param,
            "eigenvalue": self.eigenvalue,
            "vector": self.data.to_json(),
        }


# --------------------------------------------------------------------- ranges

def first_range(n: int) -> range:
    """Eigenvalues carried by ``u`` and ``v``."""
    return range(-2, (n - 7) // 2 + 1)


def second_range(n: int) -> range:
    """Eigenvalues carried by ``x`` and ``y``."""
    return range(-((4 - n) // 2), n - 2)


def v_defined(n: int, lam: int) -> bool:
    return not (n % 2 == 1 and 2 * lam == n - 7)


def y_defined(n: int, lam: int) -> bool:
    return not (n % 2 == 0 and 2 * lam == n - 4)


def _need_board(n: int) -> None:
    if n < 4:
        raise DomainError(f"eigenvector families need n >= 4, got {n}")


def _check_first(n: int, lam: int) -> None:
    _need_board(n)
    r = first_range(n)
    if lam not in r:
        raise DomainError(f"lambda={lam} outside [{r.start}, {r.stop - 1}] for n={n}")


def _check_second(n: int, lam: int) -> None:
    _need_board(n)
    r = second_range(n)
    if lam not in r:
        raise DomainError(f"lambda={lam} outside [{r.start}, {r.stop - 1}] for n={n}")


# ------------------------------------------------------------------- t-vectors

T_STENCIL = TriVector(4, (0, 1, -1, -1, 0, 1, 0, 1, -1, 0))


def vector_t(n: int, x: int, y: int) -> FamilyVector:
    """Stencil with its apex at cell ``(x, y)``."""
    _need_board(n)
    if not (1 <= x <= n - 3 and 1 <= y <= x):
        raise DomainError(f"placement ({x},{y}) needs 1 <= x <= {n - 3} and 1 <= y <= x")

    def f(i: int, j: int) -> int:
        a, b = i - x + 1, j - y + 1
        if 1 <= b <= a <= 4:
            return T_STENCIL[a, b]
        return 0

    return FamilyVector(Family.T, n, (x, y), TriVector.from_function(n, f))


def basis_least(n: int) -> list[FamilyVector]:
    if n < 4:
        raise DomainError(f"-3 is an eigenvalue only for n >= 4, got n={n}")
    return [vector_t(n, x, y) for x in range(1, n - 2) for y in range(1, x + 1)]


# ------------------------------------------------------------------- u-vectors

def u_parts(n: int, lam: int) -> tuple[TriVector, TriVector]:
    _check_first(n, lam)
    w = n - 6 - 2 * lam

    def u1(i: int, j: int) -> int:
        if i == lam + 3:
            return w
        if i >= lam + 3 and i - j <= lam + 2:
            return -1
        return 0

    def u2(i: int, j: int) -> int:
        if i - j == n - lam - 3:
            return -w
        if i >= n - lam - 2 and i - j <= n - lam - 4:
            return 1
        return 0

    return TriVector.from_function(n, u1), TriVector.from_function(n, u2)


def u_from_lines(n: int, lam: int) -> TriVector:
    """``u`` assembled from row and diagonal indicators."""
    _check_first(n, lam)
    w = n - 6 - 2 * lam
    terms = [(-1, rcd_vector(Line.DIAG, n, d)) for d in range(0, lam + 3)]
    terms += [(1, rcd_vector(Line.ROW, n, r)) for r in range(1, lam + 4)]
    terms.append((w, rcd_vector(Line.ROW, n, lam + 3)))
    terms += [(1, rcd_vector(Line.ROW, n, r)) for r in range(n - lam - 2, n + 1)]
    terms += [(-1, rcd_vector(Line.DIAG, n, d)) for d in range(n - lam - 3, n)]
    terms.append((-w, rcd_vector(Line.DIAG, n, n - lam - 3)))
    return vector_sum(n, terms)


def vector_u(n: int, lam: int) -> FamilyVector:
    u1, u2 = u_parts(n, lam)
    return FamilyVector(Family.U, n, lam, u1 + u2)


# ------------------------------------------------------------------- v-vectors

def v_layer_count(n: int, lam: int) -> int:
    return max(0, min(lam + 3, n - 2 * lam - 7))


def v_layer(n: int, lam: int, k: int) -> TriVector:
    """Layer ``k`` of the hexagon: ``-2`` on its cells."""

    def f(i: int, j: int) -> int:
        inside = (
            lam + 4 + k <= i <= n - k
            and k + 1 <= j <= n - (lam + 3 + k)
            and k <= i - j <= n - (lam + 4 + k)
        )
        return -2 if inside else 0

    return TriVector.from_function(n, f)


def _v3(n: int, lam: int) -> TriVector:
    return vector_sum(n, ((1, v_layer(n, lam, k)) for k in range(1, v_layer_count(n, lam) + 1)))


def v_parts(n: int, lam: int) -> tuple[TriVector, TriVector, TriVector]:
    _check_first(n, lam)
    if not v_defined(n, lam):
        raise DomainError(f"v is undefined for odd n={n} at lambda=(n-7)/2={lam}: the hexagon has no layers")
    m = n - 7 - 2 * lam
    top = -tri_poly(m)

    def v1(i: int, j: int) -> int:
        if i == lam + 3:
            return top
        if i >= lam + 4 and j <= lam + 3 and i - j <= n - (lam + 4):
            return m
        return 0

    def v2(i: int, j: int) -> int:
        if i == lam + 3:
            return top
        if i >= lam + 4 and j <= n - (lam + 3) and i - j <= lam + 2:
            return m
        return 0

    return TriVector.from_function(n, v1), TriVector.from_function(n, v2), _v3(n, lam)


def vector_v(n: int, lam: int) -> FamilyVector:
    v1, v2, v3 = v_parts(n, lam)
    return FamilyVector(Family.V, n, lam, v1 + v2 + v3)


# ------------------------------------------------------------------- x-vectors

def x_parts(n: int, lam: int) -> tuple[TriVector, TriVector]:
    _check_second(n, lam)
    w = 2 * lam - n + 6

    def x1(i: int, j: int) -> int:
        if i - j == n - lam - 3:
            return w
        if i - j < n - lam - 3 and j <= lam + 3:
            return 1
        return 0

    def x2(i: int, j: int) -> int:
        if j == n - lam - 2:
            return -w
        if j < n - lam - 2 and i - j <= lam + 2:
            return -1
        return 0

    return TriVector.from_function(n, x1), TriVector.from_function(n, x2)


def x_from_lines(n: int, lam: int) -> TriVector:
    """``x`` assembled from column and diagonal indicators."""
    _check_second(n, lam)
    w = 2 * lam - n + 6
    terms = [(1, rcd_vector(Line.DIAG, n, d)) for d in range(0, n - lam - 3)]
    terms += [(-1, rcd_vector(Line.COL, n, c)) for c in range(lam + 4, n + 1)]
    terms.append((w, rcd_vector(Line.DIAG, n, n - lam - 3)))
    terms += [(-1, rcd_vector(Line.COL, n, c)) for c in range(1, n - lam - 2)]
    terms += [(1, rcd_vector(Line.DIAG, n, d)) for d in range(lam + 3, n)]
    terms.append((-w, rcd_vector(Line.COL, n, n - lam - 2)))
    return vector_sum(n, terms)


def vector_x(n: int, lam: int) -> FamilyVector:
    x1, x2 = x_parts(n, lam)
    return FamilyVector(Family.X, n, lam, x1 + x2)


# ------------------------------------------------------------------- y-vectors

def y_layer_count(n: int, lam: int) -> int:
    return max(0, min(n - lam - 2, 2 * lam - n + 4))


def y_layer(n: int, lam: int, k: int) -> TriVector:
    def f(i: int, j: int) -> int:
        inside = (
            n - lam - 2 + k <= i <= n - k
            and k <= j <= lam + 2 - k
            and k <= i - j <= lam + 2 - k
        )
        return -2 if inside else 0

    return TriVector.from_function(n, f)


def y3_from_v(n: int, lam: int) -> TriVector:
    """Hexagon of ``v`` on board ``n+1`` at ``n-lam-5`` with first row and column removed."""
    mu = n - lam - 5
    big = vector_sum(n + 1, ((1, v_layer(n + 1, mu, k)) for k in range(1, v_layer_count(n + 1, mu) + 1)))
    return TriVector.from_function(n, lambda i, j: big[i + 1, j + 1])


def y_parts(n: int, lam: int) -> tuple[TriVector, TriVector, TriVector]:
    _check_second(n, lam)
    if not y_defined(n, lam):
        raise DomainError(f"y is undefined for even n={n} at lambda=(n-4)/2={lam}: the hexagon has no layers")
    a = n - 2 * lam - 6
    e = -n + 2 * lam + 4

    def y1(i: int, j: int) -> int:
        if j <= n - lam - 3 or j >= lam + 3:
            return 0
        if (-n + 2 * lam + 5 <= j <= lam + 2) or (
            n - lam - 2 <= j <= -n + 2 * lam + 4 and (i >= lam + 3 or i - j <= n - lam - 3)
        ):
            return a
        if i <= lam + 2 and j >= n - lam - 2 and i - j >= n - lam - 2:
            return 2 * (n - 2 * lam - 5)
        return 0

    def y2(i: int, j: int) -> int:
        s = 0
        if j == n - lam - 2:
            s += 2 * tri_poly(a)
        if i >= n - lam - 2 and j <= n - lam - 3 and i - j <= n - lam - 3:
            s += e
        if i >= lam + 3 and j <= n - lam - 3 and i - j <= lam + 2:
            s += e
        if i >= lam + 3 and n - lam - 2 <= j <= lam + 2 and i - j <= n - lam - 3:
            s += e
        return s

    y3 = vector_sum(n, ((1, y_layer(n, lam, k)) for k in range(1, y_layer_count(n, lam) + 1)))
    return TriVector.from_function(n, y1), TriVector.from_function(n, y2), y3


def vector_y(n: int, lam: int) -> FamilyVector:
    y1, y2, y3 = y_parts(n, lam)
    return FamilyVector(Family.Y, n, lam, y1 + y2 + y3)


BUILDERS = {Family.U: vector_u, Family.V: vector_v, Family.X: vector_x, Family.Y: vector_y}


def family_vector(family: Family | str, n: int, lam: int | None = None, at: tuple[int, int] | None = None) -> FamilyVector:
    family = Family(family)
    if family is Family.T:
        if at is None:
            raise DomainError("t-vectors need a placement (x, y)")
        return vector_t(n, *at)
    if lam is None:
        raise DomainError(f"{family.value}-vectors need an eigenvalue")
    return BUILDERS[family](n, lam)


def family_parameters(family: Family | str, n: int) -> list:
    """Every legal parameter for ``family`` on board ``n``."""
    family = Family(family)
    if family is Family.T:
        return [(x, y) for x in range(1, n - 2) for y in range(1, x + 1)]
    if family is Family.U:
        return list(first_range(n))
    if family is Family.V:
        return [lam for lam in first_range(n) if v_defined(n, lam)]
    if family is Family.X:
        return list(second_range(n))
    return [lam for lam in second_range(n) if y_defined(n, lam)]


# ------------------------------------------------------- closed-form line sums

def expected_sums(family: Family | str, n: int, lam: int) -> SumVectors:
    """Closed-form row/column/diagonal sums of the ``u``, ``v``, ``x`` or ``y`` vector."""
    family = Family(family)
    rows, cols, diags = range(1, n + 1), range(1, n + 1), range(0, n)
    L = lam
    if family is Family.U:
        _check_first(n, L)
        w = n - 6 - 2 * L
        r = [0 if (i <= L + 2 or i >= n - L - 2) else (L + 3) * w if i == L + 3 else -(L + 3) for i in rows]
        c = [0 for _ in cols]
        d = [0 if (k <= L + 2 or k >= n - L - 2) else -(L + 3) * w if k == n - L - 3 else L + 3 for k in diags]
    elif family is Family.V:
        _check_first(n, L)
        m = n - 7 - 2 * L
        r = [
            0 if (i <= L + 2 or i >= n - L - 2) else -2 * tri_poly(m) * (L + 3) if i == L + 3 else 2 * (L + 3) * (n - 3 - L - i)
            for i in rows
        ]
        c = [0 if (j <= L + 3 or j >= n - L - 2) else (L + 3) * (2 * j - n - 1) for j in cols]
        d = [0 if (k <= L + 2 or k >= n - L - 3) else (L + 3) * (2 * k + 1 - n) for k in diags]
    elif family is Family.X:
        _check_second(n, L)
        g = 2 * L - n + 5
        r = [0 for _ in rows]
        c = [0 if (j <= n - L - 3 or j >= L + 4) else -g * (L + 3) if j == n - L - 2 else L + 3 for j in cols]
        d = [0 if (k <= n - L - 4 or k >= L + 3) else g * (L + 3) if k == n - L - 3 else -(L + 3) for k in diags]
    elif family is Family.Y:
        _check_second(n, L)
        r = [0 if (i <= n - L - 3 or i >= L + 3) else (L + 3) * (n - 2 * i) for i in rows]
        c = [
            0 if (j <= n - L - 3 or j >= L + 3)
            else (L + 3) * (n - 2 * L - 5) * (n - 2 * L - 4) if j == n - L - 2
            else -2 * (L + 3) * (L + 3 - j)
            for j in cols
        ]
        d = [0 if (k <= n - L - 3 or k >= L + 3) else (L + 3) * (2 * k - n) for k in diags]
    else:
        raise DomainError("closed-form sums exist for u, v, x, y only")
    return SumVectors(tuple(r), tuple(c), tuple(d))


# -------------------------------------------------------------- verification

@dataclass(frozen=True)
class Mismatch:
    label: int
    cell: object
    lhs: int
    rhs: int


@dataclass(frozen=True)
class EigenCheck:
    """Outcome of testing ``A v == lam v``; ``mismatches`` lists failing coordinates."""

    ok: bool
    eigenvalue: int
    mismatches: tuple[Mismatch, ...]
    zero_vector: bool = False

    def __bool__(self) -> bool:
        return self.ok


def verify_eigenvector(g: LabeledGraph, v: TriVector | Sequence[int], lam: int) -> EigenCheck:
    """Exact check of the eigen-equation; the zero vector never passes."""
    entries = list(v.entries if isinstance(v, TriVector) else v)
    if len(entries) != g.vertex_count:
        raise DomainError(f"vector has {len(entries)} entries, graph has {g.vertex_count} vertices")
    av = matvec(g.neighbor_lists(), entries)
    bad = tuple(
        Mismatch(k + 1, g.tag(k), lhs, lam * x)
        for k, (lhs, x) in enumerate(zip(av, entries))
        if lhs != lam * x
    )
    zero = not any(entries)
    return EigenCheck(not bad and not zero, lam, bad, zero)


def check_independent(vs: Sequence[TriVector | Sequence[int]]) -> int:
    """Exact rank of a list of equal-length integer vectors."""
    rows = [list(v.entries if isinstance(v, TriVector) else v) for v in vs]
    if not rows:
        return 0
    if any(len(r) != len(rows[0]) for r in rows):
        raise DomainError("vectors must have equal length")
    return integer_rank(rows)


def independence_set(family: str, n: int, lam: int) -> list[TriVector]:
    """``{u, u-, v}`` or ``{x, x+, y}``; the third vector is dropped where it is undefined."""
    if family == "uv":
        u = vector_u(n, lam).data
        out = [u, rotate_neg(u)]
        if v_defined(n, lam):
            out.append(vector_v(n, lam).data)
        return out
    if family == "xy":
        x = vector_x(n, lam).data
        out = [x, rotate_pos(x)]
        if y_defined(n, lam):
            out.append(vector_y(n, lam).data)
        return out
    raise DomainError(f"unknown independence set {family!r}")


def all_family_vectors(n: int) -> list[tuple[int, TriVector]]:
    """Every closed-form eigenvector (with rotations) of the side-``n`` graph, tagged by eigenvalue."""
    _need_board(n)
    out: list[tuple[int, TriVector]] = [(2 * n - 2, TriVector.ones(n))]
    out += [(-3, t.data) for t in basis_least(n)]
    for lam in first_range(n):
        out += [(lam, w) for w in independence_set("uv", n, lam)]
    for lam in second_range(n):
        out += [(lam, w) for w in independence_set("xy", n, lam)]
    return out


def sums_match(fv: FamilyVector) -> bool:
    return sum_vectors(fv.data) == expected_sums(fv.family, fv.n, int(fv.parameter))


def triangular(n: int) -> LabeledGraph:
    return build_triangular(n)
