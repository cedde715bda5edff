"""Weyl-inequality bounds on the eigenvalues of the n-Queens graph.

The queens adjacency splits as ``A(G12) + A(G13) + A(G3H) + A(G3V)`` (see
:mod:`trispectra.queens`).  Chaining Weyl's inequality three times bounds
``lambda_k(Q(n))`` by one eigenvalue from each part:

    upper:  lambda_{j2}(G3H+G3V) <= h[i3] + v[j3]            j2 = i3 + j3 - 1
            lambda_{j1}(G3)      <= g13[i2] + (bound at j2)  j1 = i2 + j2 - 1
            lambda_k(Q)          <= g12[i1] + (bound at j1)  k  = i1 + j1 - 1

and symmetrically from below with ``j = r + s - N`` (``N = n*n``).  Because
each level only needs the best bound at its intermediate index, the tightest
chain for every ``k`` comes out of three min/max-plus convolutions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .board import DomainError
from .spectra import Spectrum, spectrum_g12, spectrum_g13, spectrum_g23x
from .surd import SurdValue


class Direction(enum.Enum):
    UPPER = "upper"
    LOWER = "lower"


def weyl_upper(sa: Spectrum, sb: Spectrum, i: int, j: int) -> SurdValue:
    """``lambda_i(A) + lambda_j(B)``, an upper bound for ``lambda_{i+j-1}(A+B)``."""
    size = _common_size(sa, sb)
    if not (1 <= i <= size and 1 <= j <= size and i + j <= size + 1):
        raise DomainError(f"upper Weyl needs 1 <= i, j and i + j <= {size + 1}, got ({i}, {j})")
    return sa.kth(i) + sb.kth(j)


def weyl_lower(sa: Spectrum, sb: Spectrum, r: int, s: int) -> SurdValue:
    """``lambda_r(A) + lambda_s(B)``, a lower bound for ``lambda_{r+s-N}(A+B)``."""
    size = _common_size(sa, sb)
    if not (1 <= r <= size and 1 <= s <= size and r + s >= size + 1):
        raise DomainError(f"lower Weyl needs r, s <= {size} and r + s >= {size + 1}, got ({r}, {s})")
    return sa.kth(r) + sb.kth(s)


def _common_size(sa: Spectrum, sb: Spectrum) -> int:
    if sa.total != sb.total:
        raise DomainError(f"spectra sizes differ: {sa.total} vs {sb.total}")
    return sa.total


@dataclass(frozen=True)
class PartSpectra:
    """Expanded (non-increasing) spectra of the four queens parts."""

    n: int
    g12: tuple[SurdValue, ...]
    g13: tuple[SurdValue, ...]
    h: tuple[SurdValue, ...]
    v: tuple[SurdValue, ...]

    @property
    def size(self) -> int:
        return self.n * self.n


@lru_cache(maxsize=None)
def part_spectra(n: int) -> PartSpectra:
    if n < 4:
        raise DomainError(f"queens bounds need n >= 4, got {n}")
    x = tuple(spectrum_g23x(n).expanded())
    return PartSpectra(n, tuple(spectrum_g12(n).expanded()), tuple(spectrum_g13(n).expanded()), x, x)


@dataclass(frozen=True)
class ChainBound:
    direction: Direction
    k: int
    value: SurdValue
    chain: tuple[int, int, int, int, int, int]


def chained_bound(n: int, chain: Sequence[int], direction: Direction | str) -> ChainBound:
    """Evaluate one chain.

    ``chain`` is ``(i1, i2, i3, j3)`` for an upper bound or ``(r1, r2, r3, s3)`` for a
    lower bound; the intermediate indices follow from the nesting.
    """
    direction = Direction(direction)
    if len(chain) != 4:
        raise DomainError("a chain is four indices: (i1, i2, i3, j3) or (r1, r2, r3, s3)")
    p = part_spectra(n)
    N = p.size
    a1, a2, a3, b3 = (int(c) for c in chain)
    for name, idx in zip(("first", "second", "third", "fourth"), (a1, a2, a3, b3)):
        if not 1 <= idx <= N:
            raise DomainError(f"{name} index {idx} outside [1, {N}]")

    def step(label: str, a: int, b: int) -> int:
        if direction is Direction.UPPER:
            if a + b > N + 1:
                raise DomainError(f"step {label}: {a} + {b} exceeds {N + 1}")
            return a + b - 1
        if a + b < N + 1:
            raise DomainError(f"step {label}: {a} + {b} is below {N + 1}")
        return a + b - N

    b2 = step("G3H+G3V", a3, b3)
    b1 = step("G13+G23", a2, b2)
    k = step("G12+G3", a1, b1)
    value = p.g12[a1 - 1] + p.g13[a2 - 1] + p.h[a3 - 1] + p.v[b3 - 1]
    return ChainBound(direction, k, value, (a1, b1, a2, b2, a3, b3))


def _convolve(a: Sequence[SurdValue], b: Sequence[SurdValue], upper: bool):
    """Best ``a[i] + b[j]`` for every target index, with the first optimal ``(i, j)``."""
    N = len(a)
    best: list[SurdValue | None] = [None] * N
    arg: list[tuple[int, int] | None] = [None] * N
    for i in range(1, N + 1):
        ai = a[i - 1]
        if upper:
            js = range(1, N + 2 - i)
        else:
            js = range(N + 1 - i, N + 1)
        for j in js:
            m = i + j - 1 if upper else i + j - N
            cand = ai + b[j - 1]
            cur = best[m - 1]
            if cur is None or (cand < cur if upper else cand > cur):
                best[m - 1] = cand
                arg[m - 1] = (i, j)
    return best, arg


@dataclass(frozen=True)
class BoundTables:
    n: int
    upper: tuple[SurdValue, ...]
    lower: tuple[SurdValue, ...]
    upper_chain: tuple[tuple[int, ...], ...]
    lower_chain: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def bound_tables(n: int) -> BoundTables:
    p = part_spectra(n)
    chains = {}
    values = {}
    for upper in (True, False):
        t2, w2 = _convolve(p.h, p.v, upper)
        t3, w3 = _convolve(p.g13, t2, upper)
        tq, wq = _convolve(p.g12, t3, upper)
        out = []
        for k in range(1, p.size + 1):
            i1, j1 = wq[k - 1]
            i2, j2 = w3[j1 - 1]
            i3, j3 = w2[j2 - 1]
            out.append((i1, j1, i2, j2, i3, j3))
        chains[upper] = tuple(out)
        values[upper] = tuple(tq)
    return BoundTables(n, values[True], values[False], chains[True], chains[False])


@dataclass(frozen=True)
class BoundEntry:
    """Tightest chained Weyl interval for ``lambda_k(Q(n))``.

    Witness chains are ``(i1, j1, i2, j2, i3, j3)`` and ``(r1, s1, r2, s2, r3, s3)``.
    """

    n: int
    k: int
    lower: SurdValue
    upper: SurdValue
    lower_witness: tuple[int, ...]
    upper_witness: tuple[int, ...]

    def contains(self, x: float, slack: float = 1e-9) -> bool:
        return float(self.lower) - slack <= x <= float(self.upper) + slack

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "lower": self.lower.to_json(),
            "upper": self.upper.to_json(),
            "lower_decimal": round(float(self.lower), 12),
            "upper_decimal": round(float(self.upper), 12),
            "lower_witness": dict(zip(("r1", "s1", "r2", "s2", "r3", "s3"), self.lower_witness)),
            "upper_witness": dict(zip(("i1", "j1", "i2", "j2", "i3", "j3"), self.upper_witness)),
        }


def best_bounds(n: int, k: int) -> BoundEntry:
    t = bound_tables(n)
    if not 1 <= k <= n * n:
        raise DomainError(f"k={k} outside [1, {n * n}]")
    return BoundEntry(n, k, t.lower[k - 1], t.upper[k - 1], t.lower_chain[k - 1], t.upper_chain[k - 1])


def bound_table(n: int) -> list[BoundEntry]:
    return [best_bounds(n, k) for k in range(1, n * n + 1)]


def replay(entry: BoundEntry) -> tuple[SurdValue, SurdValue]:
    """Re-evaluate both witness chains from scratch."""
    i1, _, i2, _, i3, j3 = entry.upper_witness
    r1, _, r2, _, r3, s3 = entry.lower_witness
    up = chained_bound(entry.n, (i1, i2, i3, j3), Direction.UPPER)
    lo = chained_bound(entry.n, (r1, r2, r3, s3), Direction.LOWER)
    if up.k != entry.k or lo.k != entry.k:
        raise DomainError("witness chain targets a different index")
    return lo.value, up.value
