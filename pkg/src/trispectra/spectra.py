"""Closed-form spectra, exact multiplicities, and multiset algebra on spectra."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable

from .board import DomainError, tri_number
from .graphs import LabeledGraph
from .linalg import nullity
from .surd import SurdValue, as_surd


@dataclass(frozen=True)
class Spectrum:
    """Multiset of exact eigenvalues, stored sorted non-increasingly with merged values."""

    entries: tuple[tuple[SurdValue, int], ...]

    def __init__(self, entries: Iterable[tuple[SurdValue | int, int]] = ()):
        merged: dict[SurdValue, int] = {}
        for value, mult in entries:
            if mult < 0:
                raise DomainError(f"negative multiplicity {mult}")
            if mult == 0:
                continue
            v = as_surd(value)
            merged[v] = merged.get(v, 0) + int(mult)
        ordered = sorted(merged.items(), key=lambda kv: kv[0], reverse=True)
        object.__setattr__(self, "entries", tuple(ordered))

    @classmethod
    def from_values(cls, values: Iterable[SurdValue | int]) -> "Spectrum":
        return cls((v, 1) for v in values)

    @property
    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def multiplicity(self, value: SurdValue | int) -> int:
        v = as_surd(value)
        return next((m for x, m in self.entries if x == v), 0)

    def as_dict(self) -> dict[SurdValue, int]:
        return dict(self.entries)

    def expanded(self) -> list[SurdValue]:
        out: list[SurdValue] = []
        for v, m in self.entries:
            out.extend([v] * m)
        return out

    def kth(self, k: int) -> SurdValue:
        return kth_eigenvalue(self, k)

    def __or__(self, other: "Spectrum") -> "Spectrum":
        return spectrum_union(self, other)

    def __str__(self) -> str:
        return "{" + ", ".join(str(v) if m == 1 else f"{v}^[{m}]" for v, m in self.entries) + "}"

    def to_json(self) -> list[dict]:
        return [{"value": v.to_json(), "mult": m} for v, m in self.entries]

    @classmethod
    def from_json(cls, data: list[dict]) -> "Spectrum":
        return cls((SurdValue.from_json(e["value"]), int(e["mult"])) for e in data)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["value", "mult", "decimal", "approx"])
        for v, m in self.entries:
            w.writerow([str(v), m, f"{float(v):.12f}", "exact" if v.is_integer else "approx"])
        return buf.getvalue()


def spectrum_union(a: Spectrum, b: Spectrum) -> Spectrum:
    """Multiset union with repetitions (spectrum of a disjoint union)."""
    return Spectrum(list(a.entries) + list(b.entries))


def kth_eigenvalue(s: Spectrum, k: int) -> SurdValue:
    """``k``-th largest eigenvalue, counted with multiplicity (1-based)."""
    if not (1 <= k <= s.total):
        raise DomainError(f"index {k} outside [1, {s.total}]")
    seen = 0
    for v, m in s.entries:
        seen += m
        if k <= seen:
            return v
    raise AssertionError("unreachable")


def spectrum_clique(k: int) -> Spectrum:
    if k < 1:
        raise DomainError(f"clique needs k >= 1, got {k}")
    return Spectrum([(k - 1, 1), (-1, k - 1)])


def spectrum_bipartite(a: int, b: int) -> Spectrum:
    """``K_{a,b}``: ``{sqrt(ab), 0^[a+b-2], -sqrt(ab)}``; ``K_{a,0}`` is ``{0^[a]}``."""
    if a < 0 or b < 0 or a + b < 1:
        raise DomainError(f"complete bipartite graph needs a, b >= 0 and a + b >= 1, got ({a}, {b})")
    if a == 0 or b == 0:
        return Spectrum([(0, a + b)])
    root = SurdValue.sqrt(a * b)
    return Spectrum([(root, 1), (0, a + b - 2), (-root, 1)])


def _first_sequence(n: int) -> range:
    """Integers ``-2 .. floor((n-7)/2)``."""
    return range(-2, (n - 7) // 2 + 1)


def _second_sequence(n: int) -> range:
    """Integers ``ceil((n-4)/2) .. n-3``."""
    return range(-((4 - n) // 2), n - 2)


def spectrum_triangular(n: int) -> Spectrum:
    if n < 1:
        raise DomainError(f"triangular graph needs n >= 1, got {n}")
    if n in (1, 2):
        k = tri_number(n)
        return spectrum_clique(k)
    if n == 3:
        return Spectrum([(4, 1), (0, 3), (-2, 2)])
    doubled = (n - 7) // 2 if n % 2 else (n - 4) // 2
    entries = [(2 * n - 2, 1), (-3, tri_number(n - 3))]
    for lam in list(_first_sequence(n)) + list(_second_sequence(n)):
        entries.append((lam, 2 if lam == doubled else 3))
    return Spectrum(entries)


def exact_multiplicity(g: LabeledGraph, lam: SurdValue | int) -> int:
    """Nullity of ``A - lam*I`` by exact elimination (integer ``lam`` only)."""
    value = as_surd(lam)
    if not value.is_integer:
        raise DomainError("exact multiplicity is computed for integer eigenvalues only")
    return nullity(g.int_matrix(shift=int(value)))


def spectrum_g12(n: int) -> Spectrum:
    """Two triangular components, of sides ``n`` and ``n-1``."""
    if n < 4:
        raise DomainError(f"decomposition spectra need n >= 4, got {n}")
    return spectrum_triangular(n) | spectrum_triangular(n - 1)


def spectrum_g13(n: int) -> Spectrum:
    """Cliques along the anti-diagonals: ``K_1, ..., K_n, ..., K_1``."""
    if n < 4:
        raise DomainError(f"decomposition spectra need n >= 4, got {n}")
    s = spectrum_clique(n)
    for k in range(1, n):
        s = s | spectrum_clique(k) | spectrum_clique(k)
    return s


def spectrum_g23x(n: int) -> Spectrum:
    """Blue-red row (or column) edges: ``K_{i,n-i}`` for ``i = 1..n``."""
    if n < 4:
        raise DomainError(f"decomposition spectra need n >= 4, got {n}")
    s = Spectrum()
    for i in range(1, n + 1):
        s = s | spectrum_bipartite(i, n - i)
    return s


def numeric_values(s: Spectrum) -> list[float]:
    return [float(v) for v in s.expanded()]
