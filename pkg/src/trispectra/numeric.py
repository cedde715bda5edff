"""Floating-point spectra by cyclic Jacobi, and the integer-eigenvalue monitor for Q(n).

The Jacobi solver is the numeric oracle; exact nullities are always the final
word on integer eigenvalues.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ._backend import kernels
from .board import DomainError
from .graphs import build_queens
from .spectra import exact_multiplicity


@dataclass(frozen=True)
class NumericSpectrum:
    values: tuple[float, ...]
    residual: float | None
    sweeps: int
    offdiag_history: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def kth(self, k: int) -> float:
        return self.values[k - 1]


def symmetric_eigenvalues(
    m, tol: float = 1e-12, max_sweeps: int = 100, vectors: bool = False
) -> NumericSpectrum:
    """Eigenvalues of a real symmetric matrix, non-increasing.

    With ``vectors=True`` the eigenvectors are accumulated and ``residual`` is
    ``max |A v - lambda v|`` over all computed pairs.
    """
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError("matrix must be square")
    if a.size and float(np.max(np.abs(a - a.T))) > 1e-12:
        raise DomainError("matrix is not symmetric")
    diag, vecs, sweeps, history = kernels.jacobi_eigen(a, tol, max_sweeps, vectors)
    diag = np.asarray(diag)
    order = np.argsort(-diag, kind="stable")
    residual = None
    if vectors:
        vecs = np.asarray(vecs)
        residual = float(np.max(np.abs(a @ vecs - vecs * diag))) if a.size else 0.0
    return NumericSpectrum(tuple(float(x) for x in diag[order]), residual, int(sweeps), tuple(history))


@dataclass(frozen=True)
class Snapped:
    integers: tuple[tuple[int, int], ...]
    residue: tuple[float, ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.integers)


def integer_snap(vals: NumericSpectrum | Iterable[float], eps: float = 1e-6) -> Snapped:
    """Group values lying within ``eps`` of an integer; everything else is residue."""
    if not 0 < eps < 0.5:
        raise DomainError("eps must lie in (0, 0.5)")
    counts: Counter[int] = Counter()
    residue = []
    for x in vals:
        k = round(x)
        if abs(x - k) <= eps:
            counts[int(k)] += 1
        else:
            residue.append(float(x))
    return Snapped(tuple(sorted(counts.items(), reverse=True)), tuple(residue))


def predicted_integers(n: int) -> dict[int, int]:
    """Integer eigenvalues of Q(n) with multiplicities, as conjectured for ``n >= 4``."""
    if n < 4:
        raise DomainError(f"the prediction covers n >= 4, got {n}")
    out: Counter[int] = Counter({-4: (n - 3) ** 2})
    if n % 2 == 0:
        out[n - 4] += (n - 2) // 2
        return dict(out)
    out[n - 4] += (n + 1) // 2
    for lam in range(n - 5, (n - 5) // 2 - 1, -1):
        out[lam] += 1
    for lam in range((n - 11) // 2, -4, -1):
        out[lam] += 1
    return dict(out)


def gap_values(n: int) -> tuple[int, ...]:
    """The two odd-``n`` integers the predicted list skips between its runs."""
    if n % 2 == 0:
        return ()
    return ((n - 7) // 2, (n - 9) // 2)


@dataclass
class ConjectureVerdict:
    n: int
    status: str
    predicted: dict[int, int]
    observed: dict[int, int]
    numeric: dict[int, int]
    matches: list[int] = field(default_factory=list)
    missing: list[tuple[int, int, int]] = field(default_factory=list)
    unexpected: list[tuple[int, int]] = field(default_factory=list)
    gap: dict[int, int] = field(default_factory=dict)
    numeric_agrees: bool = True

    @property
    def ok(self) -> bool:
        return self.status != "violated"

    def to_json(self) -> dict:
        def keyed(d: dict[int, int]) -> dict[str, int]:
            return {str(k): d[k] for k in sorted(d, reverse=True)}

        return {
            "n": self.n,
            "status": self.status,
            "predicted": keyed(self.predicted),
            "observed": keyed(self.observed),
            "numeric": keyed(self.numeric),
            "matches": sorted(self.matches, reverse=True),
            "missing": [{"value": v, "predicted": p, "observed": o} for v, p, o in self.missing],
            "unexpected": [{"value": v, "observed": o} for v, o in self.unexpected],
            "gap": keyed(self.gap),
            "numeric_agrees": self.numeric_agrees,
        }


def check_conjecture(n: int, eps: float = 1e-6, tol: float = 1e-12) -> ConjectureVerdict:
    """Compare the integer eigenvalues of Q(n) with the conjectured list.

    Jacobi proposes candidates; every candidate (and every predicted value) is
    then settled by an exact nullity.  For ``n < 4`` nothing is predicted and
    the verdict is ``"out-of-scope"`` with the observed integers filled in.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    q = build_queens(n)
    snapped = integer_snap(symmetric_eigenvalues(q.adjacency, tol), eps).as_dict()
    predicted = predicted_integers(n) if n >= 4 else {}
    gaps = gap_values(n) if n >= 4 else ()
    candidates = sorted(set(snapped) | set(predicted) | set(gaps), reverse=True)
    exact = {lam: exact_multiplicity(q, lam) for lam in candidates}
    observed = {lam: m for lam, m in exact.items() if m}
    v = ConjectureVerdict(n, "holds", predicted, observed, snapped)
    v.numeric_agrees = all(snapped.get(lam, 0) == exact[lam] for lam in candidates)
    v.gap = {lam: exact[lam] for lam in gaps}
    if n < 4:
        v.status = "out-of-scope"
        return v
    for lam in sorted(predicted, reverse=True):
        if observed.get(lam, 0) == predicted[lam]:
            v.matches.append(lam)
        else:
            v.missing.append((lam, predicted[lam], observed.get(lam, 0)))
    v.unexpected = [(lam, m) for lam, m in sorted(observed.items(), reverse=True) if lam not in predicted]
    if v.missing or v.unexpected:
        v.status = "violated"
    return v


def max_abs_diff(a: Sequence[float], b: Sequence[float]) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b)))) if len(a) else 0.0
