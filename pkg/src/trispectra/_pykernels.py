"""Pure-Python (numpy-vectorised) versions of the compiled kernels.

Used when the Cython extension is not built, or when ``TRISPECTRA_PURE=1``.
"""

from __future__ import annotations

import math

import numpy as np


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix given as a list of row lists (consumed)."""
    nrows = len(rows)
    if nrows == 0:
        return 0
    ncols = len(rows[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), -1)
        if p < 0:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
        row_r = rows[r]
        piv = row_r[c]
        tail_r = row_r[c + 1:]
        for i in range(r + 1, nrows):
            row_i = rows[i]
            f = row_i[c]
            if f == 0:
                row_i[c + 1:] = [(piv * x) // prev if x else 0 for x in row_i[c + 1:]]
            else:
                row_i[c + 1:] = [(piv * x - f * y) // prev for x, y in zip(row_i[c + 1:], tail_r)]
            row_i[c] = 0
        prev = piv
        r += 1
    return r


def jacobi_eigen(matrix, tol: float, max_sweeps: int, want_vectors: bool):
    """Row-cyclic Jacobi on a copy of ``matrix``.

    Returns ``(diagonal, vectors_or_None, sweeps, offdiag_history)``.
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    n = a.shape[0]
    v = np.eye(n) if want_vectors else None
    iu = np.triu_indices(n, 1)
    history: list[float] = []
    sweep = 0
    while True:
        off = a - np.diag(np.diag(a))
        history.append(float(np.sqrt(np.sum(off * off))))
        if n < 2 or float(np.max(np.abs(a[iu]))) < tol:
            break
        if sweep >= max_sweeps:
            raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                if v is not None:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - s * vq
                    v[:, q] = s * vp + c * vq
        sweep += 1
    return np.diag(a).copy(), v, sweep, history
