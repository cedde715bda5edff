# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: fraction-free integer elimination and Jacobi sweeps.

Signatures mirror :mod:`trispectra._pykernels` exactly; the backend is chosen
in :mod:`trispectra._backend`.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()


def bareiss_rank(rows):
    """Rank of an integer matrix given as a list of row lists (consumed)."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return 0
    cdef Py_ssize_t ncols = len(rows[0])
    cdef Py_ssize_t r = 0, c, i, j, p
    cdef list row_r, row_i
    cdef object piv, f, prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        p = -1
        for i in range(r, nrows):
            if (<list>rows[i])[c] != 0:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
        row_r = <list>rows[r]
        piv = row_r[c]
        for i in range(r + 1, nrows):
            row_i = <list>rows[i]
            f = row_i[c]
            if f == 0:
                for j in range(c + 1, ncols):
                    if row_i[j] != 0:
                        row_i[j] = (piv * row_i[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    row_i[j] = (piv * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        r += 1
    return r


cdef double _offdiag_norm(double[:, ::1] a, Py_ssize_t n):
    cdef double s = 0.0
    cdef Py_ssize_t p, q
    for p in range(n):
        for q in range(n):
            if p != q:
                s += a[p, q] * a[p, q]
    return sqrt(s)


cdef double _offdiag_max(double[:, ::1] a, Py_ssize_t n):
    cdef double m = 0.0
    cdef Py_ssize_t p, q
    for p in range(n):
        for q in range(p + 1, n):
            if fabs(a[p, q]) > m:
                m = fabs(a[p, q])
    return m


def jacobi_eigen(matrix, double tol, int max_sweeps, bint want_vectors):
    """Row-cyclic Jacobi on a copy of ``matrix``.

    Returns ``(diagonal, vectors_or_None, sweeps, offdiag_history)``.
    """
    cdef cnp.ndarray[cnp.float64_t, ndim=2] work = np.array(matrix, dtype=np.float64, order="C", copy=True)
    cdef double[:, ::1] a = work
    cdef Py_ssize_t n = a.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] vwork
    cdef double[:, ::1] v
    if want_vectors:
        vwork = np.eye(n, dtype=np.float64)
    else:
        vwork = np.zeros((1, 1), dtype=np.float64)
    v = vwork
    cdef Py_ssize_t p, q, k
    cdef double apq, theta, t, c, s, akp, akq, app, aqq
    cdef int sweep = 0
    history = []
    while True:
        history.append(_offdiag_norm(a, n))
        if _offdiag_max(a, n) < tol:
            break
        if sweep >= max_sweeps:
            raise RuntimeError("Jacobi iteration did not converge in %d sweeps" % max_sweeps)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if fabs(theta) > 1e150:
                    t = 0.5 / theta
                elif theta >= 0:
                    t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    if k != p and k != q:
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = c * akp - s * akq
                        a[p, k] = a[k, p]
                        a[k, q] = s * akp + c * akq
                        a[q, k] = a[k, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                if want_vectors:
                    for k in range(n):
                        akp = v[k, p]
                        akq = v[k, q]
                        v[k, p] = c * akp - s * akq
                        v[k, q] = s * akp + c * akq
        sweep += 1
    diag = np.array([a[k, k] for k in range(n)], dtype=np.float64)
    return diag, (vwork if want_vectors else None), sweep, history
