"""Independent oracles shared by the test modules.

Nothing here calls into the elimination or eigen kernels under test: ranks go
through ``fractions.Fraction`` Gaussian elimination and spectra through
``numpy.linalg.eigvalsh``.
"""

from fractions import Fraction

import numpy as np
import pytest


def fraction_rank(rows) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    rank, ncols = 0, len(m[0])
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def brute_triangular(n: int) -> np.ndarray:
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, i + 1)]
    a = np.zeros((len(cells), len(cells)), dtype=int)
    for p, (i, j) in enumerate(cells):
        for q, (k, l) in enumerate(cells):
            if p != q and (i == k or j == l or i - j == k - l):
                a[p, q] = 1
    return a


def brute_queens(n: int) -> np.ndarray:
    cells = [(r, c) for r in range(1, n + 1) for c in range(1, n + 1)]
    a = np.zeros((n * n, n * n), dtype=int)
    for p, (r, c) in enumerate(cells):
        for q, (s, t) in enumerate(cells):
            if p != q and (r == s or c == t or abs(r - s) == abs(c - t)):
                a[p, q] = 1
    return a


def numpy_spectrum(a) -> np.ndarray:
    return np.sort(np.linalg.eigvalsh(np.asarray(a, dtype=float)))[::-1]


@pytest.fixture
def oracle():
    class O:
        rank = staticmethod(fraction_rank)
        triangular = staticmethod(brute_triangular)
        queens = staticmethod(brute_queens)
        spectrum = staticmethod(numpy_spectrum)

    return O


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
