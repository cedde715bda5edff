import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from trispectra.board import DomainError
from trispectra.graphs import build_clique, build_complete_bipartite, build_queens, build_triangular
from trispectra.numeric import (
    check_conjecture,
    gap_values,
    integer_snap,
    max_abs_diff,
    predicted_integers,
    symmetric_eigenvalues,
)


def test_clique():
    s = symmetric_eigenvalues(build_clique(4).adjacency)
    assert max_abs_diff(s.values, [3, -1, -1, -1]) < 1e-10


def test_triangular_four():
    s = symmetric_eigenvalues(build_triangular(4).adjacency)
    assert integer_snap(s).as_dict() == {6: 1, 1: 3, 0: 2, -2: 3, -3: 1}


def test_bipartite():
    s = symmetric_eigenvalues(build_complete_bipartite(2, 2).adjacency, vectors=True)
    assert max_abs_diff(s.values, [2, 0, 0, -2]) < 1e-10
    assert s.residual < 1e-10


def test_snap():
    snap = integer_snap([2.0000000001, 1.5, -0.9999999])
    assert snap.as_dict() == {2: 1, -1: 1} and snap.residue == (1.5,)
    with pytest.raises(DomainError):
        integer_snap([1.0], eps=0.5)


def test_asymmetric_and_bad_input():
    with pytest.raises(DomainError):
        symmetric_eigenvalues([[0, 1], [0, 0]])
    with pytest.raises(DomainError):
        symmetric_eigenvalues(np.zeros((2, 3)))
    with pytest.raises(DomainError):
        symmetric_eigenvalues(np.eye(2), tol=0)


def test_empty():
    assert len(symmetric_eigenvalues(np.zeros((0, 0)))) == 0


def test_off_diagonal_history_decreases():
    s = symmetric_eigenvalues(build_queens(6).adjacency)
    h = s.offdiag_history
    assert all(b <= a for a, b in zip(h, h[1:]))
    assert h[-1] <= 1e-12


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 9).flatmap(lambda n: st.lists(st.integers(-5, 5), min_size=n * n, max_size=n * n).map(lambda xs: (n, xs))))
def test_matches_numpy_on_random_symmetric(case):
    n, xs = case
    m = np.array(xs, dtype=float).reshape(n, n)
    m = m + m.T
    s = symmetric_eigenvalues(m, vectors=True)
    assert max_abs_diff(s.values, sorted(np.linalg.eigvalsh(m), reverse=True)) < 1e-9
    assert abs(sum(s.values) - np.trace(m)) < 1e-9
    assert s.residual < 1e-8


@pytest.mark.parametrize("n", range(4, 11))
def test_queens_against_numpy(n, oracle):
    a = build_queens(n).adjacency
    assert max_abs_diff(symmetric_eigenvalues(a).values, oracle.spectrum(a)) < 1e-9


def test_predictions():
    assert predicted_integers(4) == {0: 1, -4: 1}
    assert predicted_integers(5)[1] == 3
    assert predicted_integers(9) == {5: 5, 4: 1, 3: 1, 2: 1, -1: 1, -2: 1, -3: 1, -4: 36}
    assert gap_values(9) == (1, 0) and gap_values(8) == ()
    with pytest.raises(DomainError):
        predicted_integers(3)


def test_queens_four_and_five():
    v4 = check_conjecture(4)
    assert v4.status == "holds" and v4.observed[-4] == 1
    v5 = check_conjecture(5)
    assert v5.status == "holds" and v5.observed == {1: 3, 0: 1, -3: 1, -4: 4}


def test_small_board_is_out_of_scope():
    v = check_conjecture(3)
    assert v.status == "out-of-scope" and v.ok
    assert v.observed[-1] == 2 and v.numeric_agrees


@pytest.mark.parametrize("n", range(4, 11))
def test_conjecture_holds(n):
    v = check_conjecture(n)
    assert v.status == "holds" and v.numeric_agrees and not v.missing and not v.unexpected


def test_verdict_json():
    js = check_conjecture(7).to_json()
    assert js["status"] == "holds" and list(js["gap"]) == ["0", "-1"]
