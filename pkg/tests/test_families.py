import pytest

from trispectra.board import DomainError, TriVector, rotate_neg, rotate_pos, sum_vectors, tri_number
from trispectra.families import (
    Family,
    all_family_vectors,
    basis_least,
    check_independent,
    expected_sums,
    family_parameters,
    first_range,
    independence_set,
    second_range,
    u_from_lines,
    v_defined,
    vector_t,
    vector_u,
    vector_v,
    vector_x,
    vector_y,
    verify_eigenvector,
    x_from_lines,
    y3_from_v,
    y_defined,
    y_parts,
)
from trispectra.graphs import build_triangular

SIDES = range(4, 16)


def test_ranges():
    assert list(first_range(10)) == [-2, -1, 0, 1]
    assert list(second_range(10)) == [3, 4, 5, 6, 7]
    assert list(second_range(9)) == [3, 4, 5, 6]
    assert list(first_range(4)) == [-2]
    assert not v_defined(9, 1) and v_defined(10, 1)
    assert not y_defined(10, 3) and y_defined(9, 3)


def test_stencil():
    t = vector_t(4, 1, 1)
    assert t.data.entries == (0, 1, -1, -1, 0, 1, 0, 1, -1, 0)
    assert t.eigenvalue == -3


def test_stencil_placement_in_side_six():
    t = vector_t(6, 2, 1).data
    # apex shifted one row down
    assert [t[i, j] for i, j in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)]] == [0, 1, -1, -1, 0, 1]
    assert sum(1 for x in t.entries if x) == 6


@pytest.mark.parametrize("n", range(4, 9))
def test_stencils_have_zero_line_sums(n):
    for x, y in family_parameters("t", n):
        s = sum_vectors(vector_t(n, x, y).data)
        assert not any(s.by_row) and not any(s.by_col) and not any(s.by_diag)


@pytest.mark.parametrize("bad", [(4, 2, 1), (4, 1, 2), (3, 1, 1), (6, 0, 1)])
def test_stencil_domain(bad):
    with pytest.raises(DomainError):
        vector_t(*bad)


@pytest.mark.parametrize("n, count", [(4, 1), (6, 6), (7, 10)])
def test_basis_least(n, count, oracle):
    b = basis_least(n)
    assert len(b) == count
    vecs = [t.data.entries for t in b]
    assert check_independent([t.data for t in b]) == count == oracle.rank(vecs)
    g = build_triangular(n)
    assert all(verify_eigenvector(g, t.data, -3) for t in b)


def test_basis_least_domain():
    with pytest.raises(DomainError):
        basis_least(3)


@pytest.mark.parametrize("n", SIDES)
def test_every_family_vector_is_an_eigenvector(n):
    g = build_triangular(n)
    for fam, build in (("u", vector_u), ("v", vector_v), ("x", vector_x), ("y", vector_y)):
        for lam in family_parameters(fam, n):
            fv = build(n, lam)
            assert verify_eigenvector(g, fv.data, lam), (fam, n, lam)
            for r in (rotate_pos(fv.data), rotate_neg(fv.data)):
                assert verify_eigenvector(g, r, lam)


@pytest.mark.parametrize("n", range(4, 13))
def test_sum_vectors_match_closed_forms(n):
    for fam, build in (("u", vector_u), ("v", vector_v), ("x", vector_x), ("y", vector_y)):
        for lam in family_parameters(fam, n):
            assert sum_vectors(build(n, lam).data) == expected_sums(fam, n, lam), (fam, n, lam)


def test_u_sum_examples():
    s = sum_vectors(vector_u(10, -2).data)
    assert s.by_col == (0,) * 10
    assert sum_vectors(vector_u(10, 0).data).by_row[2] == 12


def test_y_row_sum_band():
    n, lam = 9, 3
    s = sum_vectors(vector_y(n, lam).data).by_row
    for i in range(1, n + 1):
        assert s[i - 1] == ((lam + 3) * (n - 2 * i) if n - lam - 2 <= i <= lam + 2 else 0)


def test_x_rows_sum_to_zero():
    for n in range(4, 12):
        for lam in second_range(n):
            assert not any(sum_vectors(vector_x(n, lam).data).by_row)


@pytest.mark.parametrize("n", SIDES)
def test_two_constructions_agree(n):
    for lam in first_range(n):
        assert u_from_lines(n, lam) == vector_u(n, lam).data
    for lam in second_range(n):
        assert x_from_lines(n, lam) == vector_x(n, lam).data
        if y_defined(n, lam):
            assert y3_from_v(n, lam) == y_parts(n, lam)[2]


@pytest.mark.parametrize("n", SIDES)
def test_independence_ranks(n):
    for lam in first_range(n):
        want = 3 if v_defined(n, lam) else 2
        assert check_independent(independence_set("uv", n, lam)) == want
    for lam in second_range(n):
        want = 3 if y_defined(n, lam) else 2
        assert check_independent(independence_set("xy", n, lam)) == want


def test_three_vector_ranks():
    u = vector_u(10, 0).data
    assert check_independent([u, rotate_neg(u), vector_v(10, 0).data]) == 3
    assert check_independent([u, rotate_pos(u), rotate_neg(u)]) == 2
    x = vector_x(9, 4).data
    assert check_independent([x, rotate_pos(x), vector_y(9, 4).data]) == 3


@pytest.mark.parametrize("n", range(4, 11))
def test_known_eigenvectors_span_everything(n, oracle):
    pairs = all_family_vectors(n)
    assert len(pairs) == tri_number(n)
    assert check_independent([v for _, v in pairs]) == tri_number(n)
    if n <= 7:
        assert oracle.rank([v.entries for _, v in pairs]) == tri_number(n)


def test_undefined_cases_name_the_reason():
    with pytest.raises(DomainError, match="undefined"):
        vector_v(9, 1)
    with pytest.raises(DomainError, match="undefined"):
        vector_y(10, 3)


@pytest.mark.parametrize("call", [lambda: vector_u(10, 2), lambda: vector_u(10, -3), lambda: vector_x(10, 2), lambda: vector_x(10, 8), lambda: vector_u(3, -2)])
def test_range_checks(call):
    with pytest.raises(DomainError):
        call()


def test_verify_eigenvector_reports():
    g = build_triangular(4)
    ones = TriVector.ones(4)
    assert verify_eigenvector(g, ones, 6).ok
    bad = verify_eigenvector(g, ones, 5)
    assert not bad.ok and len(bad.mismatches) == 10
    m = bad.mismatches[0]
    assert (m.label, m.cell, m.lhs, m.rhs) == (1, (1, 1), 6, 5)
    assert verify_eigenvector(g, vector_t(4, 1, 1).data, -3)


def test_zero_vector_is_not_an_eigenvector():
    check = verify_eigenvector(build_triangular(4), TriVector.zeros(4), 0)
    assert not check.ok and check.zero_vector


def test_dimension_mismatch():
    with pytest.raises(DomainError):
        verify_eigenvector(build_triangular(4), TriVector.ones(3), 4)
    with pytest.raises(DomainError):
        check_independent([[1, 2], [1, 2, 3]])


def test_check_independent_empty():
    assert check_independent([]) == 0


def test_family_vector_json():
    data = vector_u(7, -1).to_json()
    assert data["family"] == "u" and data["eigenvalue"] == -1 and data["vector"]["n"] == 7
    assert vector_t(5, 2, 2).to_json()["parameter"] == [2, 2]
    assert Family("x") is Family.X
