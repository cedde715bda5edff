import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trispectra.board import (
    DomainError,
    Line,
    TriCoord,
    TriVector,
    cells,
    coord_label,
    label_to_coord,
    line_cells,
    rcd_vector,
    rotate_neg,
    rotate_pos,
    sum_vectors,
    tri_number,
    tri_poly,
)


@pytest.mark.parametrize("n, expected", [(4, 10), (0, 0), (7, 28), (1, 1)])
def test_tri_number(n, expected):
    assert tri_number(n) == expected


def test_tri_number_rejects_negative():
    with pytest.raises(DomainError):
        tri_number(-1)


def test_tri_poly_extends_to_negative_arguments():
    assert [tri_poly(m) for m in (-3, -2, -1, 0, 1, 2)] == [3, 1, 0, 0, 1, 3]


def test_labels_from_figure():
    assert coord_label(3, 2, 4) == 5
    assert coord_label(1, 1, 4) == 1
    assert coord_label(4, 4, 4) == 10


@pytest.mark.parametrize("bad", [(0, 1), (2, 3), (5, 1)])
def test_invalid_coordinates(bad):
    with pytest.raises(DomainError):
        coord_label(*bad, 4)


@pytest.mark.parametrize("label", [0, 11])
def test_invalid_labels(label):
    with pytest.raises(DomainError):
        label_to_coord(label, 4)


@given(st.integers(1, 30).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, tri_number(n)))))
def test_label_roundtrip(nl):
    n, label = nl
    c = label_to_coord(label, n)
    assert isinstance(c, TriCoord)
    assert coord_label(c.i, c.j, n) == label


@pytest.mark.parametrize("n", range(0, 13))
def test_labels_are_a_bijection(n):
    assert sorted(coord_label(i, j, n) for i, j in cells(n)) == list(range(1, tri_number(n) + 1))


def test_rotations_of_figure_vector():
    v = TriVector(4, tuple(range(1, 11)))
    assert rotate_pos(v).entries == (10, 6, 9, 3, 5, 8, 1, 2, 4, 7)
    assert rotate_neg(v).entries == (7, 8, 4, 9, 5, 2, 10, 6, 3, 1)


def test_constant_vector_is_rotation_invariant():
    v = TriVector.ones(6)
    assert rotate_pos(v) == v and rotate_neg(v) == v


def vectors(max_n=12):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.integers(-50, 50), min_size=tri_number(n), max_size=tri_number(n)).map(
            lambda xs: TriVector(n, tuple(xs))
        )
    )


@given(vectors())
def test_rotation_group_of_order_three(v):
    p = rotate_pos(v)
    assert rotate_neg(p) == v
    assert rotate_pos(p) == rotate_neg(v)
    assert rotate_pos(rotate_pos(p)) == v


@given(vectors())
def test_sum_vector_totals(v):
    s = sum_vectors(v)
    total = sum(v.entries)
    assert sum(s.by_row) == sum(s.by_col) == sum(s.by_diag) == total


@given(vectors(6))
def test_rotation_permutes_line_sums(v):
    # rows of v+ are columns of v read backwards, columns are diagonals, diagonals are rows
    n = v.n
    s, sp = sum_vectors(v), sum_vectors(rotate_pos(v))
    assert sp.by_row == tuple(s.by_col[n - i] for i in range(1, n + 1))
    assert sp.by_col == tuple(s.by_diag[j - 1] for j in range(1, n + 1))
    assert sp.by_diag == tuple(s.by_row[n - 1 - k] for k in range(n))


def test_rcd_vectors():
    r = rcd_vector(Line.ROW, 6, 4)
    assert sum(r.entries) == 4 and all(r[4, j] == 1 for j in range(1, 5))
    d = rcd_vector(Line.DIAG, 6, 0)
    assert sum(d.entries) == 6 and all(d[i, i] == 1 for i in range(1, 7))
    assert rcd_vector(Line.COL, 1, 1).entries == (1,)
    assert sum_vectors(r).by_row == (0, 0, 0, 4, 0, 0)


@pytest.mark.parametrize("kind, index", [(Line.ROW, 0), (Line.COL, 7), (Line.DIAG, 6), (Line.DIAG, -1)])
def test_rcd_out_of_range(kind, index):
    with pytest.raises(DomainError):
        rcd_vector(kind, 6, index)


@pytest.mark.parametrize("n", range(1, 9))
def test_line_lengths(n):
    for r in range(1, n + 1):
        assert sum(rcd_vector("row", n, r).entries) == r
        assert sum(rcd_vector("col", n, r).entries) == n - r + 1
    for d in range(n):
        assert sum(rcd_vector("diag", n, d).entries) == n - d
        assert len(line_cells("diag", n, d)) == n - d


def test_row_sums_of_label_vector():
    assert sum_vectors(TriVector(4, tuple(range(1, 11)))).by_row == (1, 5, 15, 34)


def test_vector_json_roundtrip():
    v = TriVector(3, (1, -2, 3, 0, 5, -6))
    data = v.to_json()
    assert data == {"n": 3, "entries": [1, -2, 3, 0, 5, -6]}
    assert TriVector.from_json(json.dumps(data)) == v


def test_vector_length_checked():
    with pytest.raises(DomainError):
        TriVector(3, (1, 2))


def test_empty_board():
    assert TriVector.zeros(0).entries == ()
    assert list(cells(0)) == []


def test_render_shape():
    lines = TriVector(3, (1, 2, 3, 4, 5, 6)).render().splitlines()
    assert len(lines) == 3
    assert lines[-1].split() == ["4", "5", "6"]
