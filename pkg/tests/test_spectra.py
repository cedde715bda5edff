import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from trispectra.board import DomainError, tri_number
from trispectra.graphs import LabeledGraph, build_complete_bipartite, build_queens, build_triangular
from trispectra.queens import decompose
from trispectra.spectra import (
    Spectrum,
    exact_multiplicity,
    kth_eigenvalue,
    numeric_values,
    spectrum_bipartite,
    spectrum_clique,
    spectrum_g12,
    spectrum_g13,
    spectrum_g23x,
    spectrum_triangular,
    spectrum_union,
)
from trispectra.surd import SurdValue

R3 = SurdValue.sqrt(3)


def S(*pairs):
    return Spectrum(pairs)


# reference values
def test_triangular_three():
    assert spectrum_triangular(3) == S((4, 1), (0, 3), (-2, 2))


def test_triangular_four():
    assert spectrum_triangular(4) == S((6, 1), (1, 3), (0, 2), (-2, 3), (-3, 1))


def test_union_example():
    u = spectrum_triangular(4) | spectrum_triangular(3)
    assert u == S((6, 1), (4, 1), (1, 3), (0, 5), (-2, 5), (-3, 1))
    assert u == spectrum_g12(4)


def test_g13_four():
    assert spectrum_g13(4) == S((3, 1), (2, 2), (1, 2), (0, 2), (-1, 9))


def test_g23x_four():
    assert spectrum_g23x(4) == S((2, 1), (R3, 2), (0, 10), (-R3, 2), (-2, 1))


def test_bipartite_and_clique():
    assert spectrum_bipartite(1, 3) == S((R3, 1), (0, 2), (-R3, 1))
    assert spectrum_bipartite(2, 2) == S((2, 1), (0, 2), (-2, 1))
    assert spectrum_bipartite(4, 0) == S((0, 4))
    assert spectrum_clique(4) == S((3, 1), (-1, 3))
    assert spectrum_clique(1) == S((0, 1))


def test_kth():
    assert kth_eigenvalue(spectrum_g12(4), 3) == 1
    assert spectrum_g13(4).kth(16) == -1
    assert spectrum_bipartite(2, 2).kth(1) == 2
    with pytest.raises(DomainError):
        spectrum_bipartite(2, 2).kth(5)
    with pytest.raises(DomainError):
        spectrum_bipartite(2, 2).kth(0)


def test_small_triangular_are_cliques():
    assert spectrum_triangular(1) == S((0, 1))
    assert spectrum_triangular(2) == S((2, 1), (-1, 2))


@pytest.mark.parametrize("n", range(1, 13))
def test_triangular_totals(n):
    assert spectrum_triangular(n).total == tri_number(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_trace_identities(n):
    s = spectrum_triangular(n)
    assert sum(int(v) * m for v, m in s.entries) == 0
    assert sum(int(v) ** 2 * m for v, m in s.entries) == n**3 - n


@pytest.mark.parametrize("n", range(1, 9))
def test_triangular_against_numpy(n, oracle):
    assert np.allclose(numeric_values(spectrum_triangular(n)), oracle.spectrum(build_triangular(n).adjacency), atol=1e-9)


@pytest.mark.parametrize("n", range(3, 11))
def test_closed_form_multiplicities_are_exact(n):
    g = build_triangular(n)
    for v, m in spectrum_triangular(n).entries:
        assert exact_multiplicity(g, v) == m


def test_multiplicity_examples():
    assert exact_multiplicity(build_triangular(7), -3) == 10
    assert exact_multiplicity(build_triangular(6), 10) == 1
    assert exact_multiplicity(build_queens(6), -4) == 9
    assert exact_multiplicity(build_triangular(6), 5) == 0


def test_multiplicity_rejects_surds():
    with pytest.raises(DomainError):
        exact_multiplicity(build_complete_bipartite(1, 3), R3)


@pytest.mark.parametrize("n", range(4, 9))
def test_component_spectra_match_parts(n, oracle):
    d = decompose(n)
    g12 = d.parts["G1"].adjacency + d.parts["G2"].adjacency
    assert np.allclose(numeric_values(spectrum_g12(n)), oracle.spectrum(g12), atol=1e-9)
    assert np.allclose(numeric_values(spectrum_g13(n)), oracle.spectrum(d.parts["G13"].adjacency), atol=1e-9)
    for name in ("G3H", "G3V"):
        assert np.allclose(numeric_values(spectrum_g23x(n)), oracle.spectrum(d.parts[name].adjacency), atol=1e-9)


@pytest.mark.parametrize("n", range(4, 14))
def test_component_totals(n):
    for s in (spectrum_g12(n), spectrum_g13(n), spectrum_g23x(n)):
        assert s.total == n * n
    assert spectrum_g13(n).multiplicity(-1) == (n - 1) ** 2


def test_g12_odd_case_by_exact_nullity():
    d = decompose(5)
    both = LabeledGraph(d.parts["G1"].adjacency + d.parts["G2"].adjacency)
    for v, m in spectrum_g12(5).entries:
        assert exact_multiplicity(both, v) == m


@pytest.mark.parametrize("f", [spectrum_g12, spectrum_g13, spectrum_g23x])
def test_component_domain(f):
    with pytest.raises(DomainError):
        f(3)


small_spectra = st.lists(st.tuples(st.integers(-5, 5), st.integers(1, 3)), max_size=5).map(Spectrum)


@given(small_spectra, small_spectra, small_spectra)
def test_union_is_commutative_and_associative(a, b, c):
    assert a | b == b | a
    assert (a | b) | c == a | (b | c)
    assert (a | b).total == a.total + b.total
    assert spectrum_union(a, Spectrum()) == a


@given(small_spectra)
def test_entries_sorted_and_merged(s):
    values = [v for v, _ in s.entries]
    assert values == sorted(values, reverse=True)
    assert len(set(values)) == len(values)


def test_json_and_csv():
    s = spectrum_bipartite(1, 3)
    assert s.to_json() == [
        {"value": {"surd": {"scale": 1, "radicand": 3}}, "mult": 1},
        {"value": {"int": 0}, "mult": 2},
        {"value": {"surd": {"scale": -1, "radicand": 3}}, "mult": 1},
    ]
    assert Spectrum.from_json(s.to_json()) == s
    lines = s.to_csv().splitlines()
    assert lines[0] == "value,mult,decimal,approx"
    assert lines[1] == "sqrt(3),1,1.732050807569,approx"
    assert lines[2] == "0,2,0.000000000000,exact"


def test_negative_multiplicity_rejected():
    with pytest.raises(DomainError):
        Spectrum([(1, -1)])
