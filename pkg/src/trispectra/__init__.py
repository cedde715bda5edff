"""Exact spectra of triangular graphs and the n-Queens graph."""

from ._backend import BACKEND
from .board import (
    DomainError,
    Line,
    SumVectors,
    TriCoord,
    TriVector,
    cells,
    coord_label,
    label_to_coord,
    rcd_vector,
    rotate_neg,
    rotate_pos,
    sum_vectors,
    tri_number,
)
from .families import (
    Family,
    FamilyVector,
    basis_least,
    check_independent,
    expected_sums,
    family_vector,
    verify_eigenvector,
    vector_t,
    vector_u,
    vector_v,
    vector_x,
    vector_y,
)
from .graphs import (
    EdgeCliquePartition,
    LabeledGraph,
    build_clique,
    build_complete_bipartite,
    build_queens,
    build_triangular,
    ecp_lines,
)
from .numeric import NumericSpectrum, check_conjecture, integer_snap, symmetric_eigenvalues
from .queens import Decomposition, decompose, verify_decomposition
from .spectra import (
    Spectrum,
    exact_multiplicity,
    kth_eigenvalue,
    spectrum_bipartite,
    spectrum_clique,
    spectrum_g12,
    spectrum_g13,
    spectrum_g23x,
    spectrum_triangular,
    spectrum_union,
)
from .surd import SurdValue
from .weyl import BoundEntry, best_bounds, bound_table, chained_bound, weyl_lower, weyl_upper

__version__ = "0.1.0"
