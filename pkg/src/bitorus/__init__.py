"""Directed grid graphs on a two-holed torus: diagonals, links, Hamiltonicity."""

from .census import DistributionReport, PairRecord, diag_distribution, exceptional_pairs
from .counting import (
    ReductionState,
    canonicalize,
    derive_quad_perms,
    diag_count_reduction,
    diag_count_string,
    diag_count_tree,
    floor_swap_identity_check,
    reduce_pair,
    string_cycles,
    string_intervals,
    string_powers,
    tree_string,
)
from .diagonals import (
    BoundaryProfile,
    Diagonal,
    DiagonalDecomposition,
    decompose,
    diag_count_naive,
    profile,
)
from .errors import CapExceededError, InconsistencyError
from .hamiltonicity import (
    HamWitness,
    OneDiagonalReport,
    ham_torus1,
    is_hamiltonian_brute,
    is_hamiltonian_fast,
    n2_orientation,
    one_diagonal_checks,
    periodicity_check,
    segment_successor,
    square_construction,
    trace_components,
    validate_witness,
)
from .links import Link, is_knot, link_permutation, link_reduce, loop_count, orientation_link
from .surface import BoundaryClass, Cell, GridParams, classify, diag_successor, step

__all__ = [
    "BoundaryClass",
    "BoundaryProfile",
    "CapExceededError",
    "Cell",
    "Diagonal",
    "DiagonalDecomposition",
    "DistributionReport",
    "GridParams",
    "HamWitness",
    "InconsistencyError",
    "Link",
    "OneDiagonalReport",
    "PairRecord",
    "ReductionState",
    "canonicalize",
    "classify",
    "decompose",
    "derive_quad_perms",
    "diag_count_naive",
    "diag_count_reduction",
    "diag_count_string",
    "diag_count_tree",
    "diag_distribution",
    "diag_successor",
    "exceptional_pairs",
    "floor_swap_identity_check",
    "ham_torus1",
    "is_hamiltonian_brute",
    "is_hamiltonian_fast",
    "is_knot",
    "link_permutation",
    "link_reduce",
    "loop_count",
    "n2_orientation",
    "one_diagonal_checks",
    "orientation_link",
    "periodicity_check",
    "profile",
    "reduce_pair",
    "segment_successor",
    "square_construction",
    "step",
    "string_cycles",
    "string_intervals",
    "string_powers",
    "trace_components",
    "tree_string",
    "validate_witness",
]
