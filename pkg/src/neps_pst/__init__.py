"""Quantum walks on NEPS products of the 3-vertex path: transition matrices,
perfect state transfer detection, connectivity, and basis construction."""

from .gf2 import (
    Basis,
    BitVector,
    ParityClass,
    basis_from_json,
    basis_to_json,
    column_sum,
    complement_identity_basis,
    construct_basis,
    identity_basis,
    min_weight_subset,
    parity_class,
    rank_gf2,
    swap_coordinates,
    weight,
)
from .graphs import (
    center_index,
    complete_graph,
    connected_components,
    index_to_coords,
    kron,
    neps_adjacency,
    path3,
    pst_pair_indices,
    vertex_index,
)
from .pst import (
    FLIP,
    Claim,
    KroneckerLiftReport,
    Premise,
    PstCheck,
    PstReport,
    analyze_basis,
    center,
    center_block,
    check_pst,
    classify_uniform_weight,
    kronecker_product_check,
    min_weight_reduction,
    predicted_center_block,
)
from .spectral import (
    SpectralDecomposition,
    TauTime,
    eigendecompose,
    expm_oracle,
    factor_transition,
    max_entry_diff,
    p3_spectral,
    product_transition,
    symmetry_residual,
    tau,
    transition_matrix,
    unitarity_residual,
)

__all__ = [
    "Basis",
    "BitVector",
    "Claim",
    "FLIP",
    "KroneckerLiftReport",
    "ParityClass",
    "Premise",
    "PstCheck",
    "PstReport",
    "SpectralDecomposition",
    "TauTime",
    "analyze_basis",
    "basis_from_json",
    "basis_to_json",
    "center",
    "center_block",
    "center_index",
    "check_pst",
    "classify_uniform_weight",
    "column_sum",
    "complement_identity_basis",
    "complete_graph",
    "connected_components",
    "construct_basis",
    "eigendecompose",
    "expm_oracle",
    "factor_transition",
    "identity_basis",
    "index_to_coords",
    "kron",
    "kronecker_product_check",
    "max_entry_diff",
    "min_weight_reduction",
    "min_weight_subset",
    "neps_adjacency",
    "p3_spectral",
    "parity_class",
    "path3",
    "predicted_center_block",
    "product_transition",
    "pst_pair_indices",
    "rank_gf2",
    "swap_coordinates",
    "symmetry_residual",
    "tau",
    "transition_matrix",
    "unitarity_residual",
    "vertex_index",
    "weight",
]
