"""Symmetric cycles in the hypercube graphs H(t,2) and decompositions of their vertices."""

from .cube import (
    CapExceeded,
    CycleSpec,
    DimensionError,
    InvalidCycleError,
    PermutationError,
    SignSet,
    SignStringError,
    SymmetricCycle,
    Tope,
    all_topes,
    build_cycle,
    build_standard_cycle,
    hamming_distance,
    negative_part,
    path_matrix_determinant,
    random_cycle,
    random_cycle_spec,
    reorient,
    scalar_product,
    validate_cycle,
)
from .decomposition import (
    Decomposition,
    UniquenessViolation,
    bmax_plus,
    decompose,
    decompose_oracle,
    local_bmax_criterion,
    partition_check,
)
from .spectral import (
    Autocorrelation,
    DistanceVector,
    IdentityViolation,
    KernelVector,
    Spectrum,
    autocorrelation,
    cardinality_autocorr,
    cardinality_quadratic,
    cardinality_spectral,
    decomposition_distance_sum,
    dft_forward,
    distance_vector,
    kernel,
    pairwise_distance_stats,
)
from .stats import (
    CensusTable,
    census,
    gamma_polynomial,
    global_identities,
    intersection_number_p2,
    s_value,
    symmetry_relations,
)

__version__ = "0.1.0"
