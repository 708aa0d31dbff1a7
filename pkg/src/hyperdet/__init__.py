"""Polynomial invariants of p x q x r integer arrays.

Computes the zero weight space of degree-d monomials, the simple raising
operators on it, and their common nullspace: the classical invariants,
including the 3x3x2 hyperdeterminant (degree 12, 16749 terms) and the
smallest 4x4x2 invariant (degree 8, 14148 terms).  Candidates found by
modular elimination are certified exactly over the integers and checked
against an independent pencil-discriminant oracle.
"""

import os as _os

# BLAS thread count must be pinned before numpy first loads.
if "HYPERDET_THREADS" in _os.environ:
    for _var in (
        "OMP_NUM_THREADS",
        "OPENBLAS_NUM_THREADS",
        "MKL_NUM_THREADS",
        "NUMEXPR_NUM_THREADS",
    ):
        _os.environ.setdefault(_var, _os.environ["HYPERDET_THREADS"])

from .arrays import (
    ExponentArray,
    Format,
    SliceSums,
    Weight,
    parse_matrix_form,
    render_matrix_form,
    slice_sums,
    weight_of,
)
from .errors import (
    DegeneratePencilError,
    EnumerationError,
    FormatMismatchError,
    GroupClosureError,
    HyperdetError,
    PolynomialFileError,
    VerificationError,
)
from .io import (
    builtin_invariant,
    parse_polynomial,
    read_array,
    read_polynomial,
    render_orbit_table,
    render_polynomial,
    write_array,
    write_polynomial,
)
from .modlinalg import (
    DEFAULT_PRIME,
    SECOND_PRIME,
    ModRref,
    ModVector,
    exact_rank_ladder,
    symmetric_lift,
)
from .operators import (
    OperatorBlock,
    RaisingOp,
    all_raising_ops,
    apply_raising,
    cartan_row,
    operator_block,
    target_weight,
)
from .oracles import (
    CovarianceReport,
    IntPolynomial1D,
    NumericArray,
    covariance_check,
    evaluate,
    int_det,
    multilinear_act,
    pencil_discriminant,
    pencil_polynomial,
    random_array,
    random_unimodular,
)
from .pipeline import (
    Census,
    CensusRow,
    CertificationResult,
    InvariantPolynomial,
    PipelineReport,
    certify,
    coefficient_census,
    compute_invariant_space,
    verify_annihilation_integer,
)
from .symmetry import (
    GroupElement,
    Orbit,
    OrbitPartition,
    act,
    compose,
    group_elements,
    identity_element,
    orbit_partition,
    permutation_table,
    position_permutation,
)
from .weightspace import (
    DegreeInfo,
    count_weight_space,
    enumerate_weight_space,
    index_of,
    invariant_degree_info,
    slice_sums_from_weight,
)

__version__ = "0.1.0"
