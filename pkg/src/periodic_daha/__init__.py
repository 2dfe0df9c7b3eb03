"""Exact calibrated representations of the GL_n double affine Hecke algebra
built from periodic skew diagrams and their standard tableaux."""

from .affine_weyl import (
    AffinePermutation,
    IntegralWeight,
    ReducedWord,
    act_weight,
    elements_up_to_length,
    in_z,
    min_coset_rep,
)
from .classification import IsoVerdict, classify, isomorphic
from .daha_module import (
    CheckResult,
    DAHAModule,
    ModuleVector,
    WitnessReport,
    irreducibility_witness,
    parse_q,
    verify_defining_relations,
    verify_intertwiners,
    weight_decomposition_check,
)
from .diagrams import (
    ShapeKind,
    ShapePair,
    canonical_rep,
    enumerate_shapes,
    omega_shift,
    shape_from_cells,
    validate,
)
from .exceptions import (
    C2Violation,
    DAHAError,
    DuplicateResidue,
    IndexOutOfRange,
    InternalInvariant,
    InvalidInput,
    InvalidParameter,
    InvalidShape,
    MismatchedRank,
    NotAContent,
    NotADiagram,
)
from .tableaux import (
    ContentFunction,
    PeriodicTableau,
    apply,
    content,
    enumerate_standard,
    is_row_increasing,
    is_standard,
    reconstruct,
    row_reading,
    tableau_to_group,
    weight,
)

__version__ = "0.1.0"
