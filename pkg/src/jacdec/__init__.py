"""Exact Riemann matrices of Jacobians with a symplectic group action.

The pipeline: generate the integral symplectic group, solve for the fixed
point in Siegel space over a cyclotomic field, cut out abelian subvarieties
with group-algebra idempotents, connect the pieces by explicit symplectic
isomorphism witnesses, and decide simplicity of the resulting surfaces.
All arithmetic is exact; floating point appears only in positivity checks
at a stated precision.
"""

from .cyclofield import CycNum, CyclotomicField
from .decompose import (
    Idempotent,
    Sublattice,
    SubvarietyData,
    SumCertificate,
    frobenius_transform,
    idempotent_image,
    lattice_from_basis,
    make_idempotent,
    polarization_type,
    sub_period_matrix,
    sum_map_certificate,
)
from .errors import (
    DegenerateFixedLocusError,
    FieldMismatchError,
    JacdecError,
    NotAGroupError,
    SingularMatrixError,
)
from .exactlinalg import (
    Matrix,
    SolveResult,
    eigenspace,
    hnf,
    hnf_with_transform,
    int_det,
    int_kernel,
    saturation,
    snf,
)
from .grouprep import (
    MatrixGroup,
    RelationReport,
    Signature,
    SkepReport,
    element_order,
    evaluate_word,
    generate_group,
    riemann_hurwitz_genus,
    verify_relations,
    verify_skep,
)
from .simplicity import (
    CriterionSystem,
    Verdict,
    WitnessCheck,
    build_system,
    decide,
    verify_witness,
)
from .symplectic import (
    FixedPointResult,
    J_matrix,
    WitnessResult,
    fixed_riemann_matrix,
    is_riemann_matrix,
    is_symplectic,
    ppav_isomorphism_witness,
    siegel_act,
)

__version__ = "0.1.0"

__all__ = [
    "CycNum",
    "CyclotomicField",
    "CriterionSystem",
    "DegenerateFixedLocusError",
    "FieldMismatchError",
    "FixedPointResult",
    "Idempotent",
    "J_matrix",
    "JacdecError",
    "Matrix",
    "MatrixGroup",
    "NotAGroupError",
    "RelationReport",
    "Signature",
    "SingularMatrixError",
    "SkepReport",
    "SolveResult",
    "Sublattice",
    "SubvarietyData",
    "SumCertificate",
    "Verdict",
    "WitnessCheck",
    "WitnessResult",
    "build_system",
    "decide",
    "eigenspace",
    "element_order",
    "evaluate_word",
    "fixed_riemann_matrix",
    "frobenius_transform",
    "generate_group",
    "hnf",
    "hnf_with_transform",
    "idempotent_image",
    "int_det",
    "int_kernel",
    "is_riemann_matrix",
    "is_symplectic",
    "lattice_from_basis",
    "make_idempotent",
    "polarization_type",
    "ppav_isomorphism_witness",
    "riemann_hurwitz_genus",
    "saturation",
    "siegel_act",
    "snf",
    "sub_period_matrix",
    "sum_map_certificate",
    "verify_relations",
    "verify_skep",
    "verify_witness",
    "__version__",
]
