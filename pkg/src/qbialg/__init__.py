"""Exact computer algebra for quasi-bialgebra structures on k[Z^r].

The package works entirely over exact rationals: sparse Laurent tensors
with unit-group arithmetic, quasi-bialgebra presentations with axiom
verification and Drinfeld twisting, triangular R-matrix solving,
Harrison cohomology of the Laurent ring, and an exact coherence checker
for the associated monoidal categories of vector spaces with a marked
automorphism.
"""

from .harrison import (
    AbelianGroupDescriptor,
    DegreeMismatch,
    HarrisonCochain,
    ThreeCocycleClassification,
    boundary,
    boundary_closed_form,
    coboundary_matrix,
    coface,
    cocycle_classify,
    cohomology,
)
from .homcat import (
    CoherenceReport,
    ComparisonReport,
    HTILDE_STRUCTURE,
    HomMorphism,
    HomObject,
    MonoidalParams,
    PLAIN_STRUCTURE,
    StructureMaps,
    associator,
    braiding,
    check_coherence,
    compare_structures,
    from_module_action,
    left_unitor,
    right_unitor,
    tensor_obj,
    unit_object,
)
from .laurent import (
    AlgebraMapSpec,
    CounitSpec,
    LegMismatch,
    LegOutOfRange,
    NotAUnit,
    RankMismatch,
    TensorElement,
    UnitElement,
    as_unit,
    insert_unit_leg,
    invert_unit,
    permute_legs,
    tensor_concat,
)
from .matrices import NotInvertible
from .quasibialgebra import (
    BialgebraIso,
    CanonicalTriple,
    NoMonomialTwist,
    NotForcedForm,
    QuasiBialgebraPresentation,
    canonical,
    find_trivializing_twist,
    normalize,
    ordinary,
    twist,
    verify,
)
from .reports import AxiomCheck, VerificationReport
from .rmatrix import solve_R, twist_R, verify_R

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupDescriptor",
    "AlgebraMapSpec",
    "AxiomCheck",
    "BialgebraIso",
    "CanonicalTriple",
    "CoherenceReport",
    "ComparisonReport",
    "CounitSpec",
    "DegreeMismatch",
    "HTILDE_STRUCTURE",
    "HarrisonCochain",
    "HomMorphism",
    "HomObject",
    "LegMismatch",
    "LegOutOfRange",
    "MonoidalParams",
    "NoMonomialTwist",
    "NotAUnit",
    "NotForcedForm",
    "NotInvertible",
    "PLAIN_STRUCTURE",
    "QuasiBialgebraPresentation",
    "RankMismatch",
    "StructureMaps",
    "TensorElement",
    "ThreeCocycleClassification",
    "UnitElement",
    "VerificationReport",
    "as_unit",
    "associator",
    "boundary",
    "boundary_closed_form",
    "braiding",
    "canonical",
    "check_coherence",
    "coboundary_matrix",
    "coface",
    "cocycle_classify",
    "cohomology",
    "compare_structures",
    "find_trivializing_twist",
    "from_module_action",
    "insert_unit_leg",
    "invert_unit",
    "left_unitor",
    "normalize",
    "ordinary",
    "permute_legs",
    "right_unitor",
    "solve_R",
    "tensor_concat",
    "tensor_obj",
    "twist",
    "twist_R",
    "unit_object",
    "verify",
    "verify_R",
]
