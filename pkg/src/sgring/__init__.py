"""Cohen-Macaulay analysis of two-dimensional affine semigroup rings.

Rings R = k[x^a, x^p1 y^q1, ..., x^pt y^qt, y^b]: decide the Cohen-Macaulay
property, compute the Hilbert polynomial and multiplicity of the parameter
ideal (x^a, y^b), and produce the monomial basis of R/(x^a, y^b).  Every
fast path is validated against a brute-force oracle.
"""

from .core import (
    RingSpec,
    class_of,
    lattice_contains,
    order_of,
    semigroup_contains,
    subgroup_classes,
    validate,
    weighted_degree,
)
from .curve import CurveConstants, CurveSpec, batch_classify, special_case_cm
from .curve import basis as curve_basis
from .curve import constants as curve_constants
from .curve import determinant_identities
from .curve import is_cm as is_cm_curve
from .errors import (
    BudgetExceeded,
    ClassNotInSubgroup,
    DisagreementError,
    InfeasibleHilbertData,
    InvalidCurve,
    InvalidDN,
    NegativeExponent,
    NonPositiveAB,
    NonTermination,
    NotFourGen,
    RingSpecError,
    SgringError,
    TrivialSubgroup,
    ZeroGenerator,
    ZeroGeneratorPair,
)
from .fourgen import BasisResult, FourGenConstants, TraceStep, candidate_box, length_bound, monomial_basis
from .fourgen import constants as fourgen_constants
from .fourgen import is_cm as is_cm_fourgen
from .hilbert import (
    HilbertData,
    StaircaseClass,
    class_staircase,
    construct_ring,
    hilbert_data,
    staircases,
)
from .hilbert import is_cm as is_cm_general
from .oracle import (
    DEFAULT_BUDGET,
    CornerSet,
    corners,
    fourgen_constants_bruteforce,
    gsw_cm_check,
    hilbert_function,
    length_mod_parameters,
)

__version__ = "0.1.0"

__all__ = [
    "BasisResult",
    "BudgetExceeded",
    "ClassNotInSubgroup",
    "CornerSet",
    "CurveConstants",
    "CurveSpec",
    "DEFAULT_BUDGET",
    "DisagreementError",
    "FourGenConstants",
    "HilbertData",
    "InfeasibleHilbertData",
    "InvalidCurve",
    "InvalidDN",
    "NegativeExponent",
    "NonPositiveAB",
    "NonTermination",
    "NotFourGen",
    "RingSpec",
    "RingSpecError",
    "SgringError",
    "StaircaseClass",
    "TraceStep",
    "TrivialSubgroup",
    "ZeroGenerator",
    "ZeroGeneratorPair",
    "batch_classify",
    "candidate_box",
    "class_of",
    "class_staircase",
    "construct_ring",
    "corners",
    "curve_basis",
    "curve_constants",
    "determinant_identities",
    "fourgen_constants",
    "fourgen_constants_bruteforce",
    "gsw_cm_check",
    "hilbert_data",
    "hilbert_function",
    "is_cm_curve",
    "is_cm_fourgen",
    "is_cm_general",
    "lattice_contains",
    "length_bound",
    "length_mod_parameters",
    "monomial_basis",
    "order_of",
    "semigroup_contains",
    "special_case_cm",
    "staircases",
    "subgroup_classes",
    "validate",
    "weighted_degree",
]
