"""Skew-gentle algebras: validation, representation type and explicit brick families.

>>> from skewgentle import corpus, decide_rep_type
>>> decide_rep_type(corpus.kronecker()).verdict
'Infinite'
>>> decide_rep_type(corpus.linear(3)).verdict
'Finite'
"""

from . import corpus, linrep
from .errors import (
    BudgetExceeded,
    CharacteristicError,
    PreconditionError,
    PresentationError,
    ReflectionError,
    RepresentationFiniteError,
    SkewGentleError,
)
from .linrep import FieldSpec, Representation
from .polarization import (
    LinearRelation,
    PolarizedPresentation,
    SignedArrow,
    SignedVertex,
    arrow_fibers,
    polarize,
    relation_image,
)
from .presentation import (
    Arrow,
    GentlePair,
    MonomialRelation,
    Quiver,
    SkewGentlePresentation,
    ValidationReport,
    build_qsp,
    parse_presentation,
    serialize_presentation,
    validate_gentle,
    validate_skew_gentle,
)
from .reduction import CaseLabel, MinimalBand, classify_case, minimize_band, quotient_support
from .strings import (
    Band,
    Letter,
    StringType,
    Walk,
    decide_rep_type,
    enumerate_strings,
    find_band,
    is_band,
    is_string,
    rotations,
    string_type,
)
from .witness import BrickFamilyDescriptor, realize, verify_witness, witness_family

__version__ = "0.1.0"

__all__ = [
    "Arrow", "Band", "BrickFamilyDescriptor", "BudgetExceeded", "CaseLabel",
    "CharacteristicError", "FieldSpec", "GentlePair", "Letter", "LinearRelation",
    "MinimalBand", "MonomialRelation", "PolarizedPresentation", "PreconditionError",
    "PresentationError", "Quiver", "ReflectionError", "Representation",
    "RepresentationFiniteError", "SignedArrow", "SignedVertex", "SkewGentleError",
    "SkewGentlePresentation", "StringType", "ValidationReport", "Walk",
    "arrow_fibers", "build_qsp", "classify_case", "corpus", "decide_rep_type",
    "enumerate_strings", "find_band", "is_band", "is_string", "linrep",
    "minimize_band", "parse_presentation", "polarize", "quotient_support", "realize",
    "relation_image", "rotations", "serialize_presentation", "string_type",
    "validate_gentle", "validate_skew_gentle", "verify_witness", "witness_family",
]
