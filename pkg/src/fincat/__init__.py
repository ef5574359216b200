"""Finite categories with checkable axioms, the exact-rational matrix
category, functors with brute-force Yoneda verification, monoid actions and
matrix representations, and discrete dynamical systems — plus a small text
DSL and CLI for all of it.
"""

from .actions import (
    FinMonoid,
    MatRepresentation,
    SetAction,
    as_set_functor,
    builtin_d8,
    builtin_windowpane,
    check_action,
    check_monoid,
    check_representation,
    monoid_to_category,
    orbit,
)
from .category import FinCategory, Mor, check_category, find_pullback
from .corpus import (
    arrow_category,
    corpus_categories,
    d8_category,
    divisor_poset_category,
    terminal_category,
    windowpane_category,
)
from .dsl import Document, build_action, format_document, load_document, parse
from .dynsys import (
    DiscreteDynSys,
    OrbitInfo,
    SampledFlow,
    as_naction,
    check_flow,
    check_iterate_law,
    iterate,
    orbit_analysis,
)
from .errors import (
    ClosureError,
    DimensionError,
    EvaluatorError,
    FincatError,
    LimitExceededError,
    NonComposableError,
    ParseError,
    SingularMatrixError,
    StructuralError,
)
from .functors import (
    CatFunctor,
    NatTransf,
    SetFunctor,
    check_functor,
    check_nat_transf,
    check_set_functor,
    enumerate_functors,
    enumerate_nat_transfs,
    hom_functor,
    identity_functor,
    yoneda_check,
)
from .matrix import (
    RatMatrix,
    Rational,
    as_fincategory,
    check_enrichment,
    check_linearity,
    format_matrix,
    identity,
    mat_add,
    mat_mul,
    mat_neg,
    matrices_as_fincategory,
    parse_matrix_literal,
    scale_via_composition,
    vector_as_morphism,
    zero,
    zero_vector,
)
from .report import ValidationReport, Violation

__version__ = "0.1.0"

__all__ = [
    "CatFunctor",
    "ClosureError",
    "DimensionError",
    "DiscreteDynSys",
    "Document",
    "EvaluatorError",
    "FinCategory",
    "FinMonoid",
    "FincatError",
    "LimitExceededError",
    "MatRepresentation",
    "Mor",
    "NatTransf",
    "NonComposableError",
    "OrbitInfo",
    "ParseError",
    "RatMatrix",
    "Rational",
    "SampledFlow",
    "SetAction",
    "SetFunctor",
    "SingularMatrixError",
    "StructuralError",
    "ValidationReport",
    "Violation",
    "arrow_category",
    "as_fincategory",
    "as_naction",
    "as_set_functor",
    "build_action",
    "builtin_d8",
    "builtin_windowpane",
    "check_action",
    "check_category",
    "check_enrichment",
    "check_flow",
    "check_functor",
    "check_iterate_law",
    "check_linearity",
    "check_monoid",
    "check_nat_transf",
    "check_representation",
    "check_set_functor",
    "corpus_categories",
    "d8_category",
    "divisor_poset_category",
    "enumerate_functors",
    "enumerate_nat_transfs",
    "find_pullback",
    "format_document",
    "format_matrix",
    "hom_functor",
    "identity",
    "identity_functor",
    "iterate",
    "load_document",
    "mat_add",
    "mat_mul",
    "mat_neg",
    "matrices_as_fincategory",
    "monoid_to_category",
    "orbit",
    "orbit_analysis",
    "parse",
    "parse_matrix_literal",
    "scale_via_composition",
    "terminal_category",
    "vector_as_morphism",
    "windowpane_category",
    "yoneda_check",
    "zero",
    "zero_vector",
]
