"""
Algebra package: exact scalars, free graded-commutative polynomials and
finitely presented graded rings.
"""

from .scalars import QQ, GF, Field, FieldMismatchError, Scalar
from .graded import (
    AmbientMismatchError,
    DegreeMismatchError,
    GenSymbol,
    GradedAlgebra,
    GradedPoly,
    Monomial,
    format_poly,
    multiply,
    substitute,
    transfer,
    word_length,
    word_length_component,
)
from .parsing import PolynomialSyntaxError, parse_poly
from .presented import (
    DegreeBoundError,
    GradedBasis,
    Presentation,
    free_presentation,
    graded_dim,
    indecomposables_dim,
    is_nonzero,
)

__all__ = [
    "QQ",
    "GF",
    "Field",
    "FieldMismatchError",
    "Scalar",
    "AmbientMismatchError",
    "DegreeMismatchError",
    "GenSymbol",
    "GradedAlgebra",
    "GradedPoly",
    "Monomial",
    "format_poly",
    "multiply",
    "substitute",
    "transfer",
    "word_length",
    "word_length_component",
    "PolynomialSyntaxError",
    "parse_poly",
    "DegreeBoundError",
    "GradedBasis",
    "Presentation",
    "free_presentation",
    "graded_dim",
    "indecomposables_dim",
    "is_nonzero",
]
