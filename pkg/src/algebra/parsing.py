"""
Polynomial text parsing for catalog data files.

Generator names (including primes such as w') are swapped for safe sympy
symbols, the text is parsed with sympy and the resulting Poly is read back
term by term. Monomials are read in canonical generator order, so odd
generators should only appear in products written in that order.
"""

import re
from typing import Dict

from sympy import Poly, Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from .graded import DegreeMismatchError, GradedAlgebra, GradedPoly

TOKEN = re.compile(r"[A-Za-z][A-Za-z0-9_]*'*")
TRANSFORMS = standard_transformations + (convert_xor,)


class PolynomialSyntaxError(ValueError):
    """Raised when polynomial text cannot be read in the given algebra."""


def parse_poly(text: str, algebra: GradedAlgebra, allow_inhomogeneous: bool = False) -> GradedPoly:
    """
    Parse text such as "v^2 - 2*u*v" into a GradedPoly of algebra.

    Raises:
        PolynomialSyntaxError: unknown symbols, non-polynomial or non-rational input.
        DegreeMismatchError: inhomogeneous text unless allow_inhomogeneous.
    """
    safe: Dict[str, Symbol] = {}
    back: Dict[str, int] = {}

    def rename(match: re.Match) -> str:
        name = match.group(0)
        if name not in algebra:
            raise PolynomialSyntaxError(
                f"Unknown symbol {name!r} in {text!r}; declared generators: {algebra.names}"
            )
        idx = algebra.index(name)
        key = f"g{idx}"
        safe[key] = Symbol(key)
        back[key] = idx
        return key

    mangled = TOKEN.sub(rename, text)
    try:
        expr = parse_expr(mangled, local_dict=dict(safe), transformations=TRANSFORMS)
    except (SyntaxError, TypeError, ValueError) as exc:
        raise PolynomialSyntaxError(f"Cannot parse {text!r}: {exc}") from exc

    symbols = [safe[k] for k in sorted(safe, key=lambda k: back[k])]
    if not symbols:
        if not expr.is_Rational:
            raise PolynomialSyntaxError(f"{text!r} is not a rational constant")
        return algebra.constant(expr)

    poly = Poly(expr, *symbols)
    if not (poly.domain.is_ZZ or poly.domain.is_QQ):
        raise PolynomialSyntaxError(f"{text!r} has non-rational coefficients ({poly.domain})")
    indices = [back[str(s)] for s in symbols]
    terms = {}
    for exps, coeff in poly.terms():
        mono = tuple((idx, e) for idx, e in sorted(zip(indices, exps)) if e)
        terms[mono] = coeff
    result = GradedPoly(algebra, terms)
    if not allow_inhomogeneous and not result.is_homogeneous():
        raise DegreeMismatchError(f"{text!r} is not homogeneous (degrees {result.degrees()})")
    return result
