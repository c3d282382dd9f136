"""Exact fields, sparse polynomials, polynomial matrices and the text formats."""

from .field import GF, QQ, FieldSpec, is_prime
from .matrix import (
    NotDivisible,
    RingMatrix,
    berkowitz,
    char_poly,
    char_poly_coefficients,
    cofactor_det,
    exact_divide,
)
from .parse import PolySyntaxError, format_ideal_text, parse_ideal_text, parse_poly
from .ring import GREVLEX, LEX, NEG_INF, MonomialOrder, PolyRing, Polynomial, format_poly
from .univariate import INCONCLUSIVE, Verdict, dense_coefficients, squarefree_part

__all__ = [
    "FieldSpec", "GF", "QQ", "is_prime",
    "MonomialOrder", "LEX", "GREVLEX", "NEG_INF", "PolyRing", "Polynomial", "format_poly",
    "RingMatrix", "char_poly", "char_poly_coefficients", "berkowitz", "cofactor_det",
    "exact_divide", "NotDivisible",
    "parse_poly", "parse_ideal_text", "format_ideal_text", "PolySyntaxError",
    "squarefree_part", "dense_coefficients", "Verdict", "INCONCLUSIVE",
]
