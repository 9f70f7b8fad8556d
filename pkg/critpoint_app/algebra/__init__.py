from .affine import AffineMap
from .field import IMAG_UNIT, ONE, ZERO, FieldElem, Point, as_field, as_point, format_rational, parse_rational
from .matrix import QMatrix, determinant, rank, rank_and_nullspace, solve_linear
from .poly import (
    MINUS_INFINITY,
    BivarPoly,
    Variable,
    X,
    Y,
    affine_pullback,
    bivariate_gcd,
    column_monomials,
    evaluate,
    exact_divide,
    integrate,
    partial_derivative,
)

__all__ = [
    "AffineMap",
    "BivarPoly",
    "FieldElem",
    "IMAG_UNIT",
    "MINUS_INFINITY",
    "ONE",
    "Point",
    "QMatrix",
    "Variable",
    "X",
    "Y",
    "ZERO",
    "affine_pullback",
    "as_field",
    "as_point",
    "bivariate_gcd",
    "column_monomials",
    "determinant",
    "evaluate",
    "exact_divide",
    "format_rational",
    "integrate",
    "parse_rational",
    "partial_derivative",
    "rank",
    "rank_and_nullspace",
    "solve_linear",
]
