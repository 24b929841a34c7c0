"""Exact arithmetic kernel: rationals, polynomials and rational functions over Q."""

from .poly import VARIABLES, Poly, poly_arith, poly_gcd, poly_sqrt
from .ratfunc import RationalFunction, ratfunc_arith, ratfunc_eval, ratfunc_sqrt
from .rational import ExactRational, as_rational, format_rational, height, parse_rational, rat_sqrt
from .text import format_ratfunc, parse_expression

__all__ = [
    "VARIABLES",
    "ExactRational",
    "Poly",
    "RationalFunction",
    "as_rational",
    "format_rational",
    "format_ratfunc",
    "height",
    "parse_expression",
    "parse_rational",
    "poly_arith",
    "poly_gcd",
    "poly_sqrt",
    "rat_sqrt",
    "ratfunc_arith",
    "ratfunc_eval",
    "ratfunc_sqrt",
]
