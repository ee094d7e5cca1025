"""Exact arithmetic substrate: rationals, number fields, polynomials,
rational functions, and prime fields."""

from .rationals import QQ, RationalField, parse_rational, format_rational
from .poly import Poly, RatFn
from .numberfield import NumberField, NFElem, QuadExt, QuadExtElem
from .primefield import (PrimeField, PrimeFieldElem, fp2_field, fp2_is_square,
                         is_prime)
from .factor import (factor_q, is_irreducible_q, fp_irreducible,
                     squarefree_part_q, poly_to_sympy, sympy_to_poly)

__all__ = [
    "QQ", "RationalField", "parse_rational", "format_rational",
    "Poly", "RatFn",
    "NumberField", "NFElem", "QuadExt", "QuadExtElem",
    "PrimeField", "PrimeFieldElem", "fp2_field", "fp2_is_square", "is_prime",
    "factor_q", "is_irreducible_q", "fp_irreducible", "squarefree_part_q",
    "poly_to_sympy", "sympy_to_poly",
]
