"""Exact arithmetic: polynomials in (t, q), cyclotomic fields, sparse polynomials, linear algebra."""

from .cyclotomic import CycloElem, CyclotomicField, cyclotomic_polynomial
from .linalg import Echelon, ExactMatrix, ReducedBasis, bareiss_rank, rank, solve_in_span
from .mpoly import MPoly, Ring, elementary_symmetric
from .poly import (
    BiPoly,
    BiSeries,
    QPoly,
    inv_product_series,
    koszul_product,
    q_binomial,
    q_factorial,
    q_int,
)

__all__ = [
    "BiPoly",
    "BiSeries",
    "CycloElem",
    "CyclotomicField",
    "Echelon",
    "ExactMatrix",
    "MPoly",
    "Ring",
    "elementary_symmetric",
    "QPoly",
    "ReducedBasis",
    "bareiss_rank",
    "cyclotomic_polynomial",
    "inv_product_series",
    "koszul_product",
    "q_binomial",
    "q_factorial",
    "q_int",
    "rank",
    "solve_in_span",
]
