"""Exact-arithmetic Lie-theory engine for invariant Laplace spectra on Gr(2,7) and Gr(3,8)."""

from .exact import GaussRat, Matrix, Rat, char_poly, mat_kernel, solve_linear
from .poly import IsolatingInterval, RatPoly, refine_root, sturm_isolate

__all__ = [
    "GaussRat",
    "Matrix",
    "Rat",
    "char_poly",
    "mat_kernel",
    "solve_linear",
    "RatPoly",
    "IsolatingInterval",
    "sturm_isolate",
    "refine_root",
]
