"""Exact verification of log-concavity for graph valencies and scheme multiplicities."""
from .kernels import BACKEND
from .seq import IntPolynomial, Verdict, is_log_concave, is_unimodal, poly_mul, poly_pow

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "IntPolynomial",
    "Verdict",
    "is_log_concave",
    "is_unimodal",
    "poly_mul",
    "poly_pow",
]
