"""Skew constacyclic codes over finite fields and their (n, sigma)-equivalence classes."""

from .galois_field import Automorphism, FieldElement, FiniteField, frobenius, make_field
from .skew_polynomial import SkewPolynomial
from .equivalence import EquivalenceContext, EquivalenceReport, make_context
from .code_lab import CodeContext, SkewConstacyclicCode, make_code

__all__ = [
    "Automorphism",
    "CodeContext",
    "EquivalenceContext",
    "EquivalenceReport",
    "FieldElement",
    "FiniteField",
    "SkewConstacyclicCode",
    "SkewPolynomial",
    "frobenius",
    "make_code",
    "make_context",
    "make_field",
]

__version__ = "0.1.0"
