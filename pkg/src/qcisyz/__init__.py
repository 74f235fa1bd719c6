"""Exact-arithmetic syzygy and Tjurina invariants for singular plane curves
and quasi-complete-intersection triples in the projective plane.
"""

from .fields import QQ, DEFAULT_PRIME, PrimeField, Rationals, make_field
from .parsing import ParseError, parse_polynomial
from .pipeline import (
    InputError,
    InvariantError,
    QciAnalysis,
    QciInput,
    analyze,
    chern_and_formulas,
)
from .poly import Polynomial, format_polynomial
from .resolution import BettiTable, GradedResolution, minimal_resolution
from .theorems import STATEMENT_IDS, TheoremReport, check_all, classify

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "DEFAULT_PRIME",
    "PrimeField",
    "Rationals",
    "make_field",
    "ParseError",
    "parse_polynomial",
    "InputError",
    "InvariantError",
    "QciAnalysis",
    "QciInput",
    "analyze",
    "chern_and_formulas",
    "Polynomial",
    "format_polynomial",
    "BettiTable",
    "GradedResolution",
    "minimal_resolution",
    "STATEMENT_IDS",
    "TheoremReport",
    "check_all",
    "classify",
    "__version__",
]
