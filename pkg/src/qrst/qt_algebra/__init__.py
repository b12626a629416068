"""Exact arithmetic in Q(q, t): Laurent polynomials, rational functions, brackets."""

from .brackets import BracketProduct, bracket, bracket_to_rq
from .laurent import LaurentPoly
from .rational import (
    RationalQT,
    rq_arith,
    rq_eq,
    rq_eval,
    rq_limit_q1_diagonal,
    rq_substitute,
)

__all__ = [
    "BracketProduct",
    "LaurentPoly",
    "RationalQT",
    "bracket",
    "bracket_to_rq",
    "rq_arith",
    "rq_eq",
    "rq_eval",
    "rq_limit_q1_diagonal",
    "rq_substitute",
]
