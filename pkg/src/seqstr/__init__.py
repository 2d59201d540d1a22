"""Longest subsequence-of-X that appears as a contiguous substring of Y."""

from .core import (
    DEFAULT_SIZE_LIMIT,
    DpMatrix,
    MatchResult,
    SizeLimitExceeded,
    SymbolSequence,
    compute_matrix,
    is_subsequence,
    reconstruct,
    rolling_aux_cells,
    solve,
    solve_full,
    solve_rolling,
    subsequence_witness,
)
from .oracle import OracleResult, enumerate_optima, lcs_length, lcsubstr_length, oracle_lcsss

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_SIZE_LIMIT",
    "DpMatrix",
    "MatchResult",
    "OracleResult",
    "SizeLimitExceeded",
    "SymbolSequence",
    "compute_matrix",
    "enumerate_optima",
    "is_subsequence",
    "lcs_length",
    "lcsubstr_length",
    "oracle_lcsss",
    "reconstruct",
    "rolling_aux_cells",
    "solve",
    "solve_full",
    "solve_rolling",
    "subsequence_witness",
]
