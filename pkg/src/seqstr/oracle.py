"""Brute-force reference solver and classic quadratic baselines.

These exist to verify the DP solver, not to be fast: the reference solver
enumerates every substring of y and filters with the greedy subsequence
test, so it is trustworthy on small inputs and independent of the table
recurrence it checks.
"""

from dataclasses import dataclass

from .core import (
    DEFAULT_SIZE_LIMIT,
    SizeLimitExceeded,
    SymbolSequence,
    is_subsequence,
)


@dataclass(frozen=True)
class OracleResult:
    length: int
    # every optimal (y_start, y_end) occurrence, sorted by y_end then y_start
    all_matches: tuple[tuple[int, int], ...]


def oracle_lcsss(x: SymbolSequence, y: SymbolSequence) -> OracleResult:
    """Check all O(n^2) substrings of y against x.  Intended for n <= ~200.

    A zero-length answer reports the single canonical occurrence (0, 0).
    """
    n = len(y)
    best = 0
    hits: list[tuple[int, int]] = []
    for start in range(n):
        for end in range(start + 1, n + 1):
            if end - start < best:
                continue
            if is_subsequence(y.slice(start, end), x):
                if end - start > best:
                    best = end - start
                    hits = []
                hits.append((start, end))
    if best == 0:
        return OracleResult(0, ((0, 0),))
    hits.sort(key=lambda se: (se[1], se[0]))
    return OracleResult(best, tuple(hits))


def enumerate_optima(x: SymbolSequence, y: SymbolSequence) -> list[tuple[int, int]]:
    """All optimal (y_start, y_end) occurrences; the DP's pick must be one."""
    return list(oracle_lcsss(x, y).all_matches)


def _check_limit(m: int, n: int, size_limit: int) -> None:
    if (m + 1) * (n + 1) > size_limit:
        raise SizeLimitExceeded(m, n, size_limit)


def lcs_length(
    x: SymbolSequence, y: SymbolSequence, size_limit: int = DEFAULT_SIZE_LIMIT
) -> int:
    """Classic longest-common-subsequence length (two-row quadratic DP)."""
    xs, ys = x.symbols, y.symbols
    m, n = len(xs), len(ys)
    _check_limit(m, n, size_limit)
    prev = [0] * (n + 1)
    for xi in xs:
        cur = [0] * (n + 1)
        for j in range(1, n + 1):
            if ys[j - 1] == xi:
                cur[j] = prev[j - 1] + 1
            else:
                cur[j] = max(prev[j], cur[j - 1])
        prev = cur
    return prev[n]


def lcsubstr_length(
    x: SymbolSequence, y: SymbolSequence, size_limit: int = DEFAULT_SIZE_LIMIT
) -> int:
    """Classic longest-common-substring length (two-row quadratic DP)."""
    xs, ys = x.symbols, y.symbols
    m, n = len(xs), len(ys)
    _check_limit(m, n, size_limit)
    best = 0
    prev = [0] * (n + 1)
    for xi in xs:
        cur = [0] * (n + 1)
        for j in range(1, n + 1):
            if ys[j - 1] == xi:
                cur[j] = prev[j - 1] + 1
                if cur[j] > best:
                    best = cur[j]
        prev = cur
    return best
