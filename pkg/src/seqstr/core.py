"""Suffix-anchored DP for the longest subsequence-of-X that is a substring-of-Y.

The table W has (m+1) x (n+1) cells.  W(i, j) is the length of the longest
string that is simultaneously a subsequence of x[:i] and a suffix of y[:j].
On a mismatch the value is copied from the row above only -- NOT the
max(left, up) rule of classic LCS -- because every candidate must end
exactly at position j of y.  The answer is the table maximum, and the
matching substring of y ends at the column where that maximum first
appears in row-major order.
"""

from array import array
from dataclasses import dataclass
from typing import Iterator, Optional

DEFAULT_SIZE_LIMIT = 1 << 28  # full-matrix cell cap; rolling mode has no cap


class SizeLimitExceeded(Exception):
    """Full-matrix cell count exceeds the configured limit."""

    def __init__(self, m: int, n: int, limit: int):
        self.m, self.n, self.limit = m, n, limit
        super().__init__(
            f"matrix of {(m + 1) * (n + 1)} cells ({m + 1}x{n + 1}) "
            f"exceeds limit {limit}; use rolling mode"
        )


@dataclass(frozen=True)
class SymbolSequence:
    """Immutable sequence of integer symbols (byte values or code points)."""

    symbols: tuple[int, ...]

    @classmethod
    def from_text(cls, text: str) -> "SymbolSequence":
        return cls(tuple(map(ord, text)))

    @classmethod
    def from_bytes(cls, data: bytes) -> "SymbolSequence":
        return cls(tuple(data))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, idx: int) -> int:
        return self.symbols[idx]

    def slice(self, start: int, end: int) -> "SymbolSequence":
        return SymbolSequence(self.symbols[start:end])

    def to_text(self) -> str:
        """Render symbols as text (exact for code points, latin-1-ish for bytes)."""
        return "".join(map(chr, self.symbols))


class DpMatrix:
    """(m+1) x (n+1) table of 32-bit unsigned cells, row/column 0 all zero."""

    def __init__(self, m: int, n: int):
        self.rows = m + 1
        self.cols = n + 1
        self._cells = [array("I", bytes(4 * self.cols)) for _ in range(self.rows)]

    def cell(self, i: int, j: int) -> int:
        return self._cells[i][j]

    def row(self, i: int) -> array:
        return self._cells[i]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self._cells]

    def max_value(self) -> int:
        return max(max(r) for r in self._cells)


@dataclass(frozen=True)
class MatchResult:
    """Answer record: y[y_start:y_end] is the longest substring of y that is
    a subsequence of x; x_witness (when present) gives the embedding indices."""

    length: int
    y_start: int
    y_end: int
    match: SymbolSequence
    x_witness: Optional[tuple[int, ...]] = None


def is_subsequence(needle: SymbolSequence, haystack: SymbolSequence) -> bool:
    """Greedy left-to-right subsequence test, O(len(haystack))."""
    it = iter(haystack.symbols)
    return all(sym in it for sym in needle.symbols)


def subsequence_witness(
    needle: SymbolSequence, haystack: SymbolSequence
) -> Optional[list[int]]:
    """Leftmost greedy embedding of needle into haystack, or None."""
    indices = []
    pos = 0
    hay = haystack.symbols
    for sym in needle.symbols:
        while pos < len(hay) and hay[pos] != sym:
            pos += 1
        if pos == len(hay):
            return None
        indices.append(pos)
        pos += 1
    return indices


def compute_matrix(
    x: SymbolSequence, y: SymbolSequence, size_limit: int = DEFAULT_SIZE_LIMIT
) -> DpMatrix:
    """Fill the full table: W(i,j) = W(i-1,j-1)+1 on match, else W(i-1,j)."""
    m, n = len(x), len(y)
    if (m + 1) * (n + 1) > size_limit:
        raise SizeLimitExceeded(m, n, size_limit)
    w = DpMatrix(m, n)
    xs, ys = x.symbols, y.symbols
    for i in range(1, m + 1):
        xi = xs[i - 1]
        prev = w.row(i - 1)
        cur = w.row(i)
        for j in range(1, n + 1):
            if ys[j - 1] == xi:
                cur[j] = prev[j - 1] + 1
            else:
                cur[j] = prev[j]
    return w


def reconstruct(y: SymbolSequence, length: int, y_end: int) -> SymbolSequence:
    """Slice y[y_end - length : y_end] (0-based, half-open)."""
    if not (0 <= length <= y_end <= len(y)) and not (length == 0 and y_end == 0):
        raise IndexError(
            f"invalid reconstruction: length={length}, y_end={y_end}, n={len(y)}"
        )
    return y.slice(y_end - length, y_end)


def _make_result(x: SymbolSequence, y: SymbolSequence, length: int, y_end: int) -> MatchResult:
    match = reconstruct(y, length, y_end)
    witness = subsequence_witness(match, x)
    assert witness is not None, "solver produced a non-subsequence match"
    return MatchResult(
        length=length,
        y_start=y_end - length,
        y_end=y_end,
        match=match,
        x_witness=tuple(witness),
    )


def solve_full(
    x: SymbolSequence, y: SymbolSequence, size_limit: int = DEFAULT_SIZE_LIMIT
) -> MatchResult:
    """Full-matrix solve; reports the first maximum in row-major scan order.

    A zero-length answer is normalized to y_start = y_end = 0.
    """
    m, n = len(x), len(y)
    w = compute_matrix(x, y, size_limit)
    max_length = 0
    y_end = 0
    for i in range(1, m + 1):
        row = w.row(i)
        for j in range(1, n + 1):
            if row[j] > max_length:
                max_length = row[j]
                y_end = j
    return _make_result(x, y, max_length, y_end)


def solve_rolling(x: SymbolSequence, y: SymbolSequence) -> MatchResult:
    """Single-row solve, identical result to solve_full, O(n) auxiliary cells.

    The row is updated with j descending so the previous row's values at
    j-1 and j are read before being overwritten.  Within a finished row,
    the first index attaining the row maximum is exactly the cell the
    row-major strict-improvement scan would have picked.
    """
    xs, ys = x.symbols, y.symbols
    m, n = len(xs), len(ys)
    row = array("I", bytes(4 * (n + 1)))
    max_length = 0
    y_end = 0
    for xi in xs:
        for j in range(n, 0, -1):
            if ys[j - 1] == xi:
                row[j] = row[j - 1] + 1
        if n:
            row_max = max(row)
            if row_max > max_length:
                max_length = row_max
                y_end = row.index(row_max)
    return _make_result(x, y, max_length, y_end)


def rolling_aux_cells(n: int) -> int:
    """Auxiliary 32-bit cells allocated by solve_rolling for |y| = n."""
    return n + 1


def solve(
    x: SymbolSequence,
    y: SymbolSequence,
    mode: str = "auto",
    size_limit: int = DEFAULT_SIZE_LIMIT,
) -> tuple[MatchResult, str]:
    """Dispatch to full or rolling mode; returns (result, mode_used).

    Auto mode uses the full matrix when it fits in size_limit, else rolling.
    """
    if mode == "full":
        return solve_full(x, y, size_limit), "full"
    if mode == "rolling":
        return solve_rolling(x, y), "rolling"
    if mode == "auto":
        if (len(x) + 1) * (len(y) + 1) <= size_limit:
            return solve_full(x, y, size_limit), "full"
        return solve_rolling(x, y), "rolling"
    raise ValueError(f"unknown mode: {mode!r}")
