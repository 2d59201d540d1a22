"""Acceptance gate: one test per criterion, each printing a pass line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines as they complete.
"""

import itertools
import json
import random

from seqstr.bench import time_scaling
from seqstr.cli import main as cli_main
from seqstr.core import (
    SizeLimitExceeded,
    SymbolSequence,
    compute_matrix,
    is_subsequence,
    rolling_aux_cells,
    solve_full,
    solve_rolling,
)
from seqstr.oracle import lcs_length, lcsubstr_length, oracle_lcsss

T = SymbolSequence.from_text


def _passed(name):
    print(f"[acceptance] {name}: PASS")


def _all_strings(alphabet, max_len):
    for length in range(max_len + 1):
        for combo in itertools.product(alphabet, repeat=length):
            yield "".join(combo)


def _random_pair(rng, alphabet_size, max_len=30):
    letters = [chr(ord("a") + k) for k in range(alphabet_size)]
    x = "".join(rng.choice(letters) for _ in range(rng.randrange(max_len + 1)))
    y = "".join(rng.choice(letters) for _ in range(rng.randrange(max_len + 1)))
    return T(x), T(y)


def _check_pair_against_oracle(x, y):
    full = solve_full(x, y)
    rolling = solve_rolling(x, y)
    assert full == rolling
    res = oracle_lcsss(x, y)
    assert full.length == res.length
    assert (full.y_start, full.y_end) in res.all_matches
    assert full.match == y.slice(full.y_start, full.y_end)
    assert is_subsequence(full.match, x)
    assert full.length == compute_matrix(x, y).max_value()


def test_exhaustive_oracle_equivalence():
    strings = [T(s) for s in _all_strings("ab", 6)]
    assert len(strings) == 127
    pairs = 0
    for x in strings:
        for y in strings:
            _check_pair_against_oracle(x, y)
            pairs += 1
    assert pairs == 127 * 127 == 16129
    _passed(f"exhaustive oracle equivalence ({pairs} pairs)")


def test_randomized_oracle_equivalence():
    rng = random.Random(20260824)
    alphabets = [1, 2, 4, 26]
    for k in range(10_000):
        x, y = _random_pair(rng, alphabets[k % 4])
        _check_pair_against_oracle(x, y)
    _passed("randomized oracle equivalence (10000 pairs)")


def test_recurrence_audit():
    rng = random.Random(11)
    for _ in range(1000):
        m, n = rng.randrange(41), rng.randrange(41)
        sigma = rng.choice([1, 2, 3, 4])
        letters = [chr(ord("a") + k) for k in range(sigma)]
        x = T("".join(rng.choice(letters) for _ in range(m)))
        y = T("".join(rng.choice(letters) for _ in range(n)))
        w = compute_matrix(x, y)
        assert all(w.cell(i, 0) == 0 for i in range(m + 1))
        assert all(w.cell(0, j) == 0 for j in range(n + 1))
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                if x[i - 1] == y[j - 1]:
                    assert w.cell(i, j) == w.cell(i - 1, j - 1) + 1
                else:
                    assert w.cell(i, j) == w.cell(i - 1, j)
    # mismatch copies straight down; the classic-LCS max rule would give 1 here
    w = compute_matrix(T("a"), T("ab"))
    assert w.cell(1, 2) == 0 == w.cell(0, 2)
    _passed("recurrence audit (1000 matrices + LCS-rule divergence)")


def test_table_max_equals_answer_length():
    rng = random.Random(12)
    for _ in range(1000):
        x, y = _random_pair(rng, rng.choice([1, 2, 4, 26]), max_len=40)
        w = compute_matrix(x, y)
        assert solve_full(x, y).length == w.max_value()
        assert solve_rolling(x, y).length == w.max_value()
    _passed("answer length equals table maximum (1000 instances)")


def test_sandwich_inequality():
    rng = random.Random(13)
    for _ in range(1000):
        x, y = _random_pair(rng, rng.choice([1, 2, 4, 26]))
        mid = oracle_lcsss(x, y).length
        assert lcsubstr_length(x, y) <= mid <= lcs_length(x, y)
    # the problem is asymmetric in its arguments
    assert solve_rolling(T("abcde"), T("ace")).length == 3
    assert solve_rolling(T("ace"), T("abcde")).length == 1
    _passed("sandwich inequality (1000 pairs) + asymmetry witness")


def test_quadratic_time_scaling():
    report = time_scaling(2000, 2000, 1, alphabet=4, seed=42, repeats=3)
    ratio = report.ratios[0]["double_both"]
    assert 3.0 <= ratio <= 6.0, f"(2m,2n)/(m,n) time ratio {ratio:.2f} outside [3.0, 6.0]"
    _passed(f"quadratic time scaling (ratio {ratio:.2f} in [3.0, 6.0])")


def test_linear_space_rolling_mode():
    m, n = 50_000, 1_000
    aux = rolling_aux_cells(n)
    assert aux <= 4 * (n + 1)
    rng = random.Random(14)
    x = T("".join(rng.choice("acgt") for _ in range(m)))
    y = T("".join(rng.choice("acgt") for _ in range(n)))
    result = solve_rolling(x, y)
    assert result.length > 0
    assert is_subsequence(result.match, x)
    # full mode may refuse the same size under a deliberately low limit
    try:
        solve_full(x, y, size_limit=1_000_000)
        raise AssertionError("expected SizeLimitExceeded")
    except SizeLimitExceeded:
        pass
    _passed(f"rolling mode space (aux {aux} <= {4 * (n + 1)} cells at m={m}, n={n})")


def test_cli_golden(capsys):
    code = cli_main(["compare", "--x", "abcde", "--y", "ace", "--output", "json"])
    out = capsys.readouterr().out
    assert code == 0
    assert json.loads(out) == {
        "length": 3,
        "match": "ace",
        "y_start": 0,
        "y_end": 3,
        "x_witness": None,
        "mode": "full",
        "m": 5,
        "n": 3,
    }

    code = cli_main(["matrix", "--x", "ab", "--y", "ba"])
    out = capsys.readouterr().out
    assert code == 0
    cells = [line.split("\t")[1:] for line in out.splitlines()[1:]]
    assert cells == [["0", "0", "0"], ["0", "0", "1"], ["0", "1", "1"]]

    # exit codes: 0 incl. empty answer, 2 usage, 3 I/O, 4 size cap, 5 oracle cap
    assert cli_main(["compare", "--x", "xyz", "--y", "abc"]) == 0
    try:
        cli_main(["compare", "--x", "abc"])
        raise AssertionError("expected usage error")
    except SystemExit as exc:
        assert exc.code == 2
    assert cli_main(["compare", "--x", "a", "--y-file", "/no/such/file"]) == 3
    assert cli_main(
        ["compare", "--x", "abcde", "--y", "ace", "--mode", "full", "--size-limit", "4"]
    ) == 4
    assert cli_main(["oracle", "--x", "abc", "--y", "a" * 201]) == 5
    capsys.readouterr()
    _passed("CLI golden outputs and exit codes")
