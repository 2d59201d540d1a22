"""Seeded input generator and timing harness for the quadratic-time claim.

Random pairs come from Python's Mersenne Twister (random.Random) seeded
explicitly, so every sample is reproducible byte-for-byte from its
recorded (m, n, alphabet, seed).  Timings are wall clock, best of 3,
taken sequentially to keep runs from contaminating each other.
"""

import random
import time
from dataclasses import dataclass, field

from .core import SymbolSequence, rolling_aux_cells, solve_rolling


@dataclass
class BenchSample:
    m: int
    n: int
    alphabet: int
    seed: int
    seconds: float
    mode: str = "rolling"

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "alphabet": self.alphabet,
            "seed": self.seed,
            "seconds": self.seconds,
            "mode": self.mode,
        }


@dataclass
class BenchReport:
    samples: list[BenchSample] = field(default_factory=list)
    # one entry per doubling level: time ratios against the previous level
    ratios: list[dict] = field(default_factory=list)
    peak_aux_cells: int = 0

    def to_dict(self) -> dict:
        return {
            "samples": [s.to_dict() for s in self.samples],
            "ratios": self.ratios,
            "peak_aux_cells": self.peak_aux_cells,
        }


def gen_random(
    m: int, n: int, alphabet: int, seed: int
) -> tuple[SymbolSequence, SymbolSequence]:
    """Deterministic pair of uniform random strings over the first
    `alphabet` byte values starting at 'a'."""
    if alphabet < 1:
        raise ValueError("alphabet size must be >= 1")
    rng = random.Random(seed)
    base = ord("a")
    x = SymbolSequence(tuple(base + rng.randrange(alphabet) for _ in range(m)))
    y = SymbolSequence(tuple(base + rng.randrange(alphabet) for _ in range(n)))
    return x, y


def _time_once(m: int, n: int, alphabet: int, seed: int, repeats: int) -> float:
    x, y = gen_random(m, n, alphabet, seed)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        solve_rolling(x, y)
        best = min(best, time.perf_counter() - t0)
    return best


def time_scaling(
    base_m: int,
    base_n: int,
    doublings: int,
    alphabet: int = 4,
    seed: int = 0,
    repeats: int = 3,
) -> BenchReport:
    """Time solve_rolling at (m,n), (2m,n), (m,2n), (2m,2n) per doubling.

    The (2m,2n)/(m,n) ratio should sit near 4 for a quadratic algorithm.
    """
    report = BenchReport()
    timed: dict[tuple[int, int], float] = {}

    def measure(m: int, n: int) -> float:
        if (m, n) not in timed:
            secs = _time_once(m, n, alphabet, seed, repeats)
            timed[(m, n)] = secs
            report.samples.append(BenchSample(m, n, alphabet, seed, secs))
            report.peak_aux_cells = max(report.peak_aux_cells, rolling_aux_cells(n))
        return timed[(m, n)]

    measure(base_m, base_n)
    for level in range(1, doublings + 1):
        m, n = base_m << (level - 1), base_n << (level - 1)
        t_base = measure(m, n)
        report.ratios.append(
            {
                "level": level,
                "double_m": measure(2 * m, n) / t_base,
                "double_n": measure(m, 2 * n) / t_base,
                "double_both": measure(2 * m, 2 * n) / t_base,
            }
        )
    return report


def write_tsv(report: BenchReport, path: str) -> None:
    """Delimited sample table: one row per timed configuration."""
    cols = ["m", "n", "alphabet", "seed", "seconds", "mode"]
    with open(path, "w") as fp:
        fp.write("\t".join(cols) + "\n")
        for s in report.samples:
            d = s.to_dict()
            fp.write("\t".join(str(d[c]) for c in cols) + "\n")


def plot_scaling(report: BenchReport, path: str) -> None:
    """Save a log-log cells-vs-time figure with a slope-1 reference line."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    cells = [s.m * s.n for s in report.samples]
    times = [s.seconds for s in report.samples]
    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.loglog(cells, times, "o", label="measured")
    if cells and min(times) > 0:
        c0, t0 = cells[0], times[0]
        ref_x = sorted(cells)
        ax.loglog(ref_x, [t0 * c / c0 for c in ref_x], "--", label="slope 1 (time ∝ m·n)")
    ax.set_xlabel("table cells (m · n)")
    ax.set_ylabel("wall time (s), best of repeats")
    ax.set_title("rolling-mode scaling")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def format_text(report: BenchReport) -> str:
    lines = ["samples:"]
    for s in report.samples:
        lines.append(
            f"  m={s.m} n={s.n} alphabet={s.alphabet} seed={s.seed} "
            f"time={s.seconds:.4f}s mode={s.mode}"
        )
    lines.append("ratios:")
    for r in report.ratios:
        lines.append(
            f"  level {r['level']}: 2m/base={r['double_m']:.2f} "
            f"2n/base={r['double_n']:.2f} both/base={r['double_both']:.2f}"
        )
    lines.append(f"peak_aux_cells: {report.peak_aux_cells}")
    return "\n".join(lines)
