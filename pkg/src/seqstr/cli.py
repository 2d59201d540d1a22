"""Command-line front end: compare, matrix, oracle, and bench.

All indices in output are 0-based with half-open [start, end) ranges.
A zero-length answer is a valid result (exit 0), reported as
y_start = y_end = 0 with an empty match.

Exit codes: 0 success, 2 invalid arguments, 3 I/O or decode failure,
4 size limit exceeded in forced full (or matrix) mode, 5 oracle cap
exceeded.
"""

import argparse
import json
import os
import sys

from . import bench as benchmod
from .core import (
    DEFAULT_SIZE_LIMIT,
    MatchResult,
    SizeLimitExceeded,
    SymbolSequence,
    compute_matrix,
    solve,
)
from .ingest import IngestError, InputSpec, load
from .oracle import oracle_lcsss

EXIT_USAGE = 2
EXIT_IO = 3
EXIT_SIZE = 4
EXIT_ORACLE_CAP = 5


def _default_size_limit() -> int:
    env = os.environ.get("SEQSTR_SIZE_LIMIT")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_SIZE_LIMIT


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--x", help="inline literal for X")
    p.add_argument("--y", help="inline literal for Y")
    p.add_argument("--x-file", help="file path for X ('-' for stdin)")
    p.add_argument("--y-file", help="file path for Y ('-' for stdin)")
    p.add_argument("--format", choices=["plain", "fasta"], default="plain",
                   help="input file format (default: plain)")
    p.add_argument("--symbols", choices=["byte", "codepoint"], default="byte",
                   help="one symbol per byte (default) or per UTF-8 code point")
    p.add_argument("--fasta-record", help="FASTA record id to select (both inputs)")
    p.add_argument("--x-record", help="FASTA record id for X (overrides --fasta-record)")
    p.add_argument("--y-record", help="FASTA record id for Y (overrides --fasta-record)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqstr",
        description="Find the longest string that is a subsequence of X and a "
        "substring of Y.  All reported indices are 0-based half-open "
        "[y_start, y_end) into Y.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cmp = sub.add_parser("compare", help="solve for one (X, Y) pair")
    _add_input_args(p_cmp)
    p_cmp.add_argument("--mode", choices=["auto", "full", "rolling"], default="auto",
                       help="auto picks full when the matrix fits --size-limit")
    p_cmp.add_argument("--output", choices=["text", "json", "tsv"], default="text")
    p_cmp.add_argument("--witness", action="store_true",
                       help="emit the embedding indices of the match into X")
    p_cmp.add_argument("--size-limit", type=int, default=None,
                       help="full-matrix cell cap (env SEQSTR_SIZE_LIMIT, "
                       f"default {DEFAULT_SIZE_LIMIT})")

    p_mat = sub.add_parser("matrix", help="dump the full DP table as TSV")
    _add_input_args(p_mat)
    p_mat.add_argument("--size-limit", type=int, default=None)

    p_ora = sub.add_parser("oracle", help="brute-force answer and all optima")
    _add_input_args(p_ora)
    p_ora.add_argument("--output", choices=["text", "json"], default="text")
    p_ora.add_argument("--oracle-cap", type=int, default=200,
                       help="refuse |Y| above this (O(n^2 m) cost); default 200")

    p_bench = sub.add_parser("bench", help="timing harness for the O(m*n) claim")
    p_bench.add_argument("--base-m", type=int, default=2000)
    p_bench.add_argument("--base-n", type=int, default=2000)
    p_bench.add_argument("--doublings", type=int, default=1)
    p_bench.add_argument("--alphabet", type=int, default=4)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--repeats", type=int, default=3, help="best-of repetitions")
    p_bench.add_argument("--output", choices=["text", "json"], default="text")
    p_bench.add_argument("--tsv", metavar="PATH", help="also write samples as TSV")
    p_bench.add_argument("--plot", metavar="PATH",
                         help="also save a log-log scaling figure (png/pdf/svg)")
    return parser


def _load_pair(
    args: argparse.Namespace, parser: argparse.ArgumentParser
) -> tuple[SymbolSequence, SymbolSequence]:
    if (args.x is None) == (args.x_file is None):
        parser.error("exactly one of --x / --x-file is required")
    if (args.y is None) == (args.y_file is None):
        parser.error("exactly one of --y / --y-file is required")
    if args.x_file == "-" and args.y_file == "-":
        parser.error("only one input may read stdin")
    x_spec = InputSpec(
        text=args.x, path=args.x_file, format=args.format,
        symbol_mode=args.symbols,
        fasta_record=args.x_record or args.fasta_record,
    )
    y_spec = InputSpec(
        text=args.y, path=args.y_file, format=args.format,
        symbol_mode=args.symbols,
        fasta_record=args.y_record or args.fasta_record,
    )
    return load(x_spec), load(y_spec)


def _compare_payload(
    result: MatchResult, mode: str, m: int, n: int, witness: bool
) -> dict:
    return {
        "length": result.length,
        "match": result.match.to_text(),
        "y_start": result.y_start,
        "y_end": result.y_end,
        "x_witness": list(result.x_witness) if witness and result.x_witness is not None else None,
        "mode": mode,
        "m": m,
        "n": n,
    }


def run_compare(args, parser) -> int:
    x, y = _load_pair(args, parser)
    size_limit = args.size_limit if args.size_limit is not None else _default_size_limit()
    result, mode = solve(x, y, mode=args.mode, size_limit=size_limit)
    payload = _compare_payload(result, mode, len(x), len(y), args.witness)
    if args.output == "json":
        print(json.dumps(payload))
    elif args.output == "tsv":
        cols = ["length", "match", "y_start", "y_end", "mode", "m", "n"]
        if args.witness:
            cols.append("x_witness")
            payload["x_witness"] = " ".join(map(str, payload["x_witness"] or []))
        print("\t".join(cols))
        print("\t".join(str(payload[c]) for c in cols))
    else:
        for key in ("length", "match", "y_start", "y_end", "mode", "m", "n"):
            print(f"{key}: {payload[key]}")
        if args.witness:
            print("x_witness:", " ".join(map(str, payload["x_witness"] or [])))
    return 0


def run_matrix(args, parser) -> int:
    x, y = _load_pair(args, parser)
    size_limit = args.size_limit if args.size_limit is not None else _default_size_limit()
    w = compute_matrix(x, y, size_limit)
    # border row/column of indices so the dump maps one-to-one onto W
    print("\t" + "\t".join(str(j) for j in range(w.cols)))
    for i in range(w.rows):
        print(str(i) + "\t" + "\t".join(str(v) for v in w.row(i)))
    return 0


def run_oracle(args, parser) -> int:
    x, y = _load_pair(args, parser)
    if len(y) > args.oracle_cap:
        print(
            f"error: |Y| = {len(y)} exceeds oracle cap {args.oracle_cap} "
            "(raise with --oracle-cap)",
            file=sys.stderr,
        )
        return EXIT_ORACLE_CAP
    res = oracle_lcsss(x, y)
    if args.output == "json":
        print(json.dumps({
            "length": res.length,
            "occurrences": [list(p) for p in res.all_matches],
        }))
    else:
        print(f"length: {res.length}")
        print("occurrences:", " ".join(f"({s},{e})" for s, e in res.all_matches))
    return 0


def run_bench(args) -> int:
    report = benchmod.time_scaling(
        args.base_m, args.base_n, args.doublings,
        alphabet=args.alphabet, seed=args.seed, repeats=args.repeats,
    )
    if args.output == "json":
        print(json.dumps(report.to_dict()))
    else:
        print(benchmod.format_text(report))
    if args.tsv:
        benchmod.write_tsv(report, args.tsv)
    if args.plot:
        benchmod.plot_scaling(report, args.plot)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compare":
            return run_compare(args, parser)
        if args.command == "matrix":
            return run_matrix(args, parser)
        if args.command == "oracle":
            return run_oracle(args, parser)
        if args.command == "bench":
            return run_bench(args)
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (IngestError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    parser.error(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
