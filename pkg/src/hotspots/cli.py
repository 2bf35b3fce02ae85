"""Command-line entry point: ``hotspots {query,oracle,gen,bench}``.

Exit status is 0 on success, 1 on usage errors and 2 on bad input data.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .bench import run_benchmark
from .generate import WalkParams, generate
from .io import TSV_COLUMNS, DataError, format_record, format_trajectory, parse_queries, parse_trajectory, witness_record
from .oracle import SampledOracle, VertexAnchoredOracle
from .query import build_index
from .trajectory import PreconditionError, TrajectoryError, clamp_window

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _positive(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def build_arg_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hotspots", description="Time-windowed contiguous hotspot queries.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("query", help="answer hotspot queries over a trajectory CSV")
    q.add_argument("--input", required=True, type=Path)
    q.add_argument("--side", required=True, type=_positive)
    mode = q.add_mutually_exclusive_group(required=True)
    mode.add_argument("--window", nargs=2, type=float, metavar=("X", "Y"))
    mode.add_argument("--queries", type=Path, help="file with one 'x y' pair per line")
    mode.add_argument("--whole", action="store_true")
    q.add_argument("--format", choices=("json", "tsv"), default="json")
    q.add_argument("--jobs", type=int, default=1, help="worker threads for query batches")

    o = sub.add_parser("oracle", help="brute-force reference values for one window")
    o.add_argument("--input", required=True, type=Path)
    o.add_argument("--side", required=True, type=_positive)
    o.add_argument("--window", nargs=2, type=float, metavar=("X", "Y"), required=True)
    o.add_argument("--samples", type=int, default=200)

    g = sub.add_parser("gen", help="write a seeded synthetic trajectory")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out", type=Path, required=True)
    g.add_argument("--extent", type=float, default=WalkParams.extent)
    g.add_argument("--step", type=float, default=WalkParams.step)
    g.add_argument("--dwell-fraction", type=float, default=WalkParams.dwell_fraction)

    b = sub.add_parser("bench", help="time index build and random queries")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--queries", type=int, required=True)
    b.add_argument("--side", type=_positive, required=True)
    b.add_argument("--seed", type=int, default=0)
    return parser


def _read_trajectory(path: Path):
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_trajectory(text)


def _cmd_query(args, out) -> int:
    T = _read_trajectory(args.input)
    idx = build_index(T, args.side)
    if args.whole:
        windows = [(T.start, T.end)]
    elif args.window:
        windows = [tuple(args.window)]
    else:
        try:
            windows = parse_queries(args.queries.read_text(encoding="utf-8"))
        except OSError as exc:
            raise DataError(f"cannot read {args.queries}: {exc.strerror}") from exc
    for x, y in windows:
        if x > y:
            raise UsageError(f"window start {x} is after end {y}")

    def answer(win):
        eff = idx.clamp(*win)
        return format_record(witness_record(eff, idx.query(eff.start, eff.end)), args.format)

    if args.format == "tsv":
        out.write("\t".join(TSV_COLUMNS) + "\n")
    if args.jobs > 1:
        with ThreadPoolExecutor(args.jobs) as pool:
            lines = pool.map(answer, windows)
            for line in lines:
                out.write(line + "\n")
    else:
        for win in windows:
            out.write(answer(win) + "\n")
    return EXIT_OK


def _cmd_oracle(args, out) -> int:
    T = _read_trajectory(args.input)
    x, y = args.window
    if x > y:
        raise UsageError(f"window start {x} is after end {y}")
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    win = clamp_window(T, x, y)
    anchored = VertexAnchoredOracle(T, args.side)(win)
    sampled = SampledOracle(T, args.side, args.samples)(win)
    rec = {
        "window": [win.start, win.end],
        "vertex_anchored": witness_record(win, anchored),
        "sampled": sampled,
        "samples": args.samples,
    }
    out.write(json.dumps(rec) + "\n")
    return EXIT_OK


def _cmd_gen(args, out) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    params = WalkParams(extent=args.extent, step=args.step, dwell_fraction=args.dwell_fraction)
    try:
        T = generate(args.n, args.seed, params)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    args.out.write_text(format_trajectory(T), encoding="utf-8")
    return EXIT_OK


def _cmd_bench(args, out) -> int:
    if args.n < 1 or args.queries < 0:
        raise UsageError("--n must be >= 1 and --queries >= 0")
    report = run_benchmark(args.n, args.queries, args.side, args.seed)
    out.write(json.dumps(report.as_dict(), indent=2) + "\n")
    return EXIT_OK


COMMANDS = {"query": _cmd_query, "oracle": _cmd_oracle, "gen": _cmd_gen, "bench": _cmd_bench}


def run_cli(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_arg_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except (DataError, TrajectoryError, PreconditionError) as exc:
        print(f"hotspots: data error: {exc}", file=err)
        return EXIT_DATA


def main() -> None:  # pragma: no cover
    sys.exit(run_cli())


if __name__ == "__main__":  # pragma: no cover
    main()
