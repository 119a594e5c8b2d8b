"""Command-line front end: compute MI matrices, generate datasets, benchmark.

Exit codes: 0 success, 2 parse/format/domain errors (bad flags included),
3 dimension errors, 1 anything else.  Diagnostics go to standard error;
matrix and report data go to files or standard output.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import bench as bench_mod
from . import io as mio
from .binmat import to_sparse
from .datagen import GenSpec, generate
from .engine import EngineConfig, density, mi_all_pairs, mi_all_pairs_naive
from .errors import DimensionError, DomainError, FormatError, MiMatrixError

FORMATS = ("csv", "bmi", "triplets")


def _read_input(path: str, fmt: str):
    if fmt == "csv":
        return mio.read_csv(path)
    if fmt == "bmi":
        return mio.read_bmi(path)
    return mio.read_triplets(path)


def _cmd_compute(args) -> int:
    data = _read_input(args.input, args.format)
    cfg = EngineConfig(
        mode=args.mode,
        epsilon=args.epsilon,
        include_diagonal=not args.no_diagonal,
    )
    t0 = time.perf_counter()
    if args.backend == "naive":
        mi = mi_all_pairs_naive(data, cfg)
    else:
        mi = mi_all_pairs(data, cfg, backend=args.backend, threads=args.threads)
    elapsed = time.perf_counter() - t0
    if args.output:
        mio.write_mi_matrix(mi, args.output, precision=args.precision)
    else:
        mio.write_mi_matrix(mi, sys.stdout, precision=args.precision)
    print(
        f"n={data.n_rows} m={data.n_cols} density={density(data):.6f} "
        f"elapsed={elapsed:.3f}s",
        file=sys.stderr,
    )
    return 0


def _cmd_generate(args) -> int:
    spec = GenSpec(args.rows, args.cols, args.density, args.seed)
    matrix = generate(spec)
    if args.format == "csv":
        mio.write_csv(matrix, args.output)
    elif args.format == "bmi":
        mio.write_bmi(matrix, args.output)
    else:
        mio.write_triplets(to_sparse(matrix), args.output)
    print(
        f"wrote {args.output}: {spec.n_rows}x{spec.n_cols} "
        f"density={density(matrix):.6f}",
        file=sys.stderr,
    )
    return 0


def _run_report(cases, output) -> int:
    report = bench_mod.run_grid(cases)
    if output:
        bench_mod.emit_table(report, output)
        print(f"wrote {len(report.records)} records to {output}", file=sys.stderr)
    sys.stdout.write(bench_mod.summary_table(report))
    problems = bench_mod.check_consistency(report)
    for p in problems:
        print(f"consistency: {p}", file=sys.stderr)
    return 1 if problems else 0


def _cmd_bench(args) -> int:
    if args.cases:
        cases = bench_mod.read_cases(args.cases)
    else:
        cases = bench_mod.preset_cases(args.preset, scale=args.scale, repeats=args.repeats)
    return _run_report(cases, args.output)


def _cmd_sweep(args) -> int:
    try:
        densities = [float(d) for d in args.densities.split(",") if d.strip()]
    except ValueError:
        raise FormatError(f"bad density list {args.densities!r}") from None
    if not densities:
        raise FormatError("density list is empty")
    cases = [
        bench_mod.BenchCase(backend, args.rows, args.cols, d, args.seed, args.repeats)
        for d in densities
        for backend in ("optimized-dense", "optimized-sparse")
    ]
    return _run_report(cases, args.output)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mimatrix",
        description="All-pairs mutual information for binary datasets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute the pairwise MI matrix of a dataset")
    p.add_argument("--input", required=True, help="input dataset path")
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument(
        "--backend", choices=("dense", "sparse", "direct", "naive"), default="dense"
    )
    p.add_argument("--mode", choices=("exact", "epsilon"), default="exact")
    p.add_argument("--epsilon", type=float, default=1e-12)
    p.add_argument("--no-diagonal", action="store_true", help="zero the diagonal")
    p.add_argument("--output", help="MI matrix CSV (default: standard output)")
    p.add_argument("--precision", type=int, default=9, help="decimal places")
    p.add_argument("--threads", type=int, default=0, help="0 = automatic")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("generate", help="generate a deterministic synthetic dataset")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", required=True)
    p.add_argument("--format", choices=FORMATS, default="bmi")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("bench", help="run a benchmark grid and report timings")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--preset", choices=("table1", "rows", "cols", "sparsity"))
    group.add_argument("--cases", help="CSV of custom cases")
    p.add_argument("--scale", type=float, default=1.0, help="row-count scale factor")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--output", help="per-record report CSV")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("sweep", help="sparsity sweep at a fixed dataset size")
    p.add_argument("--rows", type=int, default=20000)
    p.add_argument("--cols", type=int, default=500)
    p.add_argument("--densities", default="0.5,0.1,0.05,0.01,0.005")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--output", help="per-record report CSV")
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already reported to stderr
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (FormatError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DimensionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MiMatrixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
