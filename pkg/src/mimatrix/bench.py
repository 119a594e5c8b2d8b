"""Timing harness for the MI backends.

Benchmarks compare four paths on identical generated datasets: the per-pair
naive baseline, the unoptimized four-product Gram path, and the optimized
dense and sparse backends.  Dataset generation and representation conversion
happen before the clock starts; each case gets one untimed warmup run so JIT
compilation and first-touch allocation never land in a measurement.  The
headline number per case is the median over repeats.

Every record carries the checksum (sum of MI entries) of the run, so a
benchmark doubles as a cross-backend consistency check.
"""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass
from pathlib import Path

from .binmat import to_sparse
from .datagen import GenSpec, generate
from .engine import EngineConfig, mi_all_pairs, mi_all_pairs_naive
from .errors import DomainError, FormatError

BACKENDS = ("naive-pairwise", "direct-gram", "optimized-dense", "optimized-sparse")
BULK_BACKENDS = ("direct-gram", "optimized-dense", "optimized-sparse")

REPORT_HEADER = ("backend", "n_rows", "n_cols", "density", "seed", "rep", "seconds", "checksum")

_DEFAULT_SEED = 42
CHECKSUM_TOL_FACTOR = 1e-6  # checksums must agree within this times m^2


@dataclass(frozen=True)
class BenchCase:
    backend: str
    n_rows: int
    n_cols: int
    density: float
    seed: int = _DEFAULT_SEED
    repeats: int = 3

    def __post_init__(self):
        if self.backend not in BACKENDS:
            raise DomainError(f"backend must be one of {BACKENDS}, got {self.backend!r}")
        if self.repeats < 1:
            raise DomainError("repeats must be at least 1")

    def dataset_key(self) -> tuple:
        """Identity of the input data, shared across backends."""
        return (self.n_rows, self.n_cols, self.density, self.seed)


@dataclass(frozen=True)
class BenchRecord:
    case: BenchCase
    rep: int
    seconds: float
    checksum: float


@dataclass(frozen=True)
class BenchReport:
    records: tuple

    def median_seconds(self) -> dict:
        """Median wall time keyed by (backend, n_rows, n_cols, density, seed)."""
        grouped: dict = {}
        for rec in self.records:
            key = (rec.case.backend,) + rec.case.dataset_key()
            grouped.setdefault(key, []).append(rec.seconds)
        return {k: statistics.median(v) for k, v in grouped.items()}

    def min_seconds(self) -> dict:
        grouped: dict = {}
        for rec in self.records:
            key = (rec.case.backend,) + rec.case.dataset_key()
            grouped.setdefault(key, []).append(rec.seconds)
        return {k: min(v) for k, v in grouped.items()}


def _prepare(case: BenchCase):
    matrix = generate(GenSpec(case.n_rows, case.n_cols, case.density, case.seed))
    if case.backend == "optimized-sparse":
        return to_sparse(matrix)
    return matrix


def _run_backend(case: BenchCase, data) -> float:
    cfg = EngineConfig()
    if case.backend == "naive-pairwise":
        return mi_all_pairs_naive(data, cfg).checksum()
    backend = {
        "direct-gram": "direct",
        "optimized-dense": "dense",
        "optimized-sparse": "sparse",
    }[case.backend]
    return mi_all_pairs(data, cfg, backend=backend).checksum()


def run_case(case: BenchCase, warmup: bool = True) -> list:
    """Time one case; generation and conversion excluded, repeats independent."""
    data = _prepare(case)
    if warmup:
        _run_backend(case, data)
    records = []
    for rep in range(case.repeats):
        t0 = time.perf_counter()
        checksum = _run_backend(case, data)
        seconds = time.perf_counter() - t0
        records.append(BenchRecord(case=case, rep=rep, seconds=seconds, checksum=checksum))
    return records


def run_grid(cases) -> BenchReport:
    """Run cases sequentially (no co-scheduling noise between cases)."""
    cases = list(cases)
    if not cases:
        raise DomainError("case list must not be empty")
    records = []
    for case in cases:
        records.extend(run_case(case))
    return BenchReport(records=tuple(records))


def emit_table(report: BenchReport, path: str | Path) -> None:
    """Write one CSV line per record with the fixed report header."""
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(REPORT_HEADER)
        for rec in report.records:
            c = rec.case
            writer.writerow(
                [
                    c.backend,
                    c.n_rows,
                    c.n_cols,
                    repr(c.density),
                    c.seed,
                    rec.rep,
                    f"{rec.seconds:.6f}",
                    f"{rec.checksum:.12g}",
                ]
            )


def summary_table(report: BenchReport) -> str:
    """Pivot to one row per dataset and one column per backend (median seconds)."""
    medians = report.median_seconds()
    datasets: list = []
    backends: list = []
    for rec in report.records:
        key = rec.case.dataset_key()
        if key not in datasets:
            datasets.append(key)
        if rec.case.backend not in backends:
            backends.append(rec.case.backend)
    lines = ["n_rows,n_cols,density,seed," + ",".join(backends)]
    for key in datasets:
        n_rows, n_cols, dens, seed = key
        cells = []
        for b in backends:
            med = medians.get((b,) + key)
            cells.append("" if med is None else f"{med:.6f}")
        lines.append(f"{n_rows},{n_cols},{dens!r},{seed}," + ",".join(cells))
    return "\n".join(lines) + "\n"


def check_consistency(report: BenchReport) -> list:
    """Cross-backend checksum agreement per dataset; returns violation messages."""
    by_dataset: dict = {}
    for rec in report.records:
        by_dataset.setdefault(rec.case.dataset_key(), []).append(rec)
    problems = []
    for key, recs in by_dataset.items():
        sums = [r.checksum for r in recs]
        tol = CHECKSUM_TOL_FACTOR * key[1] ** 2
        spread = max(sums) - min(sums)
        if spread > tol:
            problems.append(
                f"dataset {key}: checksum spread {spread:.3e} exceeds {tol:.3e}"
            )
    return problems


def _scaled_rows(n_rows: int, scale: float) -> int:
    # Shrink row counts but keep at least 1000 rows (or the original, if smaller).
    return max(int(round(n_rows * scale)), min(n_rows, 1000))


def preset_cases(
    name: str, scale: float = 1.0, repeats: int = 3, seed: int = _DEFAULT_SEED
) -> list:
    """Benchmark grids: a 3-dataset size table, row scaling, column scaling,
    and a sparsity sweep.  scale shrinks row counts for desk-size runs."""
    if scale <= 0:
        raise DomainError(f"scale must be positive, got {scale}")
    cases = []
    if name == "table1":
        grid = [(1000, 100), (100000, 100), (100000, 1000)]
        for n, m in grid:
            for backend in BACKENDS:
                cases.append(
                    BenchCase(backend, _scaled_rows(n, scale), m, 0.1, seed, repeats)
                )
    elif name == "rows":
        for n in (1000, 2000, 5000, 10000, 20000, 50000, 100000):
            for backend in BULK_BACKENDS:
                cases.append(
                    BenchCase(backend, _scaled_rows(n, scale), 1000, 0.1, seed, repeats)
                )
    elif name == "cols":
        for m in (100, 200, 500, 1000, 2000):
            for backend in BULK_BACKENDS:
                cases.append(
                    BenchCase(backend, _scaled_rows(100000, scale), m, 0.1, seed, repeats)
                )
    elif name == "sparsity":
        for dens in (0.5, 0.1, 0.05, 0.01, 0.005):
            for backend in ("optimized-dense", "optimized-sparse"):
                cases.append(
                    BenchCase(backend, _scaled_rows(20000, scale), 500, dens, seed, repeats)
                )
    else:
        raise DomainError(f"unknown preset {name!r}")
    return cases


def read_cases(path: str | Path) -> list:
    """Load cases from CSV with columns backend,n_rows,n_cols,density,seed[,repeats]."""
    path = Path(path)
    cases = []
    with path.open("r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        required = {"backend", "n_rows", "n_cols", "density", "seed"}
        if reader.fieldnames is None or not required.issubset(reader.fieldnames):
            raise FormatError(f"{path}: case file needs columns {sorted(required)}")
        for lineno, row in enumerate(reader, start=2):
            try:
                cases.append(
                    BenchCase(
                        backend=row["backend"].strip(),
                        n_rows=int(row["n_rows"]),
                        n_cols=int(row["n_cols"]),
                        density=float(row["density"]),
                        seed=int(row["seed"]),
                        repeats=int(row.get("repeats") or 3),
                    )
                )
            except (ValueError, DomainError) as exc:
                raise FormatError(f"{path}:{lineno}: bad case: {exc}") from None
    if not cases:
        raise FormatError(f"{path}: no cases")
    return cases
