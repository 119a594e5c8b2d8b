"""Benchmark harness: record schema, checksums, presets, case files."""

import numpy as np
import pytest

from mimatrix.bench import (
    BACKENDS,
    BenchCase,
    REPORT_HEADER,
    check_consistency,
    emit_table,
    preset_cases,
    read_cases,
    run_case,
    run_grid,
    summary_table,
)
from mimatrix.errors import DomainError, FormatError


def _small_grid(repeats=2):
    return [BenchCase(b, 200, 8, 0.3, seed=5, repeats=repeats) for b in BACKENDS]


class TestRunCase:
    def test_record_count_and_fields(self):
        case = BenchCase("optimized-dense", 100, 5, 0.5, seed=1, repeats=4)
        records = run_case(case)
        assert len(records) == 4
        assert [r.rep for r in records] == [0, 1, 2, 3]
        assert all(r.seconds >= 0 for r in records)
        assert all(np.isfinite(r.checksum) for r in records)

    def test_checksum_stable_across_reps(self):
        records = run_case(BenchCase("naive-pairwise", 80, 4, 0.4, repeats=3))
        sums = {r.checksum for r in records}
        assert len(sums) == 1

    def test_bad_backend(self):
        with pytest.raises(DomainError):
            BenchCase("gpu", 10, 2, 0.5)

    def test_bad_repeats(self):
        with pytest.raises(DomainError):
            BenchCase("optimized-dense", 10, 2, 0.5, repeats=0)


class TestGrid:
    def test_cross_backend_consistency(self):
        report = run_grid(_small_grid())
        assert check_consistency(report) == []

    def test_report_determinism(self):
        cases = _small_grid(repeats=1)
        a = run_grid(cases)
        b = run_grid(cases)
        assert [r.checksum for r in a.records] == [r.checksum for r in b.records]
        assert [r.case for r in a.records] == [r.case for r in b.records]

    def test_high_density_sparse_allowed(self):
        records = run_case(BenchCase("optimized-sparse", 120, 6, 0.95, repeats=1))
        assert len(records) == 1

    def test_empty_grid_rejected(self):
        with pytest.raises(DomainError):
            run_grid([])

    def test_single_case_grid(self):
        report = run_grid([BenchCase("optimized-dense", 64, 3, 0.5, repeats=1)])
        table = summary_table(report)
        assert len(table.splitlines()) == 2  # header plus one dataset row

    def test_naive_is_slowest_backend(self):
        cases = [BenchCase(b, 1000, 60, 0.1, seed=2, repeats=1) for b in BACKENDS]
        report = run_grid(cases)
        medians = report.median_seconds()
        naive = medians[("naive-pairwise", 1000, 60, 0.1, 2)]
        others = [v for k, v in medians.items() if k[0] != "naive-pairwise"]
        assert all(naive > t for t in others)


class TestReportOutput:
    def test_emit_table_schema(self, tmp_path):
        report = run_grid(_small_grid(repeats=1))
        out = tmp_path / "report.csv"
        emit_table(report, out)
        lines = out.read_text().splitlines()
        assert lines[0] == ",".join(REPORT_HEADER)
        assert len(lines) == 1 + len(report.records)
        first = lines[1].split(",")
        assert first[0] in BACKENDS
        assert int(first[1]) == 200

    def test_summary_pivot_shape(self):
        report = run_grid(_small_grid(repeats=1))
        lines = summary_table(report).splitlines()
        header = lines[0].split(",")
        assert header[:4] == ["n_rows", "n_cols", "density", "seed"]
        assert set(header[4:]) == set(BACKENDS)
        assert len(lines) == 2  # one dataset


class TestPresets:
    def test_table1_scaled(self):
        cases = preset_cases("table1", scale=0.1)
        shapes = sorted({(c.n_rows, c.n_cols) for c in cases})
        assert shapes == [(1000, 100), (10000, 100), (10000, 1000)]
        assert {c.backend for c in cases} == set(BACKENDS)

    def test_sparsity_densities(self):
        cases = preset_cases("sparsity", scale=0.05)
        assert sorted({c.density for c in cases}) == [0.005, 0.01, 0.05, 0.1, 0.5]
        assert {c.backend for c in cases} == {"optimized-dense", "optimized-sparse"}

    def test_rows_excludes_naive(self):
        cases = preset_cases("rows", scale=0.01)
        assert "naive-pairwise" not in {c.backend for c in cases}

    def test_unknown_preset(self):
        with pytest.raises(DomainError):
            preset_cases("everything")

    def test_bad_scale(self):
        with pytest.raises(DomainError):
            preset_cases("table1", scale=0.0)


class TestCaseFiles:
    def test_round_trip(self, tmp_path):
        p = tmp_path / "cases.csv"
        p.write_text(
            "backend,n_rows,n_cols,density,seed,repeats\n"
            "optimized-dense,100,5,0.5,1,2\n"
            "naive-pairwise,100,5,0.5,1,2\n"
        )
        cases = read_cases(p)
        assert len(cases) == 2
        assert cases[0].backend == "optimized-dense"
        assert cases[1].repeats == 2

    def test_missing_columns(self, tmp_path):
        p = tmp_path / "cases.csv"
        p.write_text("backend,n_rows\noptimized-dense,100\n")
        with pytest.raises(FormatError):
            read_cases(p)

    def test_bad_value(self, tmp_path):
        p = tmp_path / "cases.csv"
        p.write_text("backend,n_rows,n_cols,density,seed\noptimized-dense,ten,5,0.5,1\n")
        with pytest.raises(FormatError, match="cases.csv:2"):
            read_cases(p)

    def test_empty(self, tmp_path):
        p = tmp_path / "cases.csv"
        p.write_text("backend,n_rows,n_cols,density,seed\n")
        with pytest.raises(FormatError):
            read_cases(p)
