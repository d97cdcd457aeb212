import csv
import io
import json

import pytest

from corrconc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows, f"no rows in output: {text!r}"
    return rows


class TestMoments:
    def test_odd_moment_vanishes_uncorrelated(self, capsys):
        code, out, _ = run_cli(capsys, "moments", "--rho", "0", "--n", "10", "--m-max", "2")
        assert code == 0
        rows = parse_csv(out)
        assert rows[1]["m"] == "1"
        assert float(rows[1]["series"]) == 0.0

    def test_mean_bracket_high_correlation(self, capsys):
        code, out, _ = run_cli(capsys, "moments", "--rho", "0.95", "--n", "10",
                               "--precision", "6")
        assert code == 0
        rows = parse_csv(out)
        value = float(rows[1]["series"])
        assert 0.9012 <= value <= 0.95

    def test_series_agrees_with_quadrature(self, capsys):
        code, out, _ = run_cli(capsys, "moments", "--rho", "0.56", "--n", "10",
                               "--precision", "12")
        assert code == 0
        for row in parse_csv(out):
            assert float(row["series"]) == pytest.approx(float(row["quadrature"]), abs=1e-8)

    def test_numeric_failure_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "moments", "--rho", "0.95", "--n", "10",
                               "--max-terms", "3")
        assert code == 3
        assert "numeric" in err


class TestTable1:
    def test_default_columns(self, capsys):
        code, out, _ = run_cli(capsys, "table1")
        assert code == 0
        rows = parse_csv(out)
        assert [r["e_r"] for r in rows] == ["0.000", "-0.237", "0.531", "-0.712", "0.901"]
        assert [r["ub"] for r in rows] == ["0.471", "0.449", "0.359", "0.264", "0.109"]
        assert [r["sd_r"] for r in rows] == ["0.333", "0.312", "0.229", "0.146", "0.033"]

    def test_smallest_sample_mean_column(self, capsys):
        code, out, _ = run_cli(capsys, "table1", "--n", "3", "--reps", "200")
        assert code == 0
        rows = parse_csv(out)
        assert rows[4]["e_r"] == "0.776"

    def test_simulated_columns_close_to_closed_forms(self, capsys):
        code, out, _ = run_cli(capsys, "table1", "--reps", "10000", "--seed", "2023")
        assert code == 0
        for row in parse_csv(out):
            assert abs(float(row["r_bar"])) <= 1.0
            assert float(row["s_r"]) >= 0.0


class TestCoverage:
    def test_monotone_columns(self, capsys):
        code, out, _ = run_cli(capsys, "coverage", "--reps", "4000")
        assert code == 0
        for row in parse_csv(out):
            assert float(row["c0_pct"]) >= float(row["c1_pct"]) >= float(row["c2_pct"])

    def test_clipped_flags_for_wide_intervals(self, capsys):
        code, out, _ = run_cli(capsys, "coverage", "--reps", "500")
        assert code == 0
        rows = parse_csv(out)
        assert rows[0]["c0_clipped"] == "true"
        assert rows[0]["c0_lower"].startswith("-1.7")

    def test_large_sample_tight_interval_coverage(self, capsys):
        code, out, _ = run_cli(capsys, "coverage", "--n", "100", "--reps", "10000",
                               "--seed", "2023", "--rho-list", "0.95")
        assert code == 0
        rows = parse_csv(out)
        assert float(rows[0]["c2_pct"]) == pytest.approx(98.8, abs=1.0)

    def test_worker_count_does_not_change_bytes(self, capsys):
        _, out1, _ = run_cli(capsys, "coverage", "--reps", "6000", "--seed", "11",
                             "--workers", "1")
        _, out2, _ = run_cli(capsys, "coverage", "--reps", "6000", "--seed", "11",
                             "--workers", "3")
        assert out1 == out2


class TestBounds:
    def test_tiny_t_clamps_to_one(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--n", "10", "--t", "0.0001")
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 4
        assert all(r["clamped"] == "1.000" for r in rows)

    def test_conservative_interval(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--rho", "0", "--n", "10",
                               "--alpha", "0.05", "--kind", "c0")
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 1
        assert rows[0]["t"] == "1.718"
        assert rows[0]["clipped"] == "true"

    def test_tightest_interval_strong_correlation(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--rho", "0.95", "--n", "10",
                               "--alpha", "0.05", "--kind", "c2")
        assert code == 0
        rows = parse_csv(out)
        assert rows[0]["t"] == "0.084"

    def test_infeasible_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "bounds", "--rho", "0", "--n", "10",
                               "--alpha", "2.5")
        assert code == 4
        assert "infeasible" in err

    def test_usage_errors(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["bounds", "--n", "10"])  # neither --t nor --alpha
        assert excinfo.value.code == 2
        code, _, err = run_cli(capsys, "bounds", "--rho", "1.5", "--n", "10", "--t", "0.1")
        assert code == 2
        assert "invalid" in err


class TestDensity:
    def test_flat_density_point(self, capsys):
        code, out, _ = run_cli(capsys, "density", "--rho", "0", "--n", "4",
                               "--r", "0.3", "--precision", "6")
        assert code == 0
        rows = parse_csv(out)
        assert rows[0]["density"] == "0.500000"

    def test_grid_row_count(self, capsys):
        code, out, _ = run_cli(capsys, "density", "--rho", "0.56", "--n", "10",
                               "--grid", "9")
        assert code == 0
        assert len(parse_csv(out)) == 9


class TestOutputHandling:
    def test_repeat_runs_are_byte_identical(self, capsys):
        args = ("coverage", "--reps", "3000", "--seed", "7")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2

    def test_out_flag_writes_file(self, capsys, tmp_path):
        target = tmp_path / "t.csv"
        code, out, _ = run_cli(capsys, "table1", "--reps", "300", "--out", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("rho,e_r,")

    def test_csv_round_trip(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--rho", "0.56", "--n", "10",
                               "--alpha", "0.05", "--precision", "9")
        rows = parse_csv(out)
        from corrconc import ModelParams, TailBoundKind, coverage_interval
        iv = coverage_interval(TailBoundKind.CONSERVATIVE, ModelParams(rho=0.56, n=10), 0.05)
        got = next(r for r in rows if r["kind"] == "c0")
        assert float(got["t"]) == pytest.approx(iv.half_width, abs=5e-10)

    def test_markdown_format(self, capsys):
        code, out, _ = run_cli(capsys, "density", "--rho", "0", "--n", "10",
                               "--r", "0.25", "--format", "markdown")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("| r")
        assert set(lines[1]) <= {"|", "-"}

    def test_jsonl_format(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--n", "10", "--t", "0.5",
                               "--format", "jsonl")
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert len(records) == 4
        assert list(records[0]) == ["kind", "raw", "clamped"]
        assert all(isinstance(r["raw"], float) for r in records)

    def test_precision_validation(self, capsys):
        code, _, err = run_cli(capsys, "table1", "--reps", "300", "--precision", "0")
        assert code == 2

    def test_env_seed_override(self, capsys, monkeypatch):
        monkeypatch.setenv("CORRCONC_SEED", "404")
        _, out_env, _ = run_cli(capsys, "table1", "--reps", "2000")
        monkeypatch.delenv("CORRCONC_SEED")
        _, out_explicit, _ = run_cli(capsys, "table1", "--reps", "2000", "--seed", "404")
        assert out_env == out_explicit
        monkeypatch.setenv("CORRCONC_SEED", "404")
        _, out_flag_wins, _ = run_cli(capsys, "table1", "--reps", "2000", "--seed", "2023")
        _, out_default, _ = run_cli(capsys, "table1", "--reps", "2000")
        assert out_flag_wins != out_default
