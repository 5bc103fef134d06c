"""Command-line interface: outputs, formats, exit codes, determinism."""

import csv
import json
import subprocess
import sys

import pytest

from circenergy import __version__
from circenergy.cli import CSV_HEADER, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEnergyCommand:
    def test_closed_k5(self, capsys):
        code, out, _ = run_cli(capsys, "energy", "--n", "5", "--gamma", "2")
        assert code == 0
        record = json.loads(out)
        assert record["n"] == 5
        assert record["gamma"] == 2
        assert record["method"] == "closed"
        assert record["energy"] == 8.0
        assert record["kn_energy"] == 8.0
        assert record["hyperenergetic"] is False
        assert record["version"] == __version__

    def test_direct(self, capsys):
        code, out, _ = run_cli(
            capsys, "energy", "--n", "8", "--gamma", "3", "--method", "direct"
        )
        assert code == 0
        assert json.loads(out)["energy"] == pytest.approx(8.0, abs=1e-12)

    def test_matrix(self, capsys):
        code, out, _ = run_cli(
            capsys, "energy", "--n", "8", "--gamma", "3", "--method", "matrix"
        )
        assert code == 0
        assert json.loads(out)["energy"] == pytest.approx(8.0, abs=1e-8)

    def test_constraint_violation_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "energy", "--n", "6", "--gamma", "3")
        assert code == 2
        assert "2*gamma+1" in err
        assert "method=closed" in err

    def test_missing_flag_exits_2(self, capsys):
        assert main(["energy", "--n", "5"]) == 2

    def test_unknown_command_exits_2(self, capsys):
        assert main(["energise"]) == 2


class TestKnhCommand:
    def test_n3(self, capsys):
        code, out, _ = run_cli(capsys, "knh", "--n", "3")
        assert code == 0
        record = json.loads(out)
        assert record["energy"] == pytest.approx(0.0, abs=1e-12)
        assert record["hyperenergetic"] is False

    def test_n4_direct(self, capsys):
        code, out, _ = run_cli(capsys, "knh", "--n", "4", "--method", "direct")
        assert code == 0
        assert json.loads(out)["energy"] == pytest.approx(4.0, abs=1e-12)

    def test_n10_hyperenergetic(self, capsys):
        code, out, _ = run_cli(capsys, "knh", "--n", "10")
        assert code == 0
        assert json.loads(out)["hyperenergetic"] is True

    def test_small_n_exits_2(self, capsys):
        assert main(["knh", "--n", "2"]) == 2


class TestSweepCommand:
    def test_csv_file_output(self, capsys, tmp_path):
        out_path = tmp_path / "fig1a.csv"
        code, out, _ = run_cli(
            capsys,
            "sweep", "--vary", "n", "--gamma", "8",
            "--from", "17", "--to", "300", "--out", str(out_path),
        )
        assert code == 0
        assert out.startswith("rows=284")
        lines = out_path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == ",".join(CSV_HEADER)
        assert len(lines) == 285

    def test_csv_parses_back_with_row_invariants(self, capsys, tmp_path):
        out_path = tmp_path / "rows.csv"
        code, _, _ = run_cli(
            capsys,
            "sweep", "--vary", "n", "--gamma", "2",
            "--from", "5", "--to", "60", "--out", str(out_path),
        )
        assert code == 0
        with out_path.open(encoding="utf-8", newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 56
        for raw in rows:
            n = int(raw["n"])
            closed = float(raw["energy_closed"])
            direct = float(raw["energy_direct"])
            diff = float(raw["abs_diff"])
            # 15-significant-digit serialization perturbs the difference
            assert diff == pytest.approx(abs(closed - direct), abs=1e-12)
            assert float(raw["kn_energy"]) == 2.0 * (n - 1)
            assert raw["hyperenergetic"] in ("true", "false")
            assert (raw["hyperenergetic"] == "true") is (
                closed > float(raw["kn_energy"])
            )

    def test_stdout_rows_and_stderr_summary(self, capsys):
        code, out, err = run_cli(capsys, "sweep", "--vary", "knh", "--from", "3", "--to", "12")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == ",".join(CSV_HEADER)
        assert len(lines) == 11
        assert err.startswith("rows=10")
        flags = [line.split(",")[-1] for line in lines[1:]]
        assert flags == ["false"] * 7 + ["true"] * 3  # flips at n=10

    def test_json_format(self, capsys, tmp_path):
        out_path = tmp_path / "rows.json"
        code, _, _ = run_cli(
            capsys,
            "sweep", "--vary", "gamma", "--n", "30",
            "--from", "2", "--to", "10", "--out", str(out_path),
            "--format", "json",
        )
        assert code == 0
        rows = json.loads(out_path.read_text(encoding="utf-8"))
        assert len(rows) == 9
        assert set(rows[0]) == set(CSV_HEADER)
        assert [row["gamma"] for row in rows] == list(range(2, 11))

    def test_missing_fixed_parameter_exits_2(self, capsys):
        assert main(["sweep", "--vary", "n", "--from", "5", "--to", "10"]) == 2
        assert main(["sweep", "--vary", "gamma", "--from", "2", "--to", "5"]) == 2

    def test_bad_range_exits_2(self, capsys):
        code, _, err = run_cli(
            capsys, "sweep", "--vary", "knh", "--from", "10", "--to", "3"
        )
        assert code == 2
        assert "range" in err

    def test_unwritable_path_exits_3(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys,
            "sweep", "--vary", "knh", "--from", "3", "--to", "5",
            "--out", str(tmp_path / "missing-dir" / "rows.csv"),
        )
        assert code == 3
        assert err.startswith("error:")

    def test_byte_identical_reruns(self, capsys):
        argv = ["sweep", "--vary", "knh", "--from", "3", "--to", "40"]
        first = run_cli(capsys, *argv)
        second = run_cli(capsys, *argv)
        assert first == second


class TestVerifyCommand:
    def test_minimal_grid(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--gamma-max", "2", "--n-max", "5")
        assert code == 0
        assert "checked=1" in out
        assert "failures=0" in out

    def test_passing_grid(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--gamma-max", "5", "--n-max", "60", "--tol", "1e-9"
        )
        assert code == 0
        assert "failures=0" in out

    def test_zero_tolerance_exits_1(self, capsys):
        code, out, err = run_cli(
            capsys, "verify", "--gamma-max", "3", "--n-max", "40", "--tol", "0"
        )
        assert code == 1
        assert "failures=0" not in out
        assert err  # failing cells are listed

    def test_bad_flags_exit_2(self, capsys):
        assert main(["verify", "--gamma-max", "1", "--n-max", "5"]) == 2


class TestRootsCommand:
    def test_gamma3(self, capsys):
        code, out, _ = run_cli(capsys, "roots", "--gamma", "3")
        assert code == 0
        record = json.loads(out)
        assert record["gamma"] == 3
        assert record["count"] == 3
        assert [root["angle"] for root in record["roots"]] == [
            "1/4 pi", "1/2 pi", "3/4 pi",
        ]
        assert all(root["residual"] < 1e-12 for root in record["roots"])

    def test_gamma2_includes_pi(self, capsys):
        code, out, _ = run_cli(capsys, "roots", "--gamma", "2")
        assert code == 0
        record = json.loads(out)
        assert [root["angle"] for root in record["roots"]] == ["1/3 pi", "1 pi"]
        assert record["roots"][-1]["radians"] == pytest.approx(3.14159265358979)

    def test_gamma1_exits_2(self, capsys):
        assert main(["roots", "--gamma", "1"]) == 2


class TestEntryPoint:
    def test_module_invocation(self):
        result = subprocess.run(
            [sys.executable, "-m", "circenergy.cli", "--version"],
            capture_output=True,
            text=True,
        )
        assert result.returncode == 0
        assert result.stdout.strip() == f"circenergy {__version__}"
