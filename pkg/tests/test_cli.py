"""Command-line behavior: output shapes, exit codes, JSON contract."""

import json
import subprocess
import sys

import pytest

from arcpi import cli
from arcpi.errors import ReferenceIntegrityError


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


class TestPiCommand:
    def test_coarse_text_report(self, capsys):
        code, out, _ = run_cli(
            capsys, "pi", "--method", "eq17", "-L", "1", "-M", "1",
            "--digits", "5")
        assert code == 0
        lines = out.splitlines()
        assert lines[1] == "3.20000"
        assert "matched digits: 1" in out
        assert "elapsed:" in out

    def test_json_schema(self, capsys):
        record = run_json(
            capsys, "pi", "--method", "eq18", "-L", "2", "-M", "3",
            "--digits", "12")
        assert set(record) == {
            "method", "L", "M", "digits_requested", "approx_decimal",
            "matched_digits", "elapsed_ms"}
        # numeric fields travel as decimal strings
        assert all(isinstance(v, str) for v in record.values())
        assert record["method"] == "eq18"
        assert record["approx_decimal"].startswith("3.1416")
        assert int(record["matched_digits"]) == 4
        float(record["elapsed_ms"])

    def test_machin_method(self, capsys):
        record = run_json(capsys, "pi", "--method", "machin",
                          "--digits", "40")
        assert int(record["matched_digits"]) == 41

    def test_workers_flag(self, capsys):
        serial = run_json(capsys, "pi", "-L", "6", "-M", "6", "--digits", "8")
        parallel = run_json(capsys, "pi", "-L", "6", "-M", "6",
                            "--digits", "8", "--workers", "2")
        assert serial["approx_decimal"] == parallel["approx_decimal"]

    def test_worker_env_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("ARCPI_MAX_WORKERS", "1")
        record = run_json(capsys, "pi", "-L", "4", "-M", "4",
                          "--digits", "8", "--workers", "64")
        assert record["approx_decimal"].startswith("3.141")

    def test_digits_beyond_reference_is_domain_error(self, capsys):
        code, _, err = run_cli(capsys, "pi", "-L", "1", "-M", "1",
                               "--digits", "1001")
        assert code == 3
        assert "error:" in err


class TestArctanCommand:
    def test_exact_output(self, capsys):
        code, out, _ = run_cli(capsys, "arctan", "--x", "1",
                               "-L", "1", "-M", "2", "--exact")
        assert code == 0
        assert out.splitlines()[0] == "296/375"

    def test_zero_argument_prints_bare_zero(self, capsys):
        code, out, _ = run_cli(capsys, "arctan", "--x", "0", "-L", "5",
                               "-M", "5")
        assert code == 0
        assert out.splitlines()[0] == "0"

    def test_negative_exact(self, capsys):
        code, out, _ = run_cli(capsys, "arctan", "--x", "-1",
                               "-L", "1", "-M", "1", "--exact")
        assert code == 0
        assert out.splitlines()[0] == "-4/5"

    def test_small_argument_reports_reference_agreement(self, capsys):
        code, out, _ = run_cli(capsys, "arctan", "--x", "1/5",
                               "-L", "10", "-M", "10", "--digits", "12")
        assert code == 0
        assert "matched digits vs series reference:" in out

    def test_json_fields(self, capsys):
        record = run_json(capsys, "arctan", "--x", "1/5", "-L", "4",
                          "-M", "4", "--digits", "10", "--exact")
        assert record["x"] == "1/5"
        assert "/" in record["exact"]
        assert record["approx_decimal"].startswith("0.19739")
        assert int(record["matched_digits"]) > 0

    def test_decimal_input_rejected(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["arctan", "--x", "0.2"])
        assert exc.value.code == 2
        capsys.readouterr()


class TestDerivCommand:
    def test_exact_formula(self, capsys):
        code, out, _ = run_cli(capsys, "deriv", "-m", "2", "--t", "1",
                               "--formula", "eq7")
        assert code == 0
        assert out.splitlines()[0] == "-1/2"

    def test_floating_formula(self, capsys):
        code, out, _ = run_cli(capsys, "deriv", "-m", "1", "--t", "0",
                               "--formula", "eq2")
        assert code == 0
        assert out.splitlines()[0] == "1.0"

    def test_oracle_with_comparison(self, capsys):
        code, out, _ = run_cli(capsys, "deriv", "-m", "6", "--t", "1/3",
                               "--formula", "oracle", "--compare", "eq7")
        assert code == 0
        assert "deviation vs eq7: 0" in out

    def test_exact_vs_floating_comparison(self, capsys):
        record = run_json(capsys, "deriv", "-m", "3", "--t", "1/2",
                          "--formula", "eq7", "--compare", "eq2")
        assert float(record["deviation"]) < 1e-10

    def test_order_zero_is_domain_error(self, capsys):
        code, _, err = run_cli(capsys, "deriv", "-m", "0", "--t", "1")
        assert code == 3
        assert "order" in err

    def test_floating_order_cap(self, capsys):
        code, _, _ = run_cli(capsys, "deriv", "-m", "25", "--t", "1",
                             "--formula", "eq2")
        assert code == 3


class TestQuadCommand:
    def test_monomial_with_error_report(self, capsys):
        code, out, _ = run_cli(capsys, "quad", "--integrand", "monomial",
                               "--degree", "4", "-L", "3", "-M", "6",
                               "--exact")
        assert code == 0
        lines = out.splitlines()
        assert lines[1] == "1/5"
        assert "abs error: 0" in out

    def test_kernel_value(self, capsys):
        record = run_json(capsys, "quad", "-L", "2", "-M", "4",
                          "--rule", "eq10", "--digits", "12")
        assert record["value"].startswith("0.78539")

    def test_rules_give_same_value(self, capsys):
        a = run_json(capsys, "quad", "-L", "3", "-M", "5", "--exact")
        b = run_json(capsys, "quad", "-L", "3", "-M", "5", "--rule", "eq10",
                     "--exact")
        assert a["value"] == b["value"]


class TestBenchCommand:
    def test_ladder_rows(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--suite", "pi-ladder",
                               "--sizes", "2,3", "--digits", "30")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split()[:2] == ["method", "L"]
        assert len(lines) == 1 + 2 * 3  # header, two sizes, three methods

    def test_ladder_json_records(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--suite", "pi-ladder",
                               "--sizes", "2", "--digits", "20",
                               "--format", "json")
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert [r["method"] for r in records] == ["eq17", "eq18", "gauss"]
        for r in records:
            assert set(r) == {"method", "L", "M", "matched_digits",
                              "elapsed_ms"}

    def test_deriv_paths(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--suite", "deriv-paths",
                               "--sizes", "6", "--format", "json")
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert [r["method"] for r in records] == ["eq5", "oracle"]

    def test_repetitions(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--suite", "pi-ladder",
                               "--sizes", "2", "--digits", "20",
                               "--repetitions", "3")
        assert code == 0


class TestSelftest:
    def test_passes(self, capsys):
        code, out, _ = run_cli(capsys, "selftest")
        assert code == 0
        assert "all checks passed" in out
        assert "FAIL" not in out


class TestErrorPaths:
    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["integrate"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_zero_L_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["pi", "-L", "0"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_reference_integrity_exit_code(self, capsys, monkeypatch):
        def broken(*args, **kwargs):
            raise ReferenceIntegrityError("digits disagree")
        monkeypatch.setattr(cli, "measure", broken)
        code, _, err = run_cli(capsys, "pi", "-L", "1", "-M", "1",
                               "--digits", "5")
        assert code == 4
        assert "digits disagree" in err


def test_console_script_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "arcpi.cli", "pi", "-L", "1", "-M", "1",
         "--digits", "5"],
        capture_output=True, text=True, timeout=60)
    assert out.returncode == 0
    assert "3.20000" in out.stdout
