"""Scenario runner: schema validation, outputs, exit codes, determinism."""

import csv
import json

import pytest

from naads.cli import EXIT_INCONCLUSIVE, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main


def _scenario(tmp_path, payload, name="scenario.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


class TestRun:
    def test_certified_expectation(self, tmp_path, capsys):
        path = _scenario(tmp_path, {
            "family": "circle_ex4",
            "task": "minimality_certificate",
            "params": {"eps": "1/8", "order_cap": 9, "depth": 8},
            "expect": "Certified",
        })
        assert main(["--no-timestamp", "run", path]) == EXIT_OK
        out = capsys.readouterr().out
        assert "verdict: Certified" in out
        assert "param.eps: 1/8" in out

    def test_expectation_mismatch(self, tmp_path):
        path = _scenario(tmp_path, {
            "family": "circle_settling",
            "task": "periodicity_check",
            "params": {"x": 0.3, "r": 2},
            "expect": "Certified",
        })
        assert main(["--no-timestamp", "run", path]) == EXIT_MISMATCH

    def test_report_output_file(self, tmp_path, capsys):
        out_file = tmp_path / "report.txt"
        path = _scenario(tmp_path, {
            "family": "circle_harmonic",
            "task": "periodicity_check",
            "params": {"x": 0.1, "r": 2},
            "outputs": [{"kind": "report", "path": str(out_file)}],
        })
        assert main(["--no-timestamp", "run", path]) == EXIT_OK
        text = out_file.read_text()
        assert text.startswith("family: circle_harmonic\ntask: periodicity_check\n")
        assert "schema: naads-report/1" in text
        assert "timestamp:" not in text

    def test_timestamp_present_by_default(self, tmp_path):
        out_file = tmp_path / "report.txt"
        path = _scenario(tmp_path, {
            "family": "circle_harmonic",
            "task": "periodicity_check",
            "params": {"x": 0.1, "r": 2},
            "outputs": [{"kind": "report", "path": str(out_file)}],
        })
        assert main(["run", path]) == EXIT_OK
        assert "timestamp:" in out_file.read_text()

    def test_orbit_csv(self, tmp_path):
        out_file = tmp_path / "orbit.csv"
        path = _scenario(tmp_path, {
            "family": "example2_powers",
            "task": "return_time_set",
            "params": {"x": 0.5, "eps": 0.1, "N": 5},
            "outputs": [{"kind": "orbit_csv", "path": str(out_file)}],
        })
        assert main(["--no-timestamp", "run", path]) == EXIT_OK
        with open(out_file) as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["n", "x"]
        assert len(rows) == 12
        assert rows[1][0] == "-5"
        assert rows[6] == ["0", "0.5"]

    def test_return_raster(self, tmp_path):
        out_file = tmp_path / "raster.csv"
        path = _scenario(tmp_path, {
            "family": "circle_settling",
            "task": "return_time_set",
            "params": {"x": 0, "eps": 0.3, "N": 20},
            "outputs": [{"kind": "return_raster", "path": str(out_file)}],
        })
        assert main(["--no-timestamp", "run", path]) == EXIT_OK
        with open(out_file) as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["n", "is_return"]
        marked = {int(n) for n, flag in rows[1:] if flag == "1"}
        assert marked == {-3, -2, 0, 2, 3}

    def test_modulus_curve(self, tmp_path):
        out_file = tmp_path / "modulus.csv"
        path = _scenario(tmp_path, {
            "family": "circle_harmonic",
            "task": "equicontinuity_modulus",
            "params": {"eps": 0.1, "N": 10},
            "outputs": [{"kind": "modulus_curve", "path": str(out_file)}],
        })
        assert main(["--no-timestamp", "run", path]) == EXIT_OK
        with open(out_file) as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["N", "delta"]
        assert [r[0] for r in rows[1:]] == ["10", "20", "40"]
        assert all(r[1] == "0.1" for r in rows[1:])

    def test_inline_rotation_family(self, tmp_path, capsys):
        path = _scenario(tmp_path, {
            "family": {"kind": "rotations", "angles": ["1/2"], "name": "half"},
            "task": "periodicity_check",
            "params": {"x": 0.2, "r": 2},
            "expect": "Certified",
        })
        assert main(["--no-timestamp", "run", path]) == EXIT_OK
        assert "family: half" in capsys.readouterr().out

    def test_inline_power_family(self, tmp_path):
        path = _scenario(tmp_path, {
            "family": {"kind": "powers", "exponents": ["2", "1/2"]},
            "task": "periodicity_check",
            "params": {"x": 0.3, "r": 2},
            "expect": "EvidenceFor",
        })
        assert main(["--no-timestamp", "run", path]) == EXIT_OK

    def test_budget_abort_exit_code(self, tmp_path):
        # block size pushes the blocked horizon below the scan window
        path = _scenario(tmp_path, {
            "family": {"kind": "rotations", "angles": ["1/3"]},
            "task": "r_transitivity_check",
            "params": {"r": 20000, "N": 120},
        })
        assert main(["--no-timestamp", "run", path]) == EXIT_INCONCLUSIVE


class TestSchemaErrors:
    def test_missing_file(self, tmp_path):
        assert main(["run", str(tmp_path / "nope.json")]) == EXIT_USAGE

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert main(["run", str(path)]) == EXIT_USAGE

    def test_unknown_task(self, tmp_path):
        path = _scenario(tmp_path, {"family": "identity", "task": "frobnicate"})
        assert main(["run", path]) == EXIT_USAGE

    def test_unknown_family(self, tmp_path):
        path = _scenario(tmp_path, {
            "family": "nope", "task": "periodicity_check",
            "params": {"x": 0, "r": 1},
        })
        assert main(["run", path]) == EXIT_USAGE

    def test_unknown_keys_rejected(self, tmp_path):
        path = _scenario(tmp_path, {
            "family": "identity", "task": "periodicity_check",
            "params": {"x": 0, "r": 1}, "bogus": 1,
        })
        assert main(["run", path]) == EXIT_USAGE

    def test_missing_required_param(self, tmp_path):
        path = _scenario(tmp_path, {
            "family": "identity", "task": "periodicity_check", "params": {"x": 0},
        })
        assert main(["run", path]) == EXIT_USAGE

    def test_bad_output_kind(self, tmp_path):
        path = _scenario(tmp_path, {
            "family": "identity", "task": "periodicity_check",
            "params": {"x": 0, "r": 1},
            "outputs": [{"kind": "hologram", "path": "x"}],
        })
        assert main(["run", path]) == EXIT_USAGE

    def test_expect_on_non_verdict_task(self, tmp_path):
        path = _scenario(tmp_path, {
            "family": "identity", "task": "return_time_set",
            "params": {"x": 0, "eps": 0.1, "N": 5}, "expect": "Certified",
        })
        assert main(["run", path]) == EXIT_USAGE

    def test_unknown_expected_verdict(self, tmp_path):
        path = _scenario(tmp_path, {
            "family": "identity", "task": "periodicity_check",
            "params": {"x": 0, "r": 1}, "expect": "Probably",
        })
        assert main(["run", path]) == EXIT_USAGE


class TestCheckAndCorpus:
    def test_corpus_list(self, capsys):
        assert main(["corpus", "list"]) == EXIT_OK
        out = capsys.readouterr().out
        for name in ("identity", "circle_ex4", "interval_square_sqrt"):
            assert name in out

    def test_check_subcommand(self, capsys):
        code = main([
            "--no-timestamp", "check", "circle_settling", "return_time_set",
            "--param", "x=0", "--param", "eps=0.3", "--param", "N=20",
        ])
        assert code == EXIT_OK
        assert "times: [-3, -2, 0, 2, 3]" in capsys.readouterr().out

    def test_check_with_expectation(self):
        code = main([
            "--no-timestamp", "check", "circle_harmonic", "periodicity_check",
            "--param", "x=0.1", "--param", "r=2", "--expect", "Certified",
        ])
        assert code == EXIT_OK

    def test_check_bad_param_syntax(self):
        code = main(["check", "identity", "periodicity_check", "--param", "x0.5"])
        assert code == EXIT_USAGE

    def test_no_command(self):
        assert main([]) == EXIT_USAGE

    def test_seed_flag_accepted(self):
        code = main([
            "--no-timestamp", "--seed", "7", "check", "circle_harmonic",
            "periodicity_check", "--param", "x=0.1", "--param", "r=2",
        ])
        assert code == EXIT_OK


class TestDeterminism:
    def test_byte_identical_reports(self, tmp_path):
        payload = {
            "family": "circle_ex4",
            "task": "minimality_certificate",
            "params": {"eps": "1/8", "order_cap": 9, "depth": 8},
        }
        outputs = []
        for i in range(2):
            out_file = tmp_path / f"rep{i}.txt"
            path = _scenario(tmp_path, dict(
                payload, outputs=[{"kind": "report", "path": str(out_file)}]
            ), name=f"s{i}.json")
            assert main(["--no-timestamp", "run", path]) == EXIT_OK
            outputs.append(out_file.read_bytes())
        assert outputs[0] == outputs[1]
