import csv
import io
import json

import pytest

from quatcs.cli import main
from quatcs.report import Check, Config, ConfigError, SuiteReport, emit_report, run_suite


def test_quantize_suite_passes_with_defaults(capsys):
    assert main(["--suite", "quantize-canonical"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert list(doc)[:5] == ["suite", "config", "checks", "passed", "wall_ms"]
    assert doc["passed"] and doc["checks"]


def test_unknown_suite_is_usage_error(capsys):
    assert main(["--suite", "bogus"]) == 2
    assert "unknown suite" in capsys.readouterr().err


def test_bad_flag_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["--no-such-flag"])
    assert exc.value.code == 2


@pytest.mark.parametrize("args", [["--trunc-dim", "two"], ["--trunc-dim", "1"],
                                  ["--tolerance", "-1"], ["--radial-order", "0"]])
def test_config_errors(args, capsys):
    assert main(["--suite", "slice"] + args) == 3
    assert "config error" in capsys.readouterr().err


def test_failing_check_gives_exit_one(tmp_path):
    # five radial nodes cannot integrate the N=16 ladder entries exactly
    out = tmp_path / "r.json"
    assert main(["--suite", "quantize-canonical", "--radial-order", "5", "--output", str(out)]) == 1
    assert json.loads(out.read_text())["passed"] is False


def test_all_suites_tiny_config():
    rep = run_suite("all", Config(trunc_dim=4))
    assert len(rep.suites) >= 8
    assert rep.passed


def test_reports_are_deterministic():
    cfg = Config(trunc_dim=5, seed=3)
    a, b = run_suite("core-algebra", cfg), run_suite("core-algebra", cfg)
    a.wall_ms = b.wall_ms = 0.0
    assert emit_report(a, "json") == emit_report(b, "json")
    c = run_suite("core-algebra", Config(trunc_dim=5, seed=4))
    c.wall_ms = 0.0
    assert emit_report(c, "json") != emit_report(a, "json")


def test_json_round_trip_is_bitwise():
    rep = run_suite("cs", Config(trunc_dim=5))
    doc = json.loads(emit_report(rep, "json"))
    for c, d in zip(rep.checks, doc["checks"]):
        assert d["max_error"] == c.max_error and d["tolerance"] == c.tolerance


def test_empty_report_is_valid():
    rep = SuiteReport("empty", {})
    doc = json.loads(emit_report(rep, "json"))
    assert doc["checks"] == [] and doc["passed"] is True
    rows = list(csv.reader(io.StringIO(emit_report(rep, "csv").decode())))
    assert len(rows) == 1


def test_csv_has_one_row_per_check():
    rep = run_suite("slice", Config(trunc_dim=4))
    rows = list(csv.reader(io.StringIO(emit_report(rep, "csv").decode())))
    assert rows[0] == ["suite", "id", "anchor", "max_error", "tolerance", "passed", "detail"]
    assert len(rows) == len(rep.checks) + 1


def test_text_format_and_quaternion_serialisation():
    from quatcs import Quaternion
    from quatcs.report import _json
    assert _json(Quaternion(1.0, 0.1, -2.0, 0.0)) == "[1, 0.10000000000000001, -2, 0]"
    rep = SuiteReport("x", {}, [Check("a", "anchor", 0.5, 1.0), Check("b", "anchor", 2.0, 1.0)])
    text = emit_report(rep, "text").decode()
    assert "FAIL" in text and "[PASS] x/a" in text
    assert not rep.passed


def test_config_validation():
    with pytest.raises(ConfigError):
        Config(trunc_dim=2).validate()
    with pytest.raises(ConfigError):
        Config(psi_nodes=0).validate()
