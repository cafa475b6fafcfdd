import json

import pytest

from yamacone import __version__
from yamacone.cli.commands import run
from yamacone.config.schema import Settings
from yamacone.errors import MaxStepsExceededError
from yamacone.report.emit import CSV_HEADER
from yamacone.verify.suites import CheckResult


@pytest.fixture(autouse=True)
def default_settings(monkeypatch) -> None:
    monkeypatch.setattr("yamacone.cli.commands.load_settings", lambda: Settings())


def _json(capsys, argv: list[str]) -> dict:
    assert run(argv) == 0
    return json.loads(capsys.readouterr().out)


def test_version(capsys) -> None:
    assert run(["--version"]) == 0
    assert __version__ in capsys.readouterr().out


def test_geometry_json(capsys) -> None:
    data = _json(capsys, ["geometry", "--p", "3", "--q", "3", "--rp", "1", "--rq", "1", "--json"])
    assert data["geometry"]["lambda"] == -6.0
    assert data["geometry"]["mu_sq"] == pytest.approx(0.8)
    assert data["geometry"]["case"] == "Plus"
    assert data["inputs"] == {"p": 3, "q": 3, "rp": 1.0, "rq": 1.0}


def test_geometry_table(capsys) -> None:
    assert run(["geometry", "--p", "3", "--q", "3", "--rp", "1", "--rq", "1"]) == 0
    assert "Plus" in capsys.readouterr().out


def test_invalid_cone_is_validation_error(capsys) -> None:
    assert run(["geometry", "--p", "3", "--q", "3", "--rp", "-1", "--rq", "1"]) == 1
    assert "r_p" in capsys.readouterr().err


def test_usage_error(capsys) -> None:
    assert run(["geometry", "--p", "3"]) == 1
    assert run(["no-such-command"]) == 1
    assert run(["geometry", "--p", "3", "--q", "3", "--rp", "1", "--rq", "1", "--bogus"]) == 1
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "Traceback" not in captured.err


def test_help_exits_cleanly(capsys) -> None:
    assert run(["geometry", "--help"]) == 0
    assert "--rp" in capsys.readouterr().out


def test_spectral_json(capsys) -> None:
    argv = ["spectral", "--p", "3", "--q", "3", "--rp", "1", "--rq", "1", "--imax", "2"]
    data = _json(capsys, [*argv, "--jmax", "2", "--total-curvature-positive", "--json"])
    assert data["spectral"]["negative_modes"] == [{"i": 0, "j": 0, "K": pytest.approx(-1.25)}]
    assert data["spectral"]["positivity"] == "ConditionallyPositive"


def test_series_json(capsys) -> None:
    argv = ["series", "--p", "1", "--q", "3", "--rp", "1", "--rq", "1", "--q1", "1"]
    data = _json(capsys, [*argv, "--json"])
    series = data["series"]
    assert series["nu"] == pytest.approx(0.0, abs=1e-12)
    assert series["coeffs"][1] == pytest.approx(-0.1)
    assert series["coeffs"][2] == pytest.approx(1 / 280)
    assert series["residual_slope"] == pytest.approx(series["expected_slope"], abs=1e-6)


def test_classify_figure(capsys) -> None:
    data = _json(capsys, ["classify", "--scenario", "fig7_1", "--json"])
    assert data["case"]["id"] == "C1"
    assert len(data["families"]) == 4

    assert run(["classify", "-s", "fig7_1"]) == 0
    assert "C1" in capsys.readouterr().out


def test_classify_needs_one_source(capsys, tmp_path) -> None:
    assert run(["classify"]) == 1
    assert run(["classify", "--scenario", "fig7_1", "--config", str(tmp_path / "x")]) == 1
    assert run(["classify", "--scenario", "fig9_9"]) == 1
    assert "fig9_9" in capsys.readouterr().err


def test_config_alpha_bound(capsys, tmp_path) -> None:
    path = tmp_path / "bad.cfg"
    path.write_text("p=3\nq=3\nrp=1\nrq=1\nalpha=2\nQ=1\n", encoding="utf-8")
    assert run(["classify", "--config", str(path)]) == 1
    assert "(n+2)/(n-2)" in capsys.readouterr().err


def test_report_round_trip(capsys, tmp_path) -> None:
    assert run(["classify", "--scenario", "fig7_1", "--json"]) == 0
    first = capsys.readouterr().out
    path = tmp_path / "report.json"
    path.write_text(first, encoding="utf-8")
    assert run(["classify", "--config", str(path), "--json"]) == 0
    assert capsys.readouterr().out == first


def test_phase_json_and_csv(capsys, tmp_path) -> None:
    csv = tmp_path / "traj.csv"
    argv = ["phase", "-s", "fig7_1", "--x0", "1", "--y0", "0", "--tmax", "2", "--tol", "1e-8"]
    data = _json(capsys, [*argv, "--csv", str(csv), "--json"])
    assert data["case"] == "C1"
    assert data["trajectory"]["tol"] == 1e-8
    rows = csv.read_text(encoding="utf-8").splitlines()
    assert rows[0] == CSV_HEADER
    assert len(rows) == data["trajectory"]["samples"] + 1


def test_phase_separatrix_fit(capsys) -> None:
    argv = ["phase", "-s", "fig7_4", "--separatrix", "w1:plus", "--offset", "1e-6"]
    data = _json(capsys, [*argv, "--tmax", "4", "--max-step", "0.1", "--json"])
    fit = data["trajectory"]["exponent_fit"]
    assert fit["rate"] == pytest.approx(data["trajectory"]["meta"]["eigenvalue"], rel=0.05)


def test_phase_critical_reports_drift(capsys) -> None:
    argv = ["phase", "-s", "fig7_7p", "--x0", "0.5", "--y0", "0", "--tmax", "10"]
    data = _json(capsys, [*argv, "--max-step", "0.1", "--json"])
    assert data["trajectory"]["first_integral_drift"] < 1e-8


def test_phase_rejects_bad_separatrix(capsys) -> None:
    assert run(["phase", "-s", "fig7_1", "--separatrix", "w9:minus"]) == 1
    assert run(["phase", "-s", "fig7_1"]) == 1


def test_numerical_failure_exit_code(capsys, monkeypatch) -> None:
    def fail(*args, **kwargs):
        raise MaxStepsExceededError("step budget exhausted")

    monkeypatch.setattr("yamacone.cli.commands.integrate", fail)
    assert run(["phase", "-s", "fig7_1", "--x0", "1", "--y0", "0"]) == 2
    assert "step budget" in capsys.readouterr().err


def test_output_failure_exit_code(capsys, tmp_path) -> None:
    blocker = tmp_path / "file"
    blocker.write_text("x", encoding="utf-8")
    argv = ["portrait", "-s", "fig7_1", "--grid", "0x0", "--csv", str(blocker / "out.csv")]
    assert run(argv) == 2


def test_portrait_empty_grid(capsys, tmp_path) -> None:
    csv = tmp_path / "empty.csv"
    data = _json(capsys, ["portrait", "-s", "fig7_1", "--grid", "0x0", "--csv", str(csv), "--json"])
    assert data["portrait"]["trajectories"] == 0
    assert csv.read_text(encoding="utf-8") == CSV_HEADER + "\n"


def test_portrait_bad_grid(capsys) -> None:
    assert run(["portrait", "-s", "fig7_1", "--grid", "8by8"]) == 1


def test_scenarios_listing(capsys) -> None:
    data = _json(capsys, ["scenarios", "--json"])
    assert len(data["scenarios"]) == 11
    assert all(row["matches"] for row in data["scenarios"])


def test_verify_suite(capsys) -> None:
    data = _json(capsys, ["verify", "--suite", "figures", "--json"])
    assert [c["name"] for c in data["checks"]] == [
        "figures.classification",
        "figures.derived_coefficients",
    ]
    assert run(["verify", "--suite", "bogus"]) == 1


def test_verify_failure_exit_code(capsys, monkeypatch) -> None:
    failing = [CheckResult("demo.check", False, "always fails", 1.0, 0.0)]
    monkeypatch.setattr("yamacone.cli.commands.run_suite", lambda *a, **k: failing)
    assert run(["verify"]) == 2
    assert "1 of 1 checks failed" in capsys.readouterr().err
