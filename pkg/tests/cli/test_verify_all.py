import json

from wittengap import ShootingException
from wittengap import VerificationReport
from wittengap._suite import CASES

QUICK = ["--only", "constants-ledger", "--only", "soliton-optimal-s"]


def test_reports_written(run_wittengap, tmp_path):
    out = tmp_path / "reports"
    result = run_wittengap(["verify-all", "--out", str(out), *QUICK])
    assert result.exit_code == 0
    assert f"2/2 cases passed; reports in {out}" in result.output
    summary = json.loads((out / "summary.json").read_text())
    assert summary["failing_cases"] == []
    assert json.loads((out / "constants-ledger.json").read_text())["pass"] is True


def test_output_directory_from_environment(run_wittengap, tmp_path):
    out = tmp_path / "from-env"
    result = run_wittengap(["verify-all", *QUICK], env={"WITTEN_GAP_OUT": str(out)})
    assert result.exit_code == 0
    assert (out / "summary.json").is_file()


def test_config_file(run_wittengap, tmp_path):
    config = tmp_path / "run.cfg"
    config.write_text(f"oracle_grid = 1000\nout = {tmp_path / 'configured'}\n")
    result = run_wittengap(["verify-all", "--config", str(config), "--only", "soliton-optimal-s"])
    assert result.exit_code == 0
    report = json.loads((tmp_path / "configured" / "soliton-optimal-s.json").read_text())
    assert report["inputs"]["grid"] == 1000


def test_failing_case_exits_one(run_wittengap, mocker, tmp_path):
    broken = VerificationReport(case_id="broken", margins={"sup_closed": -1.0})
    mocker.patch("wittengap.commandline.cli.run_suite", return_value=[broken])
    result = run_wittengap(["verify-all", "--out", str(tmp_path)])
    assert result.exit_code == 1
    assert "first failing case: broken" in result.output
    assert json.loads((tmp_path / "summary.json").read_text())["failed"] == 1


def test_raising_case_still_writes_reports(run_wittengap, mocker, tmp_path):
    def explode(config):
        raise ShootingException("bisection did not converge")

    mocker.patch.dict(CASES, {"exploding": explode})
    result = run_wittengap(["verify-all", "--out", str(tmp_path), "--only", "exploding", "--only", "constants-ledger"])
    assert result.exit_code == 1
    assert "1/2 cases passed" in result.output
    assert "first failing case: exploding" in result.output
    assert json.loads((tmp_path / "constants-ledger.json").read_text())["pass"] is True
    report = json.loads((tmp_path / "exploding.json").read_text())
    assert report["notes"] == ["ShootingException: bisection did not converge"]
    assert json.loads((tmp_path / "summary.json").read_text())["failing_cases"] == ["exploding"]


def test_unknown_case_exits_one(run_wittengap, tmp_path):
    result = run_wittengap(["verify-all", "--out", str(tmp_path), "--only", "torus"])
    assert result.exit_code == 1
    assert "InvalidInputException" in result.output


def test_bad_config_exits_one(run_wittengap, tmp_path):
    config = tmp_path / "run.cfg"
    config.write_text("colour = red\n")
    result = run_wittengap(["verify-all", "--config", str(config), "--out", str(tmp_path)])
    assert result.exit_code == 1
    assert "ConfigException" in result.output
