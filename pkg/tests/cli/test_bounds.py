import json
import math

import pytest


def test_single_bound(run_wittengap):
    result = run_wittengap(["bounds", "--K", "1", "--d", repr(math.pi)])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["sup_closed"] == pytest.approx(1.5625)
    assert payload["sup_grid"] == pytest.approx(1.5625, abs=1e-7)
    assert payload["andrews_ni"] == pytest.approx(1.5)
    assert payload["branch"] == 2
    assert payload["beats_futaki_sano"] is True


def test_negative_curvature_skips_futaki_sano_comparison(run_wittengap):
    payload = json.loads(run_wittengap(["bounds", "--K", "-5", "--d", repr(math.pi)]).output)
    assert payload["sup_closed"] == 0.0
    assert payload["beats_futaki_sano"] is None


def test_soliton_bounds(run_wittengap):
    result = run_wittengap(["bounds", "--lambda", "1", "--soliton", "--d", "2.5"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["sharp"] == pytest.approx(2 * (math.sqrt(2) - 1) * math.pi, abs=1e-12)
    assert payload["futaki_sano"] == pytest.approx(2.416610, abs=1e-6)
    assert payload["einstein_forced"] is True


def test_shrinker_bound(run_wittengap):
    payload = json.loads(run_wittengap(["bounds", "--lambda", "1", "--K0", "1"]).output)
    assert payload["d_bound"] == pytest.approx(2.221441, abs=1e-6)
    assert payload["sweep_d_bound"] >= payload["d_bound"]


def test_grid_to_stdout(run_wittengap, tmp_path):
    config = tmp_path / "small.cfg"
    config.write_text("k_count = 3\nd_count = 4\n")
    result = run_wittengap(["bounds", "--grid", "--config", str(config), "--oracle-grid", "10000"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "K,d,sup_closed,sup_grid,difference,tolerance,branch"
    assert len(lines) == 1 + 12


def test_grid_to_csv(run_wittengap, tmp_path):
    config = tmp_path / "small.cfg"
    config.write_text("k_count = 2\nd_count = 2\n")
    target = tmp_path / "sweep.csv"
    args = ["bounds", "--grid", "--config", str(config), "--oracle-grid", "10000", "--csv", str(target)]
    result = run_wittengap(args)
    assert result.exit_code == 0
    assert len(target.read_text().splitlines()) == 5


@pytest.mark.parametrize(
    "args",
    [["bounds"], ["bounds", "--K", "1"], ["bounds", "--K", "1", "--d", "-2"], ["bounds", "--soliton"]],
)
def test_usage_errors(run_wittengap, args):
    assert run_wittengap(args).exit_code == 2


def test_library_error_exits_one(run_wittengap):
    result = run_wittengap(["bounds", "--lambda", "1", "--K0", "-1"])
    assert result.exit_code == 1
    assert "InvalidInputException: K0 must be non-negative, got K0=-1.0" in result.output
