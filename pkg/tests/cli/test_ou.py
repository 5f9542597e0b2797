import json
import math

import pytest


def test_flat_neumann(run_wittengap):
    result = run_wittengap(["ou", "--K", "0", "--d", "2"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["lambda1"] == pytest.approx(math.pi**2 / 4, abs=1e-6)
    assert payload["bc"] == "neumann"


def test_dirichlet_option(run_wittengap):
    neumann = json.loads(run_wittengap(["ou", "--K", "1", "--d", "2", "--m", "500"]).output)["lambda1"]
    result = run_wittengap(["ou", "--K", "1", "--d", "2", "--m", "500", "--bc", "DIRICHLET"])
    assert json.loads(result.output)["lambda1"] == pytest.approx(neumann - 1.0, abs=1e-5)


def test_check_shift(run_wittengap):
    result = run_wittengap(["ou", "--K", "-2", "--d", "2", "--m", "500", "--check-shift"])
    assert result.exit_code == 0
    assert json.loads(result.output)["pass"] is True


def test_verify_comparison(run_wittengap):
    result = run_wittengap(["ou", "--K", "1", "--d", repr(math.pi), "--verify"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["case_id"] == "ou-comparison-K1-d3.14159"
    assert payload["computed"]["lambda1_L"] >= 1.5625


def test_measure_underflow(run_wittengap):
    result = run_wittengap(["ou", "--K", "3000", "--d", "2"])
    assert result.exit_code == 1
    assert "MeasureUnderflowException" in result.output


def test_d_is_required(run_wittengap):
    assert run_wittengap(["ou", "--K", "1"]).exit_code == 2
