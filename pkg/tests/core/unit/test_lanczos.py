import numpy as np
import pytest

from wittengap import InvalidInputException
from wittengap import LanczosConvergenceException
from wittengap._lanczos import block_lanczos
from wittengap._lanczos import lowest_nonconstant_modes
from wittengap._lanczos import pencil_residual


def test_lanczos_agrees_with_dense(icosphere_3) -> None:
    stiffness, mass = icosphere_3.stiffness(), icosphere_3.masses
    dense = lowest_nonconstant_modes(stiffness, mass, 4)
    lanczos = lowest_nonconstant_modes(stiffness, mass, 4, dense_limit=0)
    assert (dense.method, lanczos.method) == ("dense", "lanczos")
    assert np.allclose(lanczos.values, dense.values, rtol=1e-9)


def test_sphere_triplet_is_resolved(icosphere_3) -> None:
    modes = block_lanczos(icosphere_3.stiffness(), icosphere_3.masses, 4)
    assert np.ptp(modes.values[:3]) <= 1e-8 * modes.values[0]
    assert modes.values[3] > 2.5 * modes.values[0]


def test_modes_are_mass_orthogonal_to_constants(icosphere_3) -> None:
    modes = lowest_nonconstant_modes(icosphere_3.stiffness(), icosphere_3.masses, 3, dense_limit=0)
    overlap = icosphere_3.masses @ modes.vectors
    assert np.max(np.abs(overlap)) <= 1e-8


def test_residuals_reported(unit_circle) -> None:
    stiffness, mass = unit_circle.stiffness(), unit_circle.masses
    modes = lowest_nonconstant_modes(stiffness, mass, 2)
    for value, vector, residual in zip(modes.values, modes.vectors.T, modes.residuals):
        assert residual == pytest.approx(pencil_residual(stiffness, mass, value, vector))
        assert residual <= 1e-8


def test_iteration_cap_reports_best_estimate(icosphere_3) -> None:
    with pytest.raises(LanczosConvergenceException) as exc:
        block_lanczos(icosphere_3.stiffness(), icosphere_3.masses, 3, max_blocks=2, tol=1e-16)
    assert np.isfinite(exc.value.estimate)
    assert exc.value.residual > 0


@pytest.mark.parametrize("count", [0, 642])
def test_count_out_of_range(icosphere_3, count) -> None:
    with pytest.raises(InvalidInputException):
        lowest_nonconstant_modes(icosphere_3.stiffness(), icosphere_3.masses, count)
