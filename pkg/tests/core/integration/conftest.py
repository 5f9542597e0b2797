import pytest

from wittengap import RunConfig


@pytest.fixture
def small_config(tmp_path):
    """Coarse settings that keep every case under a few seconds."""
    return RunConfig(
        k_count=3,
        d_count=3,
        oracle_grid=10_000,
        ou_cells=200,
        ou_K=(-1.0, 0.0, 1.0),
        ou_d=(2.0,),
        ou_exact_d=(2.0,),
        circle_n=400,
        circle_radii=(1.0,),
        subdivisions=3,
        sphere_heights=(0.0, 0.5),
        shift_subdivisions=2,
        out=str(tmp_path / "reports"),
    )
