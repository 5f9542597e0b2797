import math

import numpy as np
import pytest

from wittengap import InvalidInputException
from wittengap._mesh import barycentric_masses
from wittengap._mesh import cotangent_conductances
from wittengap._mesh import icosphere
from wittengap._mesh import write_off


@pytest.mark.parametrize("subdivisions, vertices", [(0, 12), (1, 42), (3, 642), (5, 10242)])
def test_icosphere_vertex_count(subdivisions, vertices) -> None:
    assert icosphere(subdivisions).vertex_count == vertices


@pytest.mark.parametrize("subdivisions", range(4))
def test_icosphere_is_a_sphere(subdivisions) -> None:
    mesh = icosphere(subdivisions)
    assert mesh.euler() == 2
    assert np.allclose(np.linalg.norm(mesh.vertices, axis=1), 1.0, atol=1e-15)


@pytest.mark.parametrize("subdivisions", [-1, 8])
def test_icosphere_subdivision_range(subdivisions) -> None:
    with pytest.raises(InvalidInputException) as exc:
        icosphere(subdivisions)
    assert exc.value.args[0] == f"subdivisions must lie in [0, 7], got {subdivisions}"


def test_cotangent_conductances_positive_on_icosphere() -> None:
    mesh = icosphere(3)
    edges, conductances = cotangent_conductances(mesh)
    assert len(edges) == len(mesh.edges())
    assert np.all(edges[:, 0] < edges[:, 1])
    assert np.all(conductances > 0)


def test_masses_cover_the_sphere() -> None:
    masses = barycentric_masses(icosphere(4))
    assert np.all(masses > 0)
    assert masses.sum() == pytest.approx(4 * math.pi, rel=1e-2)


def test_write_off(tmp_path) -> None:
    mesh = icosphere(0)
    path = write_off(mesh.vertices, mesh.faces, tmp_path / "mesh" / "ico.off")
    lines = path.read_text().splitlines()
    assert lines[:2] == ["OFF", "12 20 0"]
    assert len(lines) == 2 + 12 + 20
    assert lines[-1].startswith("3 ")
