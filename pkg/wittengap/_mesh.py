"""
Triangle meshes of the unit sphere: icosahedron generation, midpoint subdivision with projection, cotangent
conductances and barycentric lumped masses, and OFF export.
"""
from __future__ import annotations

import dataclasses
import math
import pathlib
import typing

import numpy as np
import scipy.sparse

from ._constants import MAX_SUBDIVISIONS
from ._exceptions import InvalidInputException
from ._types import ARRAY_ALIAS
from ._types import INDEX_ARRAY_ALIAS
from ._types import PATH_ALIAS

_GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0

ICOSAHEDRON_VERTICES = np.array(
    [
        [-1.0, _GOLDEN, 0.0],
        [1.0, _GOLDEN, 0.0],
        [-1.0, -_GOLDEN, 0.0],
        [1.0, -_GOLDEN, 0.0],
        [0.0, -1.0, _GOLDEN],
        [0.0, 1.0, _GOLDEN],
        [0.0, -1.0, -_GOLDEN],
        [0.0, 1.0, -_GOLDEN],
        [_GOLDEN, 0.0, -1.0],
        [_GOLDEN, 0.0, 1.0],
        [-_GOLDEN, 0.0, -1.0],
        [-_GOLDEN, 0.0, 1.0],
    ]
)

ICOSAHEDRON_FACES = np.array(
    [
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ],
    dtype=np.int64,
)


def _project(points: ARRAY_ALIAS) -> ARRAY_ALIAS:
    return points / np.linalg.norm(points, axis=1)[:, None]


@dataclasses.dataclass(frozen=True)
class TriangleMesh:
    vertices: ARRAY_ALIAS
    faces: INDEX_ARRAY_ALIAS

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def edges(self) -> INDEX_ARRAY_ALIAS:
        """Unique undirected edges as sorted (i, j) pairs, i < j."""
        f = self.faces
        pairs = np.sort(np.concatenate([f[:, [0, 1]], f[:, [1, 2]], f[:, [2, 0]]]), axis=1)
        return np.unique(pairs, axis=0)

    def euler(self) -> int:
        return self.vertex_count - len(self.edges()) + len(self.faces)

    def triangle_areas(self) -> ARRAY_ALIAS:
        v = self.vertices
        a, b, c = v[self.faces[:, 0]], v[self.faces[:, 1]], v[self.faces[:, 2]]
        return 0.5 * np.linalg.norm(np.cross(b - a, c - a), axis=1)


def subdivide(mesh: TriangleMesh) -> TriangleMesh:
    """Split every triangle into four through its edge midpoints and push the new vertices onto the sphere."""
    f = mesh.faces
    count = len(f)
    pairs = np.sort(np.concatenate([f[:, [0, 1]], f[:, [1, 2]], f[:, [2, 0]]]), axis=1)
    unique, inverse = np.unique(pairs, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1) + mesh.vertex_count
    midpoints = _project(0.5 * (mesh.vertices[unique[:, 0]] + mesh.vertices[unique[:, 1]]))
    m01, m12, m20 = inverse[:count], inverse[count : 2 * count], inverse[2 * count :]
    faces = np.concatenate(
        [
            np.stack([f[:, 0], m01, m20], axis=1),
            np.stack([f[:, 1], m12, m01], axis=1),
            np.stack([f[:, 2], m20, m12], axis=1),
            np.stack([m01, m12, m20], axis=1),
        ]
    )
    return TriangleMesh(vertices=np.concatenate([mesh.vertices, midpoints]), faces=faces)


def icosphere(subdivisions: int) -> TriangleMesh:
    if not 0 <= subdivisions <= MAX_SUBDIVISIONS:
        raise InvalidInputException(f"subdivisions must lie in [0, {MAX_SUBDIVISIONS}], got {subdivisions}")
    mesh = TriangleMesh(vertices=_project(ICOSAHEDRON_VERTICES), faces=ICOSAHEDRON_FACES)
    for _ in range(subdivisions):
        mesh = subdivide(mesh)
    return mesh


def cotangent_conductances(mesh: TriangleMesh) -> typing.Tuple[INDEX_ARRAY_ALIAS, ARRAY_ALIAS]:
    """
    Edge conductances (cot alpha + cot beta) / 2 where alpha, beta are the angles opposite the edge in its two
    triangles.  Returned as (edges, conductances) with edges sorted i < j.
    """
    v, f = mesh.vertices, mesh.faces
    rows, cols, values = [], [], []
    for corner in range(3):
        i, j, k = f[:, (corner + 1) % 3], f[:, (corner + 2) % 3], f[:, corner]
        u, w = v[i] - v[k], v[j] - v[k]
        cot = np.einsum("ij,ij->i", u, w) / np.linalg.norm(np.cross(u, w), axis=1)
        rows.append(np.minimum(i, j))
        cols.append(np.maximum(i, j))
        values.append(0.5 * cot)
    matrix = scipy.sparse.coo_matrix(
        (np.concatenate(values), (np.concatenate(rows), np.concatenate(cols))), shape=(mesh.vertex_count,) * 2
    ).tocsr()
    matrix.sum_duplicates()
    upper = matrix.tocoo()
    order = np.lexsort((upper.col, upper.row))
    edges = np.stack([upper.row[order], upper.col[order]], axis=1).astype(np.int64)
    return edges, upper.data[order]


def barycentric_masses(mesh: TriangleMesh) -> ARRAY_ALIAS:
    """One third of every incident triangle area, always positive."""
    masses = np.zeros(mesh.vertex_count)
    areas = mesh.triangle_areas() / 3.0
    for corner in range(3):
        np.add.at(masses, mesh.faces[:, corner], areas)
    return masses


def write_off(vertices: ARRAY_ALIAS, faces: INDEX_ARRAY_ALIAS, path: PATH_ALIAS) -> pathlib.Path:
    target = pathlib.Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    lines = ["OFF", f"{len(vertices)} {len(faces)} 0"]
    lines.extend(" ".join(f"{value:.17g}" for value in vertex) for vertex in vertices)
    lines.extend("3 " + " ".join(str(int(index)) for index in face) for face in faces)
    target.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return target
