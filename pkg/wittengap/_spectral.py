"""
Discrete Witten-Laplacians on weighted test manifolds.

A `WeightedComplex` carries a symmetric Dirichlet form (edge conductances) and a lumped measure (vertex
masses).  The positive semidefinite operator M^-1 A realizes -Delta_phi, the sign convention used in every
report.  Weights enter as

    conductance_ij <- conductance_ij * exp(-(phi_i + phi_j) / 2)
    mass_i         <- mass_i * exp(-phi_i)

so the form stays symmetric in L^2(exp(-phi) dv), positive, and exact on constants.
"""
from __future__ import annotations

import dataclasses
import logging
import math
import pathlib
import typing

import numpy as np
import scipy.sparse
import scipy.sparse.csgraph

from ._bounds import BoundInput
from ._bounds import andrews_ni_bound
from ._bounds import futaki_sano_bound
from ._bounds import sup_bound_closed
from ._constants import CLUSTER_RTOL
from ._constants import DIAMETER_ALL_SOURCES_LIMIT
from ._constants import DIAMETER_SAMPLED_SOURCES
from ._constants import PI
from ._constants import SPECTRAL_CERTIFY_RTOL
from ._exceptions import InvalidInputException
from ._exceptions import StructuralException
from ._lanczos import lowest_nonconstant_modes
from ._mesh import barycentric_masses
from ._mesh import cotangent_conductances
from ._mesh import icosphere
from ._mesh import write_off
from ._report import VerificationReport
from ._sturm import check_exponent
from ._types import ARRAY_ALIAS
from ._types import ARRAY_LIKE_ALIAS
from ._types import INDEX_ARRAY_ALIAS
from ._types import PATH_ALIAS
from ._types import PHI_FN_ALIAS
from ._utility import write_csv

log = logging.getLogger(__name__)

SIGN_CONVENTION = "-Delta_phi is realized by Mass^-1 Stiffness (positive semidefinite)"


@dataclasses.dataclass(frozen=True)
class WeightedComplex:
    vertices: ARRAY_ALIAS
    edges: INDEX_ARRAY_ALIAS
    conductances: ARRAY_ALIAS
    masses: ARRAY_ALIAS
    phi: ARRAY_ALIAS
    label: str
    faces: typing.Optional[INDEX_ARRAY_ALIAS] = None

    def __post_init__(self) -> None:
        if len(self.edges) != len(self.conductances):
            raise InvalidInputException("one conductance per edge is required")
        if len(self.masses) != len(self.vertices) or len(self.phi) != len(self.vertices):
            raise InvalidInputException("masses and phi need one value per vertex")
        if np.any(self.conductances <= 0) or np.any(self.masses <= 0):
            raise InvalidInputException(f"{self.label}: conductances and masses must be strictly positive")

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def stiffness(self) -> scipy.sparse.csr_matrix:
        i, j = self.edges[:, 0], self.edges[:, 1]
        n = self.vertex_count
        off = scipy.sparse.coo_matrix((-self.conductances, (i, j)), shape=(n, n))
        diagonal = np.zeros(n)
        np.add.at(diagonal, i, self.conductances)
        np.add.at(diagonal, j, self.conductances)
        return (off + off.T + scipy.sparse.diags(diagonal)).tocsr()

    def apply_stiffness(self, u: ARRAY_ALIAS) -> ARRAY_ALIAS:
        """A u assembled edge by edge from fluxes c_e (u_i - u_j); vanishes exactly on constants."""
        i, j = self.edges[:, 0], self.edges[:, 1]
        flux = self.conductances * (u[i] - u[j])
        out = np.zeros(self.vertex_count)
        np.add.at(out, i, flux)
        np.add.at(out, j, -flux)
        return out

    def is_connected(self) -> bool:
        count = scipy.sparse.csgraph.connected_components(self.stiffness(), directed=False, return_labels=False)
        return count == 1


@dataclasses.dataclass(frozen=True)
class SpectralResult:
    lambda1: float
    multiplicity: int
    multiplicity_gap: float
    eigenvalues: ARRAY_ALIAS
    eigenvector: ARRAY_ALIAS
    residual: float
    diameter_estimate: float
    method: str


@dataclasses.dataclass(frozen=True)
class RitzPair:
    """Ritz value of span{u}; some eigenvalue lies within `residual` of `value` (Krylov-Weinstein)."""

    value: float
    residual: float


def apply_weight(complex_: WeightedComplex, phi_values: ARRAY_LIKE_ALIAS) -> WeightedComplex:
    phi = np.asarray(phi_values, dtype=np.float64)
    if phi.shape != (complex_.vertex_count,):
        raise InvalidInputException(f"expected {complex_.vertex_count} potential values, got shape {phi.shape}")
    check_exponent(float(np.max(np.abs(phi))) if len(phi) else 0.0)
    i, j = complex_.edges[:, 0], complex_.edges[:, 1]
    return dataclasses.replace(
        complex_,
        conductances=complex_.conductances * np.exp(-0.5 * (phi[i] + phi[j])),
        masses=complex_.masses * np.exp(-phi),
        phi=complex_.phi + phi,
    )


def build_weighted_circle(
    n: int, radius: float = 1.0, phi_fn: typing.Optional[PHI_FN_ALIAS] = None
) -> WeightedComplex:
    """
    n equispaced vertices on a circle of radius r, h = 2 pi r / n.  `phi_fn` maps angles to potential values;
    neighbours are joined with conductance exp(-phi(edge midpoint)) / h and vertex i carries exp(-phi_i) h.
    """
    if n < 8:
        raise InvalidInputException(f"a circle needs at least 8 vertices, got n={n}")
    if not radius > 0:
        raise InvalidInputException(f"radius must be positive, got {radius}")
    angles = 2.0 * PI * np.arange(n) / n
    h = 2.0 * PI * radius / n
    base = WeightedComplex(
        vertices=radius * np.stack([np.cos(angles), np.sin(angles)], axis=1),
        edges=np.stack([np.arange(n), (np.arange(n) + 1) % n], axis=1),
        conductances=np.full(n, 1.0 / h),
        masses=np.full(n, h),
        phi=np.zeros(n),
        label=f"circle-n{n}-r{radius:g}",
    )
    if phi_fn is None:
        return base
    phi = np.asarray(phi_fn(angles), dtype=np.float64)
    midpoints = np.asarray(phi_fn(angles + PI / n), dtype=np.float64)
    check_exponent(float(max(np.max(np.abs(phi)), np.max(np.abs(midpoints)))))
    return dataclasses.replace(base, conductances=np.exp(-midpoints) / h, masses=np.exp(-phi) * h, phi=phi)


def build_closed_curve(points: ARRAY_ALIAS, h: float, phi: ARRAY_LIKE_ALIAS, label: str) -> WeightedComplex:
    """Periodic 1D complex on arclength samples with spacing h, weighted by exp(-phi)."""
    n = len(points)
    base = WeightedComplex(
        vertices=np.asarray(points, dtype=np.float64),
        edges=np.stack([np.arange(n), (np.arange(n) + 1) % n], axis=1),
        conductances=np.full(n, 1.0 / h),
        masses=np.full(n, h),
        phi=np.zeros(n),
        label=label,
    )
    return apply_weight(base, phi)


def build_icosphere(subdivisions: int) -> WeightedComplex:
    mesh = icosphere(subdivisions)
    edges, conductances = cotangent_conductances(mesh)
    return WeightedComplex(
        vertices=mesh.vertices,
        edges=edges,
        conductances=conductances,
        masses=barycentric_masses(mesh),
        phi=np.zeros(mesh.vertex_count),
        label=f"icosphere-{subdivisions}",
        faces=mesh.faces,
    )


def witten_apply(complex_: WeightedComplex, u: ARRAY_LIKE_ALIAS) -> ARRAY_ALIAS:
    """Mass^-1 Stiffness u, i.e. the discrete -Delta_phi u."""
    u = np.asarray(u, dtype=np.float64)
    if u.shape != (complex_.vertex_count,):
        raise InvalidInputException(f"expected a vector of length {complex_.vertex_count}, got shape {u.shape}")
    return complex_.apply_stiffness(u) / complex_.masses


def rayleigh_ritz(complex_: WeightedComplex, u: ARRAY_LIKE_ALIAS) -> RitzPair:
    u = np.asarray(u, dtype=np.float64)
    au = complex_.apply_stiffness(u)
    norm = float(np.sum(complex_.masses * u * u))
    if norm == 0:
        raise InvalidInputException("the trial vector must not vanish")
    value = float(u @ au) / norm
    r = au - value * complex_.masses * u
    return RitzPair(value=value, residual=math.sqrt(float(np.sum(r * r / complex_.masses)) / norm))


def graph_diameter(complex_: WeightedComplex) -> float:
    """
    Largest shortest-path distance with chord lengths as edge lengths.  All sources are used up to 2000
    vertices, otherwise 200 farthest-point-sampled sources starting from vertex 0.  Graph distance
    overestimates geodesic distance on a refined mesh, so this is an estimate biased upwards.
    """
    i, j = complex_.edges[:, 0], complex_.edges[:, 1]
    lengths = np.linalg.norm(complex_.vertices[i] - complex_.vertices[j], axis=1)
    n = complex_.vertex_count
    graph = scipy.sparse.coo_matrix((lengths, (i, j)), shape=(n, n)).tocsr()
    if n <= DIAMETER_ALL_SOURCES_LIMIT:
        distances = scipy.sparse.csgraph.dijkstra(graph, directed=False)
        diameter = float(np.max(distances))
    else:
        nearest = np.full(n, np.inf)
        source, diameter = 0, 0.0
        for _ in range(min(DIAMETER_SAMPLED_SOURCES, n)):
            distances = scipy.sparse.csgraph.dijkstra(graph, directed=False, indices=source)
            diameter = max(diameter, float(np.max(distances)))
            nearest = np.minimum(nearest, distances)
            source = int(np.argmax(nearest))
    if not math.isfinite(diameter):
        raise StructuralException(f"{complex_.label}: graph is disconnected, the diameter is infinite")
    return diameter


def lambda1_witten(complex_: WeightedComplex, count: int = 4, with_diameter: bool = True) -> SpectralResult:
    """
    First non-zero eigenvalue of -Delta_phi on the complement of constants.  `count` low modes are computed
    so the multiplicity of lambda_1 and the gap after its cluster can be read off.
    """
    if not complex_.is_connected():
        raise StructuralException(f"{complex_.label}: the edge graph is not connected")
    count = min(count, complex_.vertex_count - 1)
    modes = lowest_nonconstant_modes(complex_.stiffness(), complex_.masses, count)
    lambda1 = float(modes.values[0])
    multiplicity = int(np.sum(np.abs(modes.values - lambda1) <= CLUSTER_RTOL * abs(lambda1)))
    gap = float("nan")
    if multiplicity < len(modes.values):
        gap = float(modes.values[multiplicity] - modes.values[multiplicity - 1]) / lambda1
    log.info("%s: lambda_1 = %.10g (x%d, %s)", complex_.label, lambda1, multiplicity, modes.method)
    return SpectralResult(
        lambda1=lambda1,
        multiplicity=multiplicity,
        multiplicity_gap=gap,
        eigenvalues=modes.values,
        eigenvector=modes.vectors[:, 0],
        residual=float(modes.residuals[0]),
        diameter_estimate=graph_diameter(complex_) if with_diameter else float("nan"),
        method=modes.method,
    )


def _certify(
    case_id: str,
    result: SpectralResult,
    K: float,
    d: float,
    inputs: typing.Dict[str, float],
    notes: typing.Sequence[str] = (),
) -> VerificationReport:
    """lambda_1 against the sup bound, and against the Futaki-Sano and Andrews-Ni bounds when K >= 0."""
    bound = BoundInput(K=K, d=d)
    tolerance = SPECTRAL_CERTIFY_RTOL * max(1.0, result.lambda1)
    bounds = {"sup_closed": sup_bound_closed(bound), "andrews_ni": andrews_ni_bound(bound)}
    bounds["futaki_sano"] = futaki_sano_bound(bound)
    margins = {"sup_closed": result.lambda1 - bounds["sup_closed"]}
    if K >= 0:
        margins["andrews_ni"] = result.lambda1 - bounds["andrews_ni"]
        margins["futaki_sano"] = result.lambda1 - bounds["futaki_sano"]
    return VerificationReport(
        case_id=case_id,
        inputs={**inputs, "K": K, "d": d},
        computed={
            "lambda1": result.lambda1,
            "multiplicity": float(result.multiplicity),
            "multiplicity_gap": result.multiplicity_gap,
            "residual": result.residual,
            "graph_diameter": result.diameter_estimate,
        },
        bounds=bounds,
        margins=margins,
        tolerances={key: tolerance for key in margins},
        notes=(SIGN_CONVENTION, "d is analytic; graph_diameter is informational", *notes),
    )


def circle_case(n: int = 1000, radius: float = 1.0) -> VerificationReport:
    """Unweighted circle: lambda_1 = 1 / r^2, which is also the Zhong-Yang equality pi^2 / d^2 at d = pi r."""
    result = lambda1_witten(build_weighted_circle(n, radius))
    exact = 1.0 / radius**2
    report = _certify(f"circle-n{n}-r{radius:g}", result, 0.0, PI * radius, {"n": float(n), "radius": radius})
    margins = {**report.margins, "analytic": 1e-4 * exact - abs(result.lambda1 - exact)}
    return dataclasses.replace(report, margins=margins, bounds={**report.bounds, "analytic": exact})


def circle_weighted_case(a: float, n: int = 1000, radius: float = 1.0) -> VerificationReport:
    """phi = a cos(theta) on a circle of radius r: Ric = 0 and phi'' >= -|a| / r^2, so K = -|a| / r^2."""
    result = lambda1_witten(build_weighted_circle(n, radius, lambda angles: a * np.cos(angles)))
    return _certify(
        f"circle-weighted-a{a:g}-r{radius:g}",
        result,
        -abs(a) / radius**2,
        PI * radius,
        {"a": a, "n": float(n), "radius": radius},
    )


def sphere_case(subdivisions: int = 5) -> VerificationReport:
    result = lambda1_witten(build_icosphere(subdivisions))
    report = _certify(f"sphere-{subdivisions}", result, 1.0, PI, {"subdivisions": float(subdivisions)})
    margins = {
        **report.margins,
        "analytic": SPECTRAL_CERTIFY_RTOL * 2.0 - abs(result.lambda1 - 2.0),
        "cluster": result.multiplicity - 3.0,
    }
    return dataclasses.replace(report, margins=margins, bounds={**report.bounds, "analytic": 2.0})


def sphere_height_case(a: float, subdivisions: int = 5) -> VerificationReport:
    """
    Unit sphere with phi = a z.  Ric = g and the Hessian of z on the sphere is -z g, so
    Ric + Hess phi = (1 - a z) g >= (1 - |a|) g: K = 1 - |a| and d = pi.
    """
    if not abs(a) < 1:
        raise InvalidInputException(f"|a| must be below 1, got a={a}")
    sphere = build_icosphere(subdivisions)
    result = lambda1_witten(apply_weight(sphere, a * sphere.vertices[:, 2]))
    return _certify(
        f"sphere-height-a{a:g}", result, 1.0 - abs(a), PI, {"a": a, "subdivisions": float(subdivisions)}
    )


def weight_shift_case(shifts: typing.Sequence[float] = (-3.0, 5.0), subdivisions: int = 3) -> VerificationReport:
    """lambda_1 is invariant under phi -> phi + c since both matrices scale by exp(-c)."""
    sphere = build_icosphere(subdivisions)
    phi = 0.5 * sphere.vertices[:, 2]
    reference = lambda1_witten(apply_weight(sphere, phi), with_diameter=False).lambda1
    computed = {"lambda1": reference}
    margins = {}
    for shift in shifts:
        shifted = lambda1_witten(apply_weight(sphere, phi + shift), with_diameter=False).lambda1
        computed[f"lambda1_shift_{shift:g}"] = shifted
        margins[f"shift_{shift:g}"] = 1e-12 * abs(reference) - abs(shifted - reference)
    return VerificationReport(
        case_id="weight-shift",
        inputs={"subdivisions": float(subdivisions)},
        computed=computed,
        margins=margins,
    )


def export_off(complex_: WeightedComplex, path: PATH_ALIAS) -> pathlib.Path:
    if complex_.faces is None:
        raise InvalidInputException(f"{complex_.label} has no triangles to export")
    return write_off(complex_.vertices, complex_.faces, path)


def export_eigenvector_csv(complex_: WeightedComplex, u: ARRAY_LIKE_ALIAS, path: PATH_ALIAS) -> pathlib.Path:
    u = np.asarray(u, dtype=np.float64)
    coordinates = np.zeros((complex_.vertex_count, 3))
    coordinates[:, : complex_.vertices.shape[1]] = complex_.vertices
    rows = (
        (index, *coordinates[index], complex_.phi[index], u[index]) for index in range(complex_.vertex_count)
    )
    return write_csv(path, ("vertex_index", "x", "y", "z", "phi", "u"), rows)
