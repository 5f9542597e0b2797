"""
The one dimensional Ornstein-Uhlenbeck comparison problem

    v'' - K x v' = -lambda v   on (-d/2, d/2)

discretized in divergence form (w v')' / w with w(x) = exp(-K x^2 / 2), the invariant measure that makes
the operator symmetric.  The finite volume pencil (stiffness, lumped mass) is symmetric by construction and
the Neumann stiffness annihilates constants, so computed spectra are real and the null mode is exact.

Neumann problems are cell centred (m unknowns, no flux through the two end faces); Dirichlet problems are
vertex centred (m - 1 interior unknowns, homogeneous end values eliminated).
"""
from __future__ import annotations

import dataclasses
import enum
import logging
import math
import typing

import numpy as np
import scipy.linalg

from ._bounds import BoundInput
from ._bounds import andrews_ni_bound
from ._bounds import futaki_sano_bound
from ._bounds import sup_bound_closed
from ._constants import DEFAULT_CELLS
from ._constants import DENSE_ORACLE_LIMIT
from ._constants import EXPONENT_GUARD
from ._constants import MIN_CELLS
from ._constants import NULL_EIGENVALUE_TOL
from ._constants import PI_SQUARED
from ._constants import STURM_RESIDUAL_RTOL
from ._exceptions import InvalidInputException
from ._exceptions import MeasureUnderflowException
from ._exceptions import SolverException
from ._report import VerificationReport
from ._types import ARRAY_ALIAS

log = logging.getLogger(__name__)


@enum.unique
class BoundaryCondition(enum.Enum):
    NEUMANN = "neumann"
    DIRICHLET = "dirichlet"


@dataclasses.dataclass(frozen=True)
class OUProblem:
    K: float
    d: float
    m: int = DEFAULT_CELLS
    bc: BoundaryCondition = BoundaryCondition.NEUMANN

    def __post_init__(self) -> None:
        if self.m < MIN_CELLS:
            raise InvalidInputException(f"at least {MIN_CELLS} cells are required, got m={self.m}")
        if not (math.isfinite(self.d) and self.d > 0) or not math.isfinite(self.K):
            raise InvalidInputException(f"need finite K and positive d, got K={self.K}, d={self.d}")

    @property
    def h(self) -> float:
        return self.d / self.m

    def nodes(self) -> ARRAY_ALIAS:
        """Coordinates of the unknowns: cell centres (Neumann) or interior vertices (Dirichlet)."""
        left = -self.d / 2.0
        if self.bc is BoundaryCondition.NEUMANN:
            return left + (np.arange(self.m) + 0.5) * self.h
        return left + np.arange(1, self.m) * self.h

    def faces(self) -> ARRAY_ALIAS:
        """Faces carrying flux: interior faces (Neumann) or every face between vertices (Dirichlet)."""
        left = -self.d / 2.0
        if self.bc is BoundaryCondition.NEUMANN:
            return left + np.arange(1, self.m) * self.h
        return left + (np.arange(self.m) + 0.5) * self.h

    def weight(self, x: ARRAY_ALIAS) -> ARRAY_ALIAS:
        return np.exp(-0.5 * self.K * x * x)


@dataclasses.dataclass(frozen=True)
class TridiagonalPencil:
    """
    Symmetric tridiagonal stiffness (diag, off) with a diagonal lumped mass.  `conductances` are the face
    values the stiffness was assembled from; for Dirichlet pencils they include the two faces adjacent to
    the eliminated end values.
    """

    diag: ARRAY_ALIAS
    off: ARRAY_ALIAS
    mass: ARRAY_ALIAS
    conductances: ARRAY_ALIAS
    bc: BoundaryCondition

    @property
    def dimension(self) -> int:
        return len(self.diag)

    def apply(self, v: ARRAY_ALIAS) -> ARRAY_ALIAS:
        out = self.diag * v
        out[:-1] += self.off * v[1:]
        out[1:] += self.off * v[:-1]
        return out

    def energy(self, v: ARRAY_ALIAS) -> float:
        """Flux form v^T A v = sum_f c_f (jump of v across f)^2, non-negative and exact on constants."""
        if self.bc is BoundaryCondition.DIRICHLET:
            v = np.concatenate(([0.0], v, [0.0]))
        return float(np.sum(self.conductances * np.diff(v) ** 2))

    def symmetrized(self) -> typing.Tuple[ARRAY_ALIAS, ARRAY_ALIAS]:
        """The standard problem M^-1/2 A M^-1/2 as (diagonal, off-diagonal)."""
        scale = 1.0 / np.sqrt(self.mass)
        return self.diag / self.mass, self.off * scale[:-1] * scale[1:]


@dataclasses.dataclass(frozen=True)
class EigenSolution:
    eigenvalues: ARRAY_ALIAS
    eigenvectors: typing.Optional[ARRAY_ALIAS]
    residual_norms: ARRAY_ALIAS


def check_exponent(exponent: float) -> None:
    if exponent > EXPONENT_GUARD:
        log.warning("weight exponent %.3g exceeds the guard %.0f", exponent, EXPONENT_GUARD)
        raise MeasureUnderflowException(
            f"weight exponent {exponent:.6g} exceeds {EXPONENT_GUARD:g}; the measure under/overflows binary64"
        )


def discretize_ou(problem: OUProblem) -> TridiagonalPencil:
    check_exponent(abs(problem.K) * (problem.d / 2.0) ** 2 / 2.0)
    h = problem.h
    conductances = problem.weight(problem.faces()) / h
    mass = problem.weight(problem.nodes()) * h
    if problem.bc is BoundaryCondition.NEUMANN:
        diag = np.zeros(problem.m)
        diag[:-1] += conductances
        diag[1:] += conductances
        off = -conductances
    else:
        diag = conductances[:-1] + conductances[1:]
        off = -conductances[1:-1]
    return TridiagonalPencil(diag=diag, off=off, mass=mass, conductances=conductances, bc=problem.bc)


def smallest_eigenvalues(pencil: TridiagonalPencil, count: int) -> EigenSolution:
    """
    The `count` smallest generalized eigenpairs of (A, M).  The pencil is reduced to a symmetric tridiagonal
    standard problem by the similarity M^-1/2; eigenvalues are bracketed by Sturm-sequence bisection and
    vectors found by inverse iteration (LAPACK stebz / stein).  Each eigenvalue is then replaced by the flux
    form Rayleigh quotient of its vector, which resolves the Neumann null eigenvalue far below eps * |A|.
    """
    if not 1 <= count <= pencil.dimension:
        raise InvalidInputException(f"count must lie in [1, {pencil.dimension}], got {count}")
    b_diag, b_off = pencil.symmetrized()
    try:
        _, vectors = scipy.linalg.eigh_tridiagonal(
            b_diag, b_off, select="i", select_range=(0, count - 1), lapack_driver="stebz"
        )
    except np.linalg.LinAlgError as exc:
        raise SolverException(f"inverse iteration failed: {exc}") from exc
    vectors = vectors / np.sqrt(pencil.mass)[:, None]
    values = np.empty(count)
    residuals = np.empty(count)
    for index in range(count):
        v = vectors[:, index]
        v /= math.sqrt(float(np.sum(pencil.mass * v * v)))
        values[index] = pencil.energy(v)
        r = pencil.apply(v) - values[index] * pencil.mass * v
        residuals[index] = math.sqrt(float(np.sum(r * r / pencil.mass)))
    order = np.argsort(values)
    values, vectors, residuals = values[order], vectors[:, order], residuals[order]
    scale = float(np.max(np.abs(b_diag)) + 2.0 * (np.max(np.abs(b_off)) if len(b_off) else 0.0))
    limit = STURM_RESIDUAL_RTOL * max(1.0, scale)
    worst = float(np.max(residuals))
    log.debug("tridiagonal solve n=%d count=%d worst residual %.3e (limit %.3e)", pencil.dimension, count, worst, limit)
    if worst > limit:
        raise SolverException(f"eigenvector residual {worst:.3e} above tolerance {limit:.3e}", residual=worst)
    return EigenSolution(eigenvalues=values, eigenvectors=vectors, residual_norms=residuals)


def dense_eigenvalues(pencil: TridiagonalPencil) -> ARRAY_ALIAS:
    """
    Full generalized spectrum from an independent algorithm: dense `eigh` on the pencil up to dimension
    3000, the QL/QR tridiagonal driver (sterf) above it.
    """
    if pencil.dimension <= DENSE_ORACLE_LIMIT:
        stiffness = np.diag(pencil.diag) + np.diag(pencil.off, 1) + np.diag(pencil.off, -1)
        return scipy.linalg.eigh(stiffness, np.diag(pencil.mass), eigvals_only=True)
    b_diag, b_off = pencil.symmetrized()
    return scipy.linalg.eigvalsh_tridiagonal(b_diag, b_off, lapack_driver="sterf")


def ou_mode(
    K: float, d: float, index: int, m: int = DEFAULT_CELLS, bc: BoundaryCondition = BoundaryCondition.NEUMANN
) -> typing.Tuple[ARRAY_ALIAS, float, ARRAY_ALIAS]:
    """Nodes, eigenvalue and mass-normalized eigenvector of the `index`-th mode (0 based)."""
    problem = OUProblem(K=K, d=d, m=m, bc=bc)
    solution = smallest_eigenvalues(discretize_ou(problem), index + 1)
    return problem.nodes(), float(solution.eigenvalues[index]), solution.eigenvectors[:, index]  # type: ignore


def _raw_lambda1(K: float, d: float, m: int, bc: BoundaryCondition) -> float:
    pencil = discretize_ou(OUProblem(K=K, d=d, m=m, bc=bc))
    if bc is BoundaryCondition.DIRICHLET:
        return float(smallest_eigenvalues(pencil, 1).eigenvalues[0])
    solution = smallest_eigenvalues(pencil, 2)
    null = float(solution.eigenvalues[0])
    if abs(null) > NULL_EIGENVALUE_TOL:
        raise SolverException(f"Neumann null eigenvalue {null:.3e} is not zero", residual=abs(null))
    return float(solution.eigenvalues[1])


def richardson(coarse: float, fine: float) -> float:
    """Second order extrapolation from grids m and 2m."""
    return (4.0 * fine - coarse) / 3.0


def neumann_lambda1(K: float, d: float, m: int = DEFAULT_CELLS) -> float:
    """First non-zero Neumann eigenvalue of the comparison operator, Richardson extrapolated from m and 2m."""
    return richardson(
        _raw_lambda1(K, d, m, BoundaryCondition.NEUMANN), _raw_lambda1(K, d, 2 * m, BoundaryCondition.NEUMANN)
    )


def dirichlet_lambda1(K: float, d: float, m: int = DEFAULT_CELLS) -> float:
    """
    Smallest Dirichlet eigenvalue.  The derivative of a Neumann eigenfunction solves the Dirichlet problem
    with eigenvalue lambda - K, so this equals neumann_lambda1 - K.
    """
    return richardson(
        _raw_lambda1(K, d, m, BoundaryCondition.DIRICHLET), _raw_lambda1(K, d, 2 * m, BoundaryCondition.DIRICHLET)
    )


def convergence_ratio(
    K: float, d: float, m: int = 100, bc: BoundaryCondition = BoundaryCondition.NEUMANN
) -> float:
    """
    e(m) / e(2m) for the raw (unextrapolated) first eigenvalue; about 4 for a second order scheme.  The
    reference is pi^2 / d^2 at K = 0 and a Richardson value from 8m / 16m otherwise.
    """
    if K == 0:
        exact = PI_SQUARED / d**2
    else:
        exact = richardson(_raw_lambda1(K, d, 8 * m, bc), _raw_lambda1(K, d, 16 * m, bc))
    coarse = abs(_raw_lambda1(K, d, m, bc) - exact)
    fine = abs(_raw_lambda1(K, d, 2 * m, bc) - exact)
    return coarse / fine


def shift_defect(K: float, d: float, m: int = DEFAULT_CELLS) -> float:
    return abs(neumann_lambda1(K, d, m) - K - dirichlet_lambda1(K, d, m))


def verify_shift(K: float, d: float, m: int = DEFAULT_CELLS) -> VerificationReport:
    neumann = neumann_lambda1(K, d, m)
    dirichlet = dirichlet_lambda1(K, d, m)
    defect = abs(neumann - K - dirichlet)
    return VerificationReport(
        case_id=f"ou-shift-K{K:g}-d{d:g}",
        inputs={"K": K, "d": d, "m": float(m)},
        computed={"lambda1_neumann": neumann, "lambda1_dirichlet": dirichlet, "shift_defect": defect},
        margins={"shift": 1e-4 * max(1.0, abs(neumann)) - defect},
    )


def verify_comparison(K: float, d: float, m: int = DEFAULT_CELLS) -> VerificationReport:
    """lambda_1(L) against the closed-form sup bound; passes when the margin is at least -1e-5 max(1, lambda_1)."""
    lambda1 = neumann_lambda1(K, d, m)
    bound = BoundInput(K=K, d=d)
    closed = sup_bound_closed(bound)
    notes = []
    if K == 0:
        notes.append("K = 0: Wirtinger equality case, lambda_1(L) = pi^2 / d^2 = bound")
    return VerificationReport(
        case_id=f"ou-comparison-K{K:g}-d{d:g}",
        inputs={"K": K, "d": d, "m": float(m)},
        computed={"lambda1_L": lambda1},
        bounds={"sup_closed": closed, "andrews_ni": andrews_ni_bound(bound), "futaki_sano": futaki_sano_bound(bound)},
        margins={"comparison": lambda1 - closed},
        tolerances={"comparison": 1e-5 * max(1.0, abs(lambda1))},
        notes=tuple(notes),
    )
