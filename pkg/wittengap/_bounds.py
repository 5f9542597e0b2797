"""
Closed-form lower bounds for the first non-zero eigenvalue of the Witten-Laplacian under a Bakry-Emery
curvature bound, and the diameter bounds they imply for shrinking solitons and self-shrinkers.

Every function here is a pure function of its inputs.  The sup over s in (0, 1) of

    g(s) = 4 s (1 - s) pi^2 / d^2 + s K

is evaluated both in closed form and by brute force over an interior grid, the latter acting as the
independent oracle for the former.
"""
from __future__ import annotations

import dataclasses
import math
import typing

import numpy as np

from ._constants import ANDREWS_NI_DIAMETER_CONSTANT
from ._constants import DEFAULT_ORACLE_GRID
from ._constants import FUTAKI_SANO_DIAMETER_CONSTANT
from ._constants import FUTAKI_SANO_K_FACTOR
from ._constants import MIN_ORACLE_GRID
from ._constants import PI
from ._constants import PI_SQUARED
from ._constants import SHARP_DIAMETER_CONSTANT
from ._constants import SOLITON_G_MAX
from ._constants import SOLITON_OPTIMAL_S
from ._exceptions import InvalidInputException


@dataclasses.dataclass(frozen=True)
class BoundInput:
    """Curvature lower bound `K` (any sign) and diameter `d` of a compact weighted manifold."""

    K: float
    d: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.K) and math.isfinite(self.d)):
            raise InvalidInputException(f"K and d must be finite, got K={self.K}, d={self.d}")
        if self.d <= 0:
            raise InvalidInputException(f"diameter must be positive, got d={self.d}")

    @property
    def kd2(self) -> float:
        return self.K * self.d * self.d


@dataclasses.dataclass(frozen=True)
class SolitonInput:
    lam: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lam) and self.lam > 0):
            raise InvalidInputException(f"soliton constant must be positive, got lambda={self.lam}")


@dataclasses.dataclass(frozen=True)
class ShrinkerBoundInput:
    """Shrinker constant `lam` and K0, the maximal squared second fundamental form row sum."""

    lam: float
    K0: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lam) and self.lam > 0):
            raise InvalidInputException(f"shrinker constant must be positive, got lambda={self.lam}")
        if not (math.isfinite(self.K0) and self.K0 >= 0):
            raise InvalidInputException(f"K0 must be non-negative, got K0={self.K0}")


@dataclasses.dataclass(frozen=True)
class SolitonDiameterBounds:
    sharp: float
    futaki_sano: float
    andrews_ni: float

    @property
    def ordered(self) -> bool:
        return self.sharp > self.andrews_ni > self.futaki_sano


@dataclasses.dataclass(frozen=True)
class SolitonOptimum:
    s_star: float
    g_max: float
    g_at_s_star: float
    grid_max: float


@dataclasses.dataclass(frozen=True)
class Maximizer:
    """Where the sup of g is reached.  Branches 1 and 3 are approached at s -> 0 and s -> 1, never attained."""

    s: float
    attained: bool
    branch: int


@dataclasses.dataclass(frozen=True)
class SweepBound:
    d_bound: float
    s: float


def interior_grid(grid_size: int) -> np.ndarray:
    """The points i / (grid_size + 1), i = 1..grid_size; both endpoints of (0, 1) are excluded."""
    return np.arange(1, grid_size + 1, dtype=np.float64) / (grid_size + 1)


def sup_objective(s: np.ndarray, bound: BoundInput) -> np.ndarray:
    return 4.0 * s * (1.0 - s) * PI_SQUARED / bound.d**2 + s * bound.K


def sup_bound_grid(bound: BoundInput, grid_size: int = DEFAULT_ORACLE_GRID) -> float:
    """
    Brute-force maximum of g over the interior grid.  Serves as the oracle the closed form is checked against.
    """
    if grid_size < MIN_ORACLE_GRID:
        raise InvalidInputException(f"grid_size must be at least {MIN_ORACLE_GRID}, got {grid_size}")
    return float(np.max(sup_objective(interior_grid(grid_size), bound)))


def sup_bound_closed(bound: BoundInput) -> float:
    """
    The least upper bound of g over the open interval (0, 1):

        0                          if K d^2 < -4 pi^2
        (pi / d + K d / (4 pi))^2  if K d^2 in [-4 pi^2, 4 pi^2]
        K                          if K d^2 > 4 pi^2

    The dimension cap (n - 1) pi^2 on the last branch is an admissibility condition on (K, d), see
    `myers_admissible`; it does not change the value of the sup and is not enforced here.
    """
    kd2 = bound.kd2
    if kd2 < -4.0 * PI_SQUARED:
        return 0.0
    if kd2 > 4.0 * PI_SQUARED:
        return bound.K
    return (PI / bound.d + bound.K * bound.d / (4.0 * PI)) ** 2


def sup_bound_maximizer(bound: BoundInput) -> Maximizer:
    kd2 = bound.kd2
    if kd2 < -4.0 * PI_SQUARED:
        return Maximizer(s=0.0, attained=False, branch=1)
    if kd2 > 4.0 * PI_SQUARED:
        return Maximizer(s=1.0, attained=False, branch=3)
    s = 0.5 + kd2 / (8.0 * PI_SQUARED)
    return Maximizer(s=s, attained=0.0 < s < 1.0, branch=2)


def oracle_tolerance(bound: BoundInput, grid_size: int = DEFAULT_ORACLE_GRID, rtol: float = 1e-6) -> float:
    """
    Agreement tolerance between `sup_bound_closed` and `sup_bound_grid`.  When the sup is not attained the
    interior grid stops 1 / (grid_size + 1) short of the endpoint, which costs at most the endpoint slope
    times that distance.
    """
    closed = sup_bound_closed(bound)
    tolerance = rtol * max(1.0, abs(closed))
    if not sup_bound_maximizer(bound).attained:
        a = 4.0 * PI_SQUARED / bound.d**2
        slope = max(abs(a + bound.K), abs(bound.K - a))
        tolerance += slope / (grid_size + 1)
    return tolerance


def branch_values(bound: BoundInput) -> typing.Tuple[float, float, float]:
    """(middle, upper, lower) branch formulas at the same point; at Kd^2 = +-4 pi^2 the middle meets its neighbour."""
    return (PI / bound.d + bound.K * bound.d / (4.0 * PI)) ** 2, bound.K, 0.0


def futaki_sano_bound(bound: BoundInput) -> float:
    return PI_SQUARED / bound.d**2 + FUTAKI_SANO_K_FACTOR * bound.K


def andrews_ni_bound(bound: BoundInput) -> float:
    # g at s = 1/2
    return PI_SQUARED / bound.d**2 + bound.K / 2.0


def zhong_yang_bound(bound: BoundInput) -> float:
    return PI_SQUARED / bound.d**2


def shi_zhang_bound(bound: BoundInput) -> float:
    """The unweighted form of the sup bound; same value, named for reports."""
    return sup_bound_closed(bound)


def myers_admissible(bound: BoundInput, n: int) -> bool:
    if n < 1:
        raise InvalidInputException(f"dimension must be positive, got n={n}")
    return bound.kd2 <= (n - 1) * PI_SQUARED


def soliton_diameter_bounds(soliton: SolitonInput) -> SolitonDiameterBounds:
    root = math.sqrt(soliton.lam)
    return SolitonDiameterBounds(
        sharp=SHARP_DIAMETER_CONSTANT * PI / root,
        futaki_sano=FUTAKI_SANO_DIAMETER_CONSTANT * PI / root,
        andrews_ni=ANDREWS_NI_DIAMETER_CONSTANT * PI / root,
    )


def soliton_objective(s: np.ndarray) -> np.ndarray:
    return 4.0 * s * (1.0 - s) / (2.0 - s)


def soliton_optimal_s(grid_size: int = DEFAULT_ORACLE_GRID) -> SolitonOptimum:
    """
    Maximizer of 4 s (1 - s) / (2 - s) on (0, 1): s* = 2 - sqrt(2) with maximum 12 - 8 sqrt(2).  The value
    at s* and the grid maximum are returned alongside so callers can confirm both.
    """
    at_star = float(soliton_objective(np.float64(SOLITON_OPTIMAL_S)))
    grid_max = float(np.max(soliton_objective(interior_grid(grid_size))))
    return SolitonOptimum(s_star=SOLITON_OPTIMAL_S, g_max=SOLITON_G_MAX, g_at_s_star=at_star, grid_max=grid_max)


def soliton_lambda_lower_bound(d: float) -> float:
    """lambda >= 4 (3 - 2 sqrt 2) pi^2 / d^2, the same statement as the diameter bound solved for lambda."""
    if not d > 0:
        raise InvalidInputException(f"diameter must be positive, got d={d}")
    return SOLITON_G_MAX * PI_SQUARED / d**2


def einstein_forced(soliton: SolitonInput, d: float) -> bool:
    """A compact shrinking soliton with diameter below 2 (sqrt 2 - 1) pi / sqrt(lambda) has constant f."""
    return d < soliton_diameter_bounds(soliton).sharp


def shrinker_diameter_bound(shrinker: ShrinkerBoundInput) -> float:
    denominator = 1.5 * shrinker.lam + 0.5 * shrinker.K0
    if denominator <= 0:
        raise InvalidInputException("3 lambda / 2 + K0 / 2 must be positive")
    return PI / math.sqrt(denominator)


def shrinker_sweep_diameter_bound(shrinker: ShrinkerBoundInput, grid_size: int = 100_000) -> SweepBound:
    """
    Solve 2 lambda >= 4 s (1 - s) pi^2 / d^2 + s (lambda - K0) for d at every interior grid point and at
    s = 1/2, and keep the largest bound.  The denominator 2 lambda - s (lambda - K0) is positive for K0 >= 0
    and s < 1.  The result is never below `shrinker_diameter_bound`.
    """
    s = interior_grid(grid_size)
    bounds = PI * np.sqrt(4.0 * s * (1.0 - s) / (2.0 * shrinker.lam - s * (shrinker.lam - shrinker.K0)))
    best = int(np.argmax(bounds))
    half = shrinker_diameter_bound(shrinker)
    if half >= bounds[best]:
        return SweepBound(d_bound=half, s=0.5)
    return SweepBound(d_bound=float(bounds[best]), s=float(s[best]))


def shrinker_bound_at(shrinker: ShrinkerBoundInput, s: float) -> float:
    return PI * math.sqrt(4.0 * s * (1.0 - s) / (2.0 * shrinker.lam - s * (shrinker.lam - shrinker.K0)))


@dataclasses.dataclass(frozen=True)
class SweepRow:
    K: float
    d: float
    closed: float
    grid: float
    tolerance: float
    branch: int

    @property
    def difference(self) -> float:
        return abs(self.closed - self.grid)

    @property
    def agrees(self) -> bool:
        return self.difference <= self.tolerance


def bound_sweep(
    K_values: typing.Iterable[float], d_values: typing.Iterable[float], grid_size: int = DEFAULT_ORACLE_GRID
) -> typing.List[SweepRow]:
    """Closed form against the grid oracle on every (K, d) pair, K varying slowest."""
    d_values = list(d_values)
    rows = []
    for K in K_values:
        for d in d_values:
            bound = BoundInput(K=float(K), d=float(d))
            rows.append(
                SweepRow(
                    K=bound.K,
                    d=bound.d,
                    closed=sup_bound_closed(bound),
                    grid=sup_bound_grid(bound, grid_size),
                    tolerance=oracle_tolerance(bound, grid_size),
                    branch=sup_bound_maximizer(bound).branch,
                )
            )
    return rows
