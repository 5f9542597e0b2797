"""
The certification suite run by `wittengap verify-all`.

Every case is a module level function of the `RunConfig` returning one or more reports, registered in `CASES`
under a stable name.  Cases are independent; with more than one job they run in a process pool and the
collected reports are ordered by case_id, so the written output does not depend on scheduling.
"""
from __future__ import annotations

import logging
import multiprocessing
import typing

from ._bounds import BoundInput
from ._bounds import SolitonInput
from ._bounds import bound_sweep
from ._bounds import branch_values
from ._bounds import soliton_diameter_bounds
from ._bounds import soliton_optimal_s
from ._config import RunConfig
from ._constants import ANDREWS_NI_DIAMETER_CONSTANT
from ._constants import FUTAKI_SANO_DIAMETER_CONSTANT
from ._constants import PI
from ._constants import PI_SQUARED
from ._constants import SHARP_DIAMETER_CONSTANT
from ._constants import SOLITON_G_MAX
from ._exceptions import InvalidInputException
from ._exceptions import WittenGapException
from ._report import VerificationReport
from ._shrinkers import abresch_langer_case
from ._shrinkers import circle_shrinker_case
from ._shrinkers import gaussian_soliton_case
from ._spectral import circle_case
from ._spectral import circle_weighted_case
from ._spectral import sphere_case
from ._spectral import sphere_height_case
from ._spectral import weight_shift_case
from ._sturm import BoundaryCondition
from ._sturm import convergence_ratio
from ._sturm import dirichlet_lambda1
from ._sturm import neumann_lambda1
from ._sturm import verify_comparison
from ._sturm import verify_shift
from ._utility import parameter_grid

log = logging.getLogger(__name__)

CASE_ALIAS = typing.Callable[[RunConfig], typing.List[VerificationReport]]


def bounds_grid(config: RunConfig) -> typing.List[VerificationReport]:
    rows = bound_sweep(
        parameter_grid(config.k_min, config.k_max, config.k_count),
        parameter_grid(config.d_min, config.d_max, config.d_count),
        config.oracle_grid,
    )
    worst = min(rows, key=lambda row: row.tolerance - row.difference)
    return [
        VerificationReport(
            case_id="bounds-grid",
            inputs={"K_min": config.k_min, "K_max": config.k_max, "d_min": config.d_min, "d_max": config.d_max},
            computed={
                "points": float(len(rows)),
                "max_difference": max(row.difference for row in rows),
                "worst_K": worst.K,
                "worst_d": worst.d,
                "disagreements": float(sum(not row.agrees for row in rows)),
            },
            margins={"oracle": worst.tolerance - worst.difference},
        )
    ]


def bounds_continuity(config: RunConfig) -> typing.List[VerificationReport]:
    """At K d^2 = 4 pi^2 the middle branch meets K, at K d^2 = -4 pi^2 it meets 0."""
    margins, computed = {}, {}
    for d in (0.5, 1.0, PI, 7.0):
        upper = branch_values(BoundInput(K=4.0 * PI_SQUARED / d**2, d=d))
        lower = branch_values(BoundInput(K=-4.0 * PI_SQUARED / d**2, d=d))
        computed[f"upper_gap_d{d:g}"] = abs(upper[0] - upper[1])
        computed[f"lower_gap_d{d:g}"] = abs(lower[0] - lower[2])
        margins[f"upper_d{d:g}"] = 1e-12 * max(1.0, abs(upper[1])) - computed[f"upper_gap_d{d:g}"]
        margins[f"lower_d{d:g}"] = 1e-12 - computed[f"lower_gap_d{d:g}"]
    return [VerificationReport(case_id="bounds-continuity", computed=computed, margins=margins)]


def constants_ledger(config: RunConfig) -> typing.List[VerificationReport]:
    soliton = soliton_diameter_bounds(SolitonInput(lam=1.0))
    return [
        VerificationReport(
            case_id="constants-ledger",
            computed={
                "sharp": SHARP_DIAMETER_CONSTANT,
                "andrews_ni": ANDREWS_NI_DIAMETER_CONSTANT,
                "futaki_sano": FUTAKI_SANO_DIAMETER_CONSTANT,
                "ordered": float(soliton.ordered),
            },
            bounds={
                "sharp": soliton.sharp,
                "andrews_ni": soliton.andrews_ni,
                "futaki_sano": soliton.futaki_sano,
            },
            margins={
                "sharp_over_andrews_ni": SHARP_DIAMETER_CONSTANT - ANDREWS_NI_DIAMETER_CONSTANT,
                "andrews_ni_over_futaki_sano": ANDREWS_NI_DIAMETER_CONSTANT - FUTAKI_SANO_DIAMETER_CONSTANT,
            },
        )
    ]


def soliton_optimum(config: RunConfig) -> typing.List[VerificationReport]:
    optimum = soliton_optimal_s(config.oracle_grid)
    at_star = abs(optimum.g_at_s_star - SOLITON_G_MAX)
    return [
        VerificationReport(
            case_id="soliton-optimal-s",
            inputs={"grid": float(config.oracle_grid)},
            computed={"s_star": optimum.s_star, "g_at_s_star": optimum.g_at_s_star, "grid_max": optimum.grid_max},
            bounds={"g_max": SOLITON_G_MAX},
            margins={"closed_form": 1e-12 - at_star, "grid": 1e-12 - (optimum.grid_max - SOLITON_G_MAX)},
        )
    ]


def ou_exactness(config: RunConfig) -> typing.List[VerificationReport]:
    """K = 0 reduces to v'' = -lambda v whose first eigenvalue pi^2 / d^2 is known for both conditions."""
    computed, margins = {}, {}
    for d in config.ou_exact_d:
        exact = PI_SQUARED / d**2
        for name, value in (
            ("neumann", neumann_lambda1(0.0, d, config.ou_cells)),
            ("dirichlet", dirichlet_lambda1(0.0, d, config.ou_cells)),
        ):
            error = abs(value - exact) / exact
            computed[f"{name}_rel_error_d{d:g}"] = error
            margins[f"{name}_d{d:g}"] = 1e-6 - error
    for bc in BoundaryCondition:
        ratio = convergence_ratio(0.0, 2.0, 100, bc)
        computed[f"ratio_{bc.value}"] = ratio
        margins[f"ratio_{bc.value}"] = 0.5 - abs(ratio - 4.0)
    return [
        VerificationReport(
            case_id="ou-exactness", inputs={"m": float(config.ou_cells)}, computed=computed, margins=margins
        )
    ]


def ou_shift(config: RunConfig) -> typing.List[VerificationReport]:
    return [verify_shift(K, d, config.ou_cells) for K in config.ou_K for d in config.ou_d]


def ou_comparison(config: RunConfig) -> typing.List[VerificationReport]:
    return [verify_comparison(K, d, config.ou_cells) for K in config.ou_K for d in config.ou_d]


def circles(config: RunConfig) -> typing.List[VerificationReport]:
    reports = [circle_case(config.circle_n, radius) for radius in config.circle_radii]
    return reports + [circle_weighted_case(config.circle_weight, config.circle_n)]


def spheres(config: RunConfig) -> typing.List[VerificationReport]:
    reports = [sphere_case(config.subdivisions)]
    reports += [sphere_height_case(a, config.subdivisions) for a in config.sphere_heights]
    return reports + [weight_shift_case(subdivisions=config.shift_subdivisions)]


def shrinkers(config: RunConfig) -> typing.List[VerificationReport]:
    return [
        circle_shrinker_case(config.shrinker_lambda),
        abresch_langer_case(config.shrinker_lambda, config.al_p, config.al_q, config.curve_points),
    ]


def gaussian_soliton(config: RunConfig) -> typing.List[VerificationReport]:
    return [gaussian_soliton_case(config.soliton_n, config.soliton_lambda, config.soliton_samples, config.seed)]


CASES: typing.Dict[str, CASE_ALIAS] = {
    "bounds-grid": bounds_grid,
    "bounds-continuity": bounds_continuity,
    "constants-ledger": constants_ledger,
    "soliton-optimal-s": soliton_optimum,
    "ou-exactness": ou_exactness,
    "ou-shift": ou_shift,
    "ou-comparison": ou_comparison,
    "circles": circles,
    "spheres": spheres,
    "shrinkers": shrinkers,
    "gaussian-soliton": gaussian_soliton,
}


def run_case(name: str, config: RunConfig) -> typing.List[VerificationReport]:
    """Run one registered case; a library error becomes a single failing report named after the case."""
    log.info("running %s", name)
    try:
        reports = CASES[name](config)
    except WittenGapException as exc:
        log.warning("%s raised %s: %s", name, type(exc).__name__, exc)
        reports = [
            VerificationReport(case_id=name, margins={"completed": -1.0}, notes=(f"{type(exc).__name__}: {exc}",))
        ]
    for report in reports:
        log.info("%s: %s", report.case_id, "pass" if report.passed else f"FAIL {report.failures}")
    return reports


def _run_packed(arguments: typing.Tuple[str, RunConfig]) -> typing.List[VerificationReport]:
    return run_case(*arguments)


def run_suite(
    config: typing.Optional[RunConfig] = None, jobs: int = 1, only: typing.Optional[typing.Sequence[str]] = None
) -> typing.List[VerificationReport]:
    config = config or RunConfig()
    names = list(only) if only else list(CASES)
    unknown = sorted(set(names) - set(CASES))
    if unknown:
        raise InvalidInputException(f"unknown cases {unknown}; choose from {sorted(CASES)}")
    if jobs < 1:
        raise InvalidInputException(f"jobs must be at least 1, got {jobs}")
    if jobs == 1:
        batches = [run_case(name, config) for name in names]
    else:
        with multiprocessing.Pool(min(jobs, len(names))) as pool:
            batches = pool.map(_run_packed, [(name, config) for name in names])
    return sorted((report for batch in batches for report in batch), key=lambda report: report.case_id)


def failing(reports: typing.Iterable[VerificationReport]) -> typing.List[str]:
    return [report.case_id for report in reports if not report.passed]