import enum
import functools
import json
import logging
import pathlib
import typing

import numpy as np
import typer

from wittengap import version

from .._bounds import BoundInput
from .._bounds import ShrinkerBoundInput
from .._bounds import SolitonInput
from .._bounds import andrews_ni_bound
from .._bounds import bound_sweep
from .._bounds import einstein_forced
from .._bounds import futaki_sano_bound
from .._bounds import myers_admissible
from .._bounds import shrinker_diameter_bound
from .._bounds import shrinker_sweep_diameter_bound
from .._bounds import soliton_diameter_bounds
from .._bounds import soliton_lambda_lower_bound
from .._bounds import sup_bound_closed
from .._bounds import sup_bound_grid
from .._bounds import sup_bound_maximizer
from .._bounds import zhong_yang_bound
from .._config import RunConfig
from .._config import load_config
from .._constants import DEFAULT_CELLS
from .._constants import DEFAULT_CURVE_POINTS
from .._constants import DEFAULT_ORACLE_GRID
from .._constants import DEFAULT_OUTPUT_DIR
from .._constants import OUTPUT_ENV_VAR
from .._constants import SUMMARY_FILENAME
from .._exceptions import WittenGapException
from .._report import VerificationReport
from .._report import summarize
from .._report import write_summary
from .._shrinkers import abresch_langer_report
from .._shrinkers import circle_shrinker
from .._shrinkers import circle_shrinker_report
from .._shrinkers import export_curve_csv
from .._shrinkers import find_abresch_langer
from .._spectral import apply_weight
from .._spectral import build_icosphere
from .._spectral import build_weighted_circle
from .._spectral import circle_case
from .._spectral import circle_weighted_case
from .._spectral import export_eigenvector_csv
from .._spectral import export_off
from .._spectral import lambda1_witten
from .._spectral import sphere_case
from .._spectral import sphere_height_case
from .._sturm import BoundaryCondition
from .._sturm import dirichlet_lambda1
from .._sturm import neumann_lambda1
from .._sturm import verify_comparison
from .._sturm import verify_shift
from .._suite import CASES
from .._suite import run_suite
from .._utility import JsonLinesWriter
from .._utility import parameter_grid
from .._utility import write_csv

app = typer.Typer(name="wittengap", help="Certify Witten-Laplacian eigenvalue and diameter bounds at desk scale.")

VERBOSITY_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


@enum.unique
class SpectralCase(str, enum.Enum):
    CIRCLE = "circle"
    CIRCLE_WEIGHTED = "circle-weighted"
    SPHERE = "sphere"
    SPHERE_HEIGHT = "sphere-height"


def version_callback(value: bool):
    if value:
        typer.secho(f"wittengap version: {version}", fg=typer.colors.BRIGHT_GREEN, bold=True)
        raise typer.Exit()


def exit_on_library_error(fn):
    """
    Library failures (bad inputs the parser could not catch, solver breakdowns, shooting failures) are
    reported in red and end the process with exit code 1; usage errors stay with click and exit with 2.
    """

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except WittenGapException as exc:
            typer.secho(f"{type(exc).__name__}: {exc}", fg=typer.colors.BRIGHT_RED, bold=True, err=True)
            raise typer.Exit(code=1)

    return wrapper


def validate_positive(ctx: typer.Context, value: typing.Optional[float]) -> typing.Optional[float]:
    if not ctx.resilient_parsing and value is not None and not value > 0:
        raise typer.BadParameter(f"must be positive, got {value}")
    return value


def emit(payload: typing.Mapping[str, typing.Any]) -> None:
    typer.echo(json.dumps(payload, sort_keys=True, indent=2, allow_nan=False))


def emit_report(report: VerificationReport) -> None:
    """Print the report JSON; a failing report ends the command with exit code 1."""
    typer.echo(report.to_json(), nl=False)
    if not report.passed:
        typer.secho(f"{report.case_id} failed: {', '.join(report.failures)}", fg=typer.colors.BRIGHT_RED, err=True)
        raise typer.Exit(code=1)


@app.command()
@exit_on_library_error
def bounds(
    k: typing.Optional[float] = typer.Option(None, "--K", help="Bakry-Emery curvature lower bound."),
    d: typing.Optional[float] = typer.Option(None, "--d", callback=validate_positive, help="Diameter."),
    grid: bool = typer.Option(False, "--grid", help="Sweep the (K, d) grid and write CSV."),
    lam: typing.Optional[float] = typer.Option(None, "--lambda", callback=validate_positive),
    soliton: bool = typer.Option(False, "--soliton", help="Shrinking soliton diameter bounds for --lambda."),
    k0: typing.Optional[float] = typer.Option(None, "--K0", help="Self-shrinker K0; with --lambda."),
    oracle_grid: int = typer.Option(DEFAULT_ORACLE_GRID, "--oracle-grid", min=3),
    csv_path: typing.Optional[pathlib.Path] = typer.Option(None, "--csv", help="Write the sweep here."),
    config: typing.Optional[pathlib.Path] = typer.Option(None, "--config", exists=True, dir_okay=False),
) -> None:
    """
    Closed-form lower bounds for lambda_1, their grid oracle, and the derived diameter bounds.
    """
    if grid:
        run = load_config(config)
        rows = bound_sweep(
            parameter_grid(run.k_min, run.k_max, run.k_count),
            parameter_grid(run.d_min, run.d_max, run.d_count),
            oracle_grid,
        )
        header = ("K", "d", "sup_closed", "sup_grid", "difference", "tolerance", "branch")
        values = [(r.K, r.d, r.closed, r.grid, r.difference, r.tolerance, r.branch) for r in rows]
        if csv_path is not None:
            write_csv(csv_path, header, values)
            typer.secho(f"wrote {len(values)} rows to {csv_path}", fg=typer.colors.BRIGHT_GREEN, err=True)
        else:
            typer.echo(",".join(header))
            for row in values:
                typer.echo(",".join(repr(item) for item in row))
        if not all(r.agrees for r in rows):
            raise typer.Exit(code=1)
        return
    if soliton:
        if lam is None:
            raise typer.BadParameter("--soliton needs --lambda")
        data = soliton_diameter_bounds(SolitonInput(lam=lam))
        payload = {
            "lambda": lam,
            "sharp": data.sharp,
            "andrews_ni": data.andrews_ni,
            "futaki_sano": data.futaki_sano,
            "ordered": data.ordered,
        }
        if d is not None:
            payload["d"] = d
            payload["lambda_lower_bound"] = soliton_lambda_lower_bound(d)
            payload["einstein_forced"] = einstein_forced(SolitonInput(lam=lam), d)
        emit(payload)
        return
    if k0 is not None:
        if lam is None:
            raise typer.BadParameter("--K0 needs --lambda")
        shrinker = ShrinkerBoundInput(lam=lam, K0=k0)
        sweep = shrinker_sweep_diameter_bound(shrinker)
        emit(
            {
                "lambda": lam,
                "K0": k0,
                "d_bound": shrinker_diameter_bound(shrinker),
                "sweep_d_bound": sweep.d_bound,
                "sweep_s": sweep.s,
            }
        )
        return
    if k is None or d is None:
        raise typer.BadParameter("give --K and --d, or --grid, or --lambda with --soliton / --K0")
    bound = BoundInput(K=k, d=d)
    closed = sup_bound_closed(bound)
    maximizer = sup_bound_maximizer(bound)
    payload = {
        "K": k,
        "d": d,
        "sup_closed": closed,
        "sup_grid": sup_bound_grid(bound, oracle_grid),
        "branch": maximizer.branch,
        "s_star": maximizer.s,
        "attained": maximizer.attained,
        "andrews_ni": andrews_ni_bound(bound),
        "futaki_sano": futaki_sano_bound(bound),
        "zhong_yang": zhong_yang_bound(bound),
        "beats_andrews_ni": closed >= andrews_ni_bound(bound),
        "beats_futaki_sano": closed >= futaki_sano_bound(bound) if k >= 0 else None,
        "myers_admissible_n2": myers_admissible(bound, 2),
    }
    emit(payload)


@app.command()
@exit_on_library_error
def ou(
    k: float = typer.Option(0.0, "--K", help="Drift coefficient K of v'' - K x v'."),
    d: float = typer.Option(..., "--d", callback=validate_positive, help="Interval length."),
    m: int = typer.Option(DEFAULT_CELLS, "--m", min=8, help="Cells; Richardson uses m and 2m."),
    bc: BoundaryCondition = typer.Option(BoundaryCondition.NEUMANN, "--bc", case_sensitive=False),
    check_shift: bool = typer.Option(False, "--check-shift", help="Report |lambda^Neu - K - lambda^Dir|."),
    verify: bool = typer.Option(False, "--verify", help="Check lambda_1(L) against the sup bound."),
) -> None:
    """
    First eigenvalue of the one dimensional Ornstein-Uhlenbeck comparison operator.
    """
    if check_shift:
        emit_report(verify_shift(k, d, m))
        return
    if verify:
        emit_report(verify_comparison(k, d, m))
        return
    solve = neumann_lambda1 if bc is BoundaryCondition.NEUMANN else dirichlet_lambda1
    emit({"K": k, "d": d, "m": m, "bc": bc.value, "lambda1": solve(k, d, m)})


@app.command()
@exit_on_library_error
def spectral(
    case: SpectralCase = typer.Option(SpectralCase.CIRCLE, "--case", case_sensitive=False),
    n: int = typer.Option(1000, "--n", min=8, help="Circle vertices."),
    radius: float = typer.Option(1.0, "--radius", callback=validate_positive),
    a: float = typer.Option(0.0, "--a", help="Weight amplitude (phi = a z or a cos theta)."),
    subdivisions: int = typer.Option(5, "--subdivisions", min=0, max=7),
    export: typing.Optional[pathlib.Path] = typer.Option(
        None, "--export", help="Write the complex (.off) or the first eigenvector (.csv)."
    ),
) -> None:
    """
    First non-zero eigenvalue of the discrete Witten-Laplacian on a test manifold.
    """
    if case is SpectralCase.CIRCLE:
        report = circle_case(n, radius)
        complex_ = build_weighted_circle(n, radius)
    elif case is SpectralCase.CIRCLE_WEIGHTED:
        report = circle_weighted_case(a, n, radius)
        complex_ = build_weighted_circle(n, radius, lambda angles: a * np.cos(angles))
    elif case is SpectralCase.SPHERE:
        report = sphere_case(subdivisions)
        complex_ = build_icosphere(subdivisions)
    else:
        report = sphere_height_case(a, subdivisions)
        sphere = build_icosphere(subdivisions)
        complex_ = apply_weight(sphere, a * sphere.vertices[:, 2])
    if export is not None:
        if export.suffix.lower() == ".off":
            export_off(complex_, export)
        else:
            export_eigenvector_csv(complex_, lambda1_witten(complex_, with_diameter=False).eigenvector, export)
        typer.secho(f"exported {complex_.label} to {export}", fg=typer.colors.BRIGHT_GREEN, err=True)
    emit_report(report)


@app.command()
@exit_on_library_error
def shrinker(
    circle: bool = typer.Option(False, "--circle", help="The round circle of radius 1 / sqrt(lambda)."),
    al: typing.Tuple[int, int] = typer.Option((None, None), "--al", help="Abresch-Langer rotation p q."),
    lam: float = typer.Option(1.0, "--lambda", callback=validate_positive),
    n_points: int = typer.Option(DEFAULT_CURVE_POINTS, "--n-points", min=16),
    export: typing.Optional[pathlib.Path] = typer.Option(None, "--export", help="Curve CSV s,x,y,theta,k,phi."),
    log_path: typing.Optional[pathlib.Path] = typer.Option(None, "--log", help="Shooting log (JSON lines)."),
) -> None:
    """
    Build a closed self-shrinker curve and certify its identities and diameter bound.
    """
    if circle == (al[0] is not None):
        raise typer.BadParameter("give exactly one of --circle or --al P Q")
    if circle:
        curve = circle_shrinker(lam, n_points)
        report = circle_shrinker_report(curve)
    else:
        p, q = al
        if log_path is not None:
            with JsonLinesWriter(log_path) as writer:
                curve = find_abresch_langer(lam, p, q, n_points=n_points, hook=writer)
        else:
            curve = find_abresch_langer(lam, p, q, n_points=n_points)
        report = abresch_langer_report(curve)
    if export is not None:
        export_curve_csv(curve, export)
        typer.secho(f"exported {curve.label} to {export}", fg=typer.colors.BRIGHT_GREEN, err=True)
    emit_report(report)


@app.command("verify-all")
@exit_on_library_error
def verify_all(
    out: typing.Optional[pathlib.Path] = typer.Option(
        None, "--out", envvar=OUTPUT_ENV_VAR, file_okay=False, help=f"Report directory [default: {DEFAULT_OUTPUT_DIR}]."
    ),
    config: typing.Optional[pathlib.Path] = typer.Option(None, "--config", exists=True, dir_okay=False),
    jobs: int = typer.Option(1, "--jobs", "-j", min=1, help="Cases run in this many worker processes."),
    only: typing.List[str] = typer.Option(None, "--only", help=f"Restrict to these cases: {', '.join(CASES)}."),
) -> None:
    """
    Run the certification suite, write one JSON report per case plus a summary; exit 0 iff every case passes.
    """
    run: RunConfig = load_config(config).merge(out=str(out) if out is not None else None)
    reports = run_suite(run, jobs=jobs, only=only or None)
    directory = pathlib.Path(run.out)
    for report in reports:
        report.write(directory)
    summary = summarize(reports)
    write_summary(summary, directory / SUMMARY_FILENAME)
    colour = typer.colors.BRIGHT_GREEN if not summary["failed"] else typer.colors.BRIGHT_RED
    typer.secho(f"{summary['passed']}/{summary['total']} cases passed; reports in {directory}", fg=colour, bold=True)
    if summary["failed"]:
        typer.secho(f"first failing case: {summary['failing_cases'][0]}", fg=typer.colors.BRIGHT_RED, err=True)
        raise typer.Exit(code=1)


@app.callback()
def main(
    version: bool = typer.Option(None, "--version", callback=version_callback, is_eager=True),
    verbosity: int = typer.Option(0, "-v", count=True, help="-v for INFO, -vv for DEBUG logging."),
):
    """
    Numerical certification of Witten-Laplacian eigenvalue lower bounds and the diameter bounds they imply.
    """
    logging.basicConfig(
        level=VERBOSITY_LEVELS[min(verbosity, len(VERBOSITY_LEVELS) - 1)],
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
