import logging

import importlib_metadata

from ._bounds import BoundInput
from ._bounds import ShrinkerBoundInput
from ._bounds import SolitonInput
from ._bounds import andrews_ni_bound
from ._bounds import bound_sweep
from ._bounds import branch_values
from ._bounds import einstein_forced
from ._bounds import futaki_sano_bound
from ._bounds import myers_admissible
from ._bounds import shi_zhang_bound
from ._bounds import shrinker_diameter_bound
from ._bounds import shrinker_sweep_diameter_bound
from ._bounds import soliton_diameter_bounds
from ._bounds import soliton_lambda_lower_bound
from ._bounds import soliton_optimal_s
from ._bounds import sup_bound_closed
from ._bounds import sup_bound_grid
from ._bounds import sup_bound_maximizer
from ._bounds import zhong_yang_bound
from ._config import RunConfig
from ._config import load_config
from ._exceptions import BracketException
from ._exceptions import ConfigException
from ._exceptions import InvalidInputException
from ._exceptions import LanczosConvergenceException
from ._exceptions import MeasureUnderflowException
from ._exceptions import ResolutionException
from ._exceptions import ShootingException
from ._exceptions import SolverException
from ._exceptions import StructuralException
from ._exceptions import TrivialShrinkerException
from ._exceptions import WittenGapException
from ._report import VerificationReport
from ._report import summarize
from ._shrinkers import ShootingConfig
from ._shrinkers import ShrinkerCurve
from ._shrinkers import SolitonPointCheck
from ._shrinkers import circle_shrinker
from ._shrinkers import eigen_identity_residual
from ._shrinkers import export_curve_csv
from ._shrinkers import find_abresch_langer
from ._shrinkers import gaussian_soliton_check
from ._shrinkers import integrate_shrinker
from ._shrinkers import k0_and_diameter
from ._shrinkers import mean_curvature_identity_residual
from ._shrinkers import potential_phi
from ._shrinkers import verify_shrinker_diameter
from ._spectral import SpectralResult
from ._spectral import WeightedComplex
from ._spectral import apply_weight
from ._spectral import build_icosphere
from ._spectral import build_weighted_circle
from ._spectral import graph_diameter
from ._spectral import lambda1_witten
from ._spectral import rayleigh_ritz
from ._spectral import sphere_height_case
from ._spectral import witten_apply
from ._sturm import BoundaryCondition
from ._sturm import OUProblem
from ._sturm import dirichlet_lambda1
from ._sturm import neumann_lambda1
from ._sturm import ou_mode
from ._suite import run_suite

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


# importlib_metadata is necessary here for backwards compat with mkdocs.
version = importlib_metadata.version("wittengap")  # type: ignore [attr-defined]


__all__ = [
    "version",
    "BoundInput",
    "SolitonInput",
    "ShrinkerBoundInput",
    "sup_bound_closed",
    "sup_bound_grid",
    "sup_bound_maximizer",
    "branch_values",
    "bound_sweep",
    "futaki_sano_bound",
    "andrews_ni_bound",
    "zhong_yang_bound",
    "shi_zhang_bound",
    "myers_admissible",
    "soliton_diameter_bounds",
    "soliton_optimal_s",
    "soliton_lambda_lower_bound",
    "einstein_forced",
    "shrinker_diameter_bound",
    "shrinker_sweep_diameter_bound",
    "BoundaryCondition",
    "OUProblem",
    "ou_mode",
    "neumann_lambda1",
    "dirichlet_lambda1",
    "WeightedComplex",
    "SpectralResult",
    "build_weighted_circle",
    "build_icosphere",
    "apply_weight",
    "witten_apply",
    "lambda1_witten",
    "rayleigh_ritz",
    "graph_diameter",
    "sphere_height_case",
    "ShrinkerCurve",
    "ShootingConfig",
    "SolitonPointCheck",
    "circle_shrinker",
    "integrate_shrinker",
    "find_abresch_langer",
    "potential_phi",
    "mean_curvature_identity_residual",
    "eigen_identity_residual",
    "k0_and_diameter",
    "verify_shrinker_diameter",
    "gaussian_soliton_check",
    "export_curve_csv",
    "VerificationReport",
    "summarize",
    "RunConfig",
    "load_config",
    "run_suite",
    "WittenGapException",
    "InvalidInputException",
    "MeasureUnderflowException",
    "SolverException",
    "LanczosConvergenceException",
    "StructuralException",
    "ShootingException",
    "BracketException",
    "ResolutionException",
    "TrivialShrinkerException",
    "ConfigException",
]
