"""
:: WittenGapException
    :: InvalidInputException
    :: MeasureUnderflowException
    :: SolverException
        :: LanczosConvergenceException
    :: StructuralException
    :: ShootingException
        :: BracketException
        :: ResolutionException
    :: TrivialShrinkerException
    :: ConfigException
"""
import typing


class WittenGapException(Exception):
    """Generic wittengap exception, everything will stem from this"""


class InvalidInputException(WittenGapException, ValueError):
    """Raised when an input violates the precondition of a bound, solver or constructor"""


class MeasureUnderflowException(WittenGapException):
    """Raised when a weight exponent would under/overflow binary64 and destroy positivity of the pencil"""


class SolverException(WittenGapException):
    """Raised when an eigen-solver does not reach its residual tolerance"""

    def __init__(self, message: str, residual: typing.Optional[float] = None) -> None:
        super().__init__(message)
        self.residual = residual


class LanczosConvergenceException(SolverException):
    """Raised when block Lanczos hits its iteration cap, carrying the best Ritz estimate so far"""

    def __init__(self, message: str, residual: typing.Optional[float] = None, estimate: float = float("nan")) -> None:
        super().__init__(message, residual)
        self.estimate = estimate


class StructuralException(WittenGapException):
    """Raised when a weighted complex is not connected"""


class ShootingException(WittenGapException):
    """Base for failures while constructing shrinker curves"""


class BracketException(ShootingException):
    """Raised when the closure functional has the same sign at both ends of the initial-radius bracket"""

    def __init__(self, message: str, bracket: typing.Tuple[float, float] = (float("nan"), float("nan"))) -> None:
        super().__init__(message)
        self.bracket = bracket


class ResolutionException(ShootingException):
    """Raised when the curvature magnitude exceeds 1/(10h) and the step no longer resolves the curve"""


class TrivialShrinkerException(WittenGapException):
    """Raised when the round circle (phi = 0) is fed to a check that excludes the trivial case"""


class ConfigException(WittenGapException):
    """Raised when a flat key = value configuration file cannot be parsed"""
