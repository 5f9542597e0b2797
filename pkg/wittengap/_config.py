"""
Run configuration for the verification suite.

Configuration files are flat `key = value` text; `#` starts a comment and blank lines are ignored.  Tuple
valued keys take comma separated numbers:

    # coarser, faster run
    ou_cells = 1000
    sphere_heights = 0, 0.5
"""
from __future__ import annotations

import dataclasses
import pathlib
import typing

from ._constants import DEFAULT_CELLS
from ._constants import DEFAULT_CURVE_POINTS
from ._constants import DEFAULT_ORACLE_GRID
from ._constants import DEFAULT_OUTPUT_DIR
from ._constants import MAX_SUBDIVISIONS
from ._constants import MIN_CELLS
from ._constants import MIN_CURVE_POINTS
from ._constants import MIN_ORACLE_GRID
from ._constants import PI
from ._exceptions import ConfigException
from ._types import PATH_ALIAS


@dataclasses.dataclass(frozen=True)
class RunConfig:
    # bounds sweep
    k_min: float = -10.0
    k_max: float = 10.0
    k_count: int = 50
    d_min: float = 0.1
    d_max: float = 20.0
    d_count: int = 50
    oracle_grid: int = DEFAULT_ORACLE_GRID
    # Ornstein-Uhlenbeck
    ou_cells: int = DEFAULT_CELLS
    ou_K: typing.Tuple[float, ...] = (-2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 5.0)
    ou_d: typing.Tuple[float, ...] = (0.5, 1.0, 2.0, PI, 5.0)
    ou_exact_d: typing.Tuple[float, ...] = (1.0, 2.0, PI, 5.0)
    # weighted complexes
    circle_n: int = 1000
    circle_radii: typing.Tuple[float, ...] = (1.0, 2.0)
    circle_weight: float = 0.5
    subdivisions: int = 5
    sphere_heights: typing.Tuple[float, ...] = (0.0, 0.3, 0.5, 0.9)
    shift_subdivisions: int = 3
    # shrinkers
    shrinker_lambda: float = 1.0
    al_p: int = 2
    al_q: int = 3
    curve_points: int = DEFAULT_CURVE_POINTS
    soliton_n: int = 3
    soliton_lambda: float = 0.5
    soliton_samples: int = 20
    seed: int = 3
    # output
    out: str = DEFAULT_OUTPUT_DIR

    def __post_init__(self) -> None:
        if self.k_min > self.k_max or not 0 < self.d_min <= self.d_max:
            raise ConfigException("bound sweep ranges must be nonempty with positive diameters")
        if self.k_count < 1 or self.d_count < 1 or self.soliton_samples < 1:
            raise ConfigException("grid counts must be at least 1")
        if self.oracle_grid < MIN_ORACLE_GRID:
            raise ConfigException(f"oracle_grid must be at least {MIN_ORACLE_GRID}")
        if self.ou_cells < MIN_CELLS:
            raise ConfigException(f"ou_cells must be at least {MIN_CELLS}")
        if not (self.ou_K and self.ou_d and self.ou_exact_d and self.circle_radii):
            raise ConfigException("parameter lists must not be empty")
        if not 0 <= self.subdivisions <= MAX_SUBDIVISIONS or not 0 <= self.shift_subdivisions <= MAX_SUBDIVISIONS:
            raise ConfigException(f"subdivisions must lie in [0, {MAX_SUBDIVISIONS}]")
        if any(abs(a) >= 1 for a in self.sphere_heights):
            raise ConfigException("sphere heights need |a| < 1")
        if self.curve_points < MIN_CURVE_POINTS or self.circle_n < 8:
            raise ConfigException("curve resolutions are below their minimum")

    def merge(self, **overrides: typing.Any) -> RunConfig:
        """A copy with every override that is not None applied; flags take precedence over file values."""
        return dataclasses.replace(self, **{key: value for key, value in overrides.items() if value is not None})


def _coerce(key: str, raw: str, annotation: typing.Any) -> typing.Any:
    try:
        if annotation is int:
            return int(raw)
        if annotation is float:
            return float(raw)
        if annotation is str:
            return raw
        return tuple(float(item) for item in raw.split(",") if item.strip())
    except ValueError as exc:
        raise ConfigException(f"{key}: cannot interpret {raw!r}") from exc


def parse_config(text: str) -> typing.Dict[str, typing.Any]:
    hints = typing.get_type_hints(RunConfig)
    values: typing.Dict[str, typing.Any] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", maxsplit=1)[0].strip()
        if not line:
            continue
        key, separator, raw = line.partition("=")
        key, raw = key.strip(), raw.strip()
        if not separator or not key:
            raise ConfigException(f"line {number}: expected `key = value`, got {line!r}")
        if key not in hints:
            raise ConfigException(f"line {number}: unknown key {key!r}")
        values[key] = _coerce(key, raw, hints[key])
    return values


def load_config(path: typing.Optional[PATH_ALIAS] = None) -> RunConfig:
    if path is None:
        return RunConfig()
    path = pathlib.Path(path)
    if not path.is_file():
        raise ConfigException(f"configuration file {path} does not exist")
    return RunConfig(**parse_config(path.read_text(encoding="utf-8")))
