import math

import pytest

from wittengap import ConfigException
from wittengap import RunConfig
from wittengap import load_config
from wittengap._config import parse_config


def test_defaults() -> None:
    config = RunConfig()
    assert config.oracle_grid == 1_000_000
    assert config.ou_K == (-2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 5.0)
    assert config.ou_d == (0.5, 1.0, 2.0, math.pi, 5.0)
    assert config.out == "reports"


def test_parse_config() -> None:
    text = """
    # coarse run
    ou_cells = 500
    k_min = -2.5   # trailing comment
    sphere_heights = 0, 0.5
    out = build/reports
    """
    assert parse_config(text) == {
        "ou_cells": 500,
        "k_min": -2.5,
        "sphere_heights": (0.0, 0.5),
        "out": "build/reports",
    }


@pytest.mark.parametrize(
    "text, message",
    [
        ("colour = red", "line 1: unknown key 'colour'"),
        ("ou_cells", "line 1: expected `key = value`, got 'ou_cells'"),
        ("ou_cells = many", "ou_cells: cannot interpret 'many'"),
    ],
)
def test_parse_config_errors(text, message) -> None:
    with pytest.raises(ConfigException) as exc:
        parse_config(text)
    assert exc.value.args[0] == message


def test_load_config(tmp_path) -> None:
    path = tmp_path / "run.cfg"
    path.write_text("subdivisions = 3\nal_q = 5\n")
    config = load_config(path)
    assert (config.subdivisions, config.al_q, config.al_p) == (3, 5, 2)


def test_load_config_defaults_without_path() -> None:
    assert load_config() == RunConfig()


def test_load_config_missing_file(tmp_path) -> None:
    with pytest.raises(ConfigException):
        load_config(tmp_path / "absent.cfg")


@pytest.mark.parametrize(
    "overrides",
    [{"k_min": 1.0, "k_max": 0.0}, {"ou_cells": 4}, {"sphere_heights": (1.0,)}, {"subdivisions": 9}, {"ou_K": ()}],
)
def test_invalid_configuration(overrides) -> None:
    with pytest.raises(ConfigException):
        RunConfig(**overrides)


def test_merge_ignores_unset_flags() -> None:
    merged = RunConfig(ou_cells=500).merge(ou_cells=None, out="elsewhere")
    assert (merged.ou_cells, merged.out) == (500, "elsewhere")
