from __future__ import annotations

import csv
import json
import pathlib
import typing

import numpy as np

from ._types import ARRAY_ALIAS
from ._types import PATH_ALIAS


def write_csv(
    path: PATH_ALIAS,
    header: typing.Sequence[str],
    rows: typing.Iterable[typing.Sequence[typing.Any]],
    comments: typing.Sequence[str] = (),
) -> pathlib.Path:
    """
    Write rows to `path` as comma separated values.  Each entry of `comments` is emitted as a leading
    `# ` line before the header; floats are written with `repr` precision.
    """
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as file:
        for comment in comments:
            file.write(f"# {comment}\n")
        writer = csv.writer(file, delimiter=",", lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(float(item)) if isinstance(item, (float, np.floating)) else item for item in row])
    return path


class JsonLinesWriter:
    """
    Append one JSON object per line.  Instances are callable with `(iteration, r0, closure_residual)` so they
    can be handed to the shooting routine as its progress hook.
    """

    def __init__(self, path: PATH_ALIAS) -> None:
        self.path = pathlib.Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._file: typing.Optional[typing.TextIO] = None

    def __enter__(self) -> JsonLinesWriter:
        self._file = open(self.path, "w", encoding="utf-8")
        return self

    def __exit__(self, *exc_info: typing.Any) -> None:
        if self._file is not None:
            self._file.close()
            self._file = None

    def write(self, record: typing.Mapping[str, typing.Any]) -> None:
        if self._file is None:
            raise RuntimeError("JsonLinesWriter must be used as a context manager")
        self._file.write(json.dumps(dict(record), sort_keys=True) + "\n")

    def __call__(self, iteration: int, r0: float, closure_residual: float) -> None:
        self.write({"iteration": iteration, "r0": r0, "closure_residual": closure_residual})


def parameter_grid(low: float, high: float, count: int) -> ARRAY_ALIAS:
    """`count` equispaced values covering [low, high] inclusive; a single value when count is 1."""
    if count < 1:
        raise ValueError(f"a grid needs at least one point, got {count}")
    if count == 1:
        return np.array([float(low)])
    return np.linspace(low, high, count)


def periodic_second_difference(values: ARRAY_ALIAS, h: float) -> ARRAY_ALIAS:
    return (np.roll(values, -1) - 2.0 * values + np.roll(values, 1)) / (h * h)
