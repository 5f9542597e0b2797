import json

import numpy as np
import pytest

from wittengap._utility import JsonLinesWriter
from wittengap._utility import parameter_grid
from wittengap._utility import periodic_second_difference
from wittengap._utility import write_csv


def test_write_csv_with_comments(tmp_path) -> None:
    path = write_csv(tmp_path / "out" / "rows.csv", ("a", "b"), [(1, 0.1), (2, np.float64(1 / 3))], ["made here"])
    assert path.read_text().splitlines() == ["# made here", "a,b", "1,0.1", "2,0.3333333333333333"]


def test_json_lines_writer(tmp_path) -> None:
    path = tmp_path / "log.jsonl"
    with JsonLinesWriter(path) as writer:
        writer(1, 0.75, -0.25)
        writer.write({"note": "done"})
    lines = [json.loads(line) for line in path.read_text().splitlines()]
    assert lines == [{"iteration": 1, "r0": 0.75, "closure_residual": -0.25}, {"note": "done"}]


def test_json_lines_writer_outside_context(tmp_path) -> None:
    with pytest.raises(RuntimeError):
        JsonLinesWriter(tmp_path / "log.jsonl").write({})


def test_parameter_grid() -> None:
    assert parameter_grid(0.0, 1.0, 5).tolist() == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert parameter_grid(3.0, 9.0, 1).tolist() == [3.0]
    with pytest.raises(ValueError):
        parameter_grid(0.0, 1.0, 0)


def test_periodic_second_difference_of_cosine() -> None:
    n = 256
    h = 2 * np.pi / n
    values = np.cos(h * np.arange(n))
    assert np.allclose(periodic_second_difference(values, h), -values, atol=1e-4)
