from __future__ import annotations

import io

import numpy as np
import pytest
from numpy.testing import assert_array_equal

from omentangle.analysis import Axis, ScanGrid
from omentangle.exceptions import InvalidArgumentError
from omentangle.io import VALUE_COLUMN, format_number, read_grid_csv, write_csv, write_grid_csv, write_json


@pytest.fixture
def grid():
    values = np.array([[0.0, 1.0 / 3.0, 2.0 / 3.0], [1.2345678901234, 0.5, 0.25]])
    return ScanGrid(axes=(Axis("chi", [1.0, 2.5]), Axis("r", [0.0, 0.1, 0.2])), values=values)


def test_format_number():
    assert format_number(3.0) == "3"
    assert format_number(1e-20) == "1e-20"
    assert format_number(np.pi) == "3.141592653589793"
    assert float(format_number(0.1 + 0.2)) == 0.1 + 0.2


def test_write_csv():
    stream = io.StringIO()
    write_csv(stream, ["chi", "label", "flag"], [[1.0, "a", True], [np.float64(0.5), "b", False]])
    assert stream.getvalue() == "chi,label,flag\n1,a,True\n0.5,b,False\n"


def test_grid_csv_layout(grid):
    stream = io.StringIO()
    write_grid_csv(stream, grid)
    lines = stream.getvalue().splitlines()
    assert lines[0] == f"chi,r,{VALUE_COLUMN}"
    assert lines[2] == "1,0.1,0.3333333333333333"
    assert len(lines) == 7


def test_grid_csv_is_read_back(grid):
    stream = io.StringIO()
    write_grid_csv(stream, grid)
    stream.seek(0)
    restored = read_grid_csv(stream)
    assert restored.names == grid.names
    assert restored.axes == grid.axes
    assert_array_equal(restored.values, grid.values)


@pytest.mark.parametrize(
    "axes",
    [
        (Axis("phi", [0.0, 1.0, 0.0]), Axis("psi", [0.5, 0.25, 0.5])),
        (Axis("chi", [2.0, 2.0]), Axis("r", [0.1, 0.3])),
        (Axis("chi", [3.0]), Axis("r", [0.2, 0.2, 0.7])),
    ],
)
def test_repeated_axis_values_are_read_back(axes):
    shape = tuple(len(axis) for axis in axes)
    grid = ScanGrid(axes=axes, values=np.arange(np.prod(shape), dtype=np.float64).reshape(shape) / 7.0)
    stream = io.StringIO()
    write_grid_csv(stream, grid)
    stream.seek(0)
    restored = read_grid_csv(stream)
    assert restored.axes == grid.axes
    assert_array_equal(restored.values, grid.values)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "chi,r\n1,2\n",
        "chi,log_negativity\n",
        "chi,log_negativity\n1,x\n",
        "chi,log_negativity\n1,0.5,3\n",
        "chi,r,log_negativity\n1,0,0.5\n2,1,0.5\n",
    ],
)
def test_read_rejects_malformed_files(text):
    with pytest.raises(InvalidArgumentError):
        read_grid_csv(io.StringIO(text))


def test_write_json():
    stream = io.StringIO()
    write_json(stream, {"b": 1, "a": [0.5]})
    assert stream.getvalue().startswith('{\n  "b": 1,')
    assert stream.getvalue().endswith("}\n")
