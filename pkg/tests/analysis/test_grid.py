from __future__ import annotations

import math

import numpy as np
import pytest

from omentangle.analysis import Axis, ScanGrid
from omentangle.exceptions import InvalidArgumentError


class TestAxis:
    def test_linspace(self):
        axis = Axis.linspace("chi", 0.0, 1.0, 5)
        assert axis.values == (0.0, 0.25, 0.5, 0.75, 1.0)
        assert (axis.start, axis.stop, axis.steps) == (0.0, 1.0, 5)

    def test_single_step(self):
        assert Axis.linspace("r", 0.3, 0.9, 1).values == (0.3,)

    def test_scaled(self):
        assert Axis("phi", [0.5, 1.0]).scaled(math.pi).values == (math.pi / 2, math.pi)

    @pytest.mark.parametrize("values", [[], [0.0, math.inf]])
    def test_rejects_bad_values(self, values):
        with pytest.raises(InvalidArgumentError):
            Axis("chi", values)

    def test_rejects_zero_steps(self):
        with pytest.raises(InvalidArgumentError):
            Axis.linspace("chi", 0.0, 1.0, 0)


class TestScanGrid:
    @pytest.fixture
    def grid(self):
        return ScanGrid(
            axes=(Axis("chi", [1.0, 2.0]), Axis("r", [0.0, 0.5, 1.0])),
            values=[[0.1, 0.4, 0.2], [0.3, 0.4, 0.0]],
        )

    def test_argmax_takes_the_first_tie(self, grid):
        assert grid.argmax() == ((1.0, 0.5), 0.4)

    def test_rows_are_row_major(self, grid):
        rows = list(grid.rows())
        assert rows[0] == (1.0, 0.0, 0.1)
        assert rows[3] == (2.0, 0.0, 0.3)
        assert len(rows) == 6

    def test_names(self, grid):
        assert grid.names == ("chi", "r")

    def test_shape_must_match(self):
        with pytest.raises(InvalidArgumentError):
            ScanGrid(axes=(Axis("chi", [1.0, 2.0]),), values=np.zeros(3))

    def test_values_are_non_negative(self):
        with pytest.raises(InvalidArgumentError):
            ScanGrid(axes=(Axis("chi", [1.0]),), values=[-0.1])
