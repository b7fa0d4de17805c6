"""
Machine-readable output.

CSV files use ``.`` as the decimal separator, ``\\n`` line endings and the
shortest decimal form that reads back to the same double. Rows of a scan follow
its axes in row-major order, so a file read back with :func:`read_grid_csv`
rebuilds the same grid.
"""

from __future__ import annotations

import csv
import json
from typing import TYPE_CHECKING, Any

import numpy as np

from omentangle.analysis import Axis, ScanGrid
from omentangle.exceptions import InvalidArgumentError

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping, Sequence
    from typing import TextIO

    from omentangle.math import Matrix

__all__ = [
    "VALUE_COLUMN",
    "format_number",
    "write_csv",
    "write_grid_csv",
    "read_grid_csv",
    "write_json",
]

VALUE_COLUMN = "log_negativity"


def format_number(value: float) -> str:
    """Shortest text that parses back to the same double; integral values drop the ``.0``.

    >>> format_number(2.0 / 3.0)
    '0.6666666666666666'
    """
    text = repr(float(value))
    return text.removesuffix(".0")


def _cell(value: Any) -> str:
    if isinstance(value, bool) or not isinstance(value, (int, float, np.floating)):
        return str(value)
    return format_number(float(value))


def write_csv(stream: TextIO, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(value) for value in row])


def write_grid_csv(stream: TextIO, grid: ScanGrid) -> None:
    write_csv(stream, [*grid.names, VALUE_COLUMN], grid.rows())


def _axes(names: Sequence[str], table: Matrix) -> tuple[Axis, ...]:
    """Recover the axes of a row-major table, innermost first.

    Each axis takes the shortest period its column allows, so an axis that repeats its own
    sequence of values is read back as the shorter one.
    """
    n_rows = table.shape[0]
    axes: list[Axis] = []
    inner = 1
    for k in reversed(range(len(names))):
        column = table[:, k]
        span = n_rows // inner
        sizes = [span] if k == 0 else [size for size in range(1, span + 1) if span % size == 0]
        for size in sizes:
            values = column[: size * inner : inner]
            if np.array_equal(column, np.tile(np.repeat(values, inner), span // size)):
                break
        else:
            raise InvalidArgumentError(f"Column {names[k]!r} does not follow a row-major grid")
        axes.insert(0, Axis(names[k], values.tolist()))
        inner *= size
    return tuple(axes)


def read_grid_csv(stream: TextIO) -> ScanGrid:
    """Rebuild a grid from :func:`write_grid_csv` output."""
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise InvalidArgumentError("Empty grid file") from None
    if not header or header[-1] != VALUE_COLUMN:
        raise InvalidArgumentError(f"Expected a {VALUE_COLUMN!r} column last, got {header}")

    try:
        table = np.array([[float(cell) for cell in row] for row in reader if row], dtype=np.float64)
    except ValueError as exc:
        raise InvalidArgumentError(f"Malformed grid rows: {exc}") from exc
    if table.ndim != 2 or table.shape[1] != len(header):
        raise InvalidArgumentError("Grid file has no rows or ragged rows")

    axes = _axes(header[:-1], table)
    shape = tuple(len(axis) for axis in axes)
    return ScanGrid(axes=axes, values=table[:, -1].reshape(shape))


def write_json(stream: TextIO, payload: Mapping[str, Any]) -> None:
    json.dump(payload, stream, indent=2, sort_keys=False)
    stream.write("\n")
