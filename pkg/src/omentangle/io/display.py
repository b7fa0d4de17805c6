from __future__ import annotations

import math
from typing import TYPE_CHECKING

from rich.table import Table

from omentangle.analysis import TABLE_COLUMNS, Target
from omentangle.protocols import ProtocolKind

from .tables import format_number

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from omentangle.analysis import EfficiencyThreshold, ScanGrid

__all__ = [
    "column_key",
    "grid_summary",
    "threshold_table",
    "rows_table",
]


def column_key(target: Target, theta: float | None) -> str:
    """Name of an efficiency-table column, angles in units of pi.

    >>> column_key(Target.GENERATE, math.pi / 2)
    'theta_0.5pi'
    """
    if target is Target.VERIFY:
        return "verify"
    return f"theta_{format_number((theta or 0.0) / math.pi)}pi"


def grid_summary(grid: ScanGrid, title: str | None = None) -> Table:
    """Coordinates and value of the grid maximum."""
    coords, value = grid.argmax()
    table = Table(title=title)
    for name in grid.names:
        table.add_column(name, justify="right")
    table.add_column("max log_negativity", justify="right", style="bold")
    table.add_row(*(format_number(x) for x in coords), format_number(value))
    return table


def threshold_table(thresholds: Iterable[EfficiencyThreshold]) -> Table:
    """Minimum cavity efficiencies, one row per scheme."""
    rows: dict[ProtocolKind, list[str]] = {kind: [] for kind in ProtocolKind}
    for threshold in thresholds:
        rows[threshold.kind].append(str(threshold))

    table = Table(title="Minimum cavity efficiency")
    table.add_column("protocol")
    for target, theta in TABLE_COLUMNS:
        table.add_column(column_key(target, theta), justify="right")
    for kind, cells in rows.items():
        if cells:
            table.add_row(kind.label, *cells)
    return table


def rows_table(header: Sequence[str], rows: Iterable[Sequence[float]], title: str | None = None) -> Table:
    table = Table(*header, title=title)
    for row in rows:
        table.add_row(*(format_number(value) for value in row))
    return table
