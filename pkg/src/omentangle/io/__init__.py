from .display import column_key, grid_summary, rows_table, threshold_table
from .parser import AxisParser, RangeSpec, TreeToAxisSpec, get_axis_parser, get_parser
from .tables import VALUE_COLUMN, format_number, read_grid_csv, write_csv, write_grid_csv, write_json

__all__ = [
    "VALUE_COLUMN",
    "AxisParser",
    "RangeSpec",
    "TreeToAxisSpec",
    "column_key",
    "format_number",
    "get_axis_parser",
    "get_parser",
    "grid_summary",
    "rows_table",
    "read_grid_csv",
    "threshold_table",
    "write_csv",
    "write_grid_csv",
    "write_json",
]
