from .bound import LargeChiBound, bound_lambda, bound_squeezing, large_chi_bound
from .comparison import SchemeMaximum, scheme_comparison
from .efficiency import (
    TABLE_COLUMNS,
    EfficiencyThreshold,
    Target,
    efficiency_table,
    min_eta_cav,
    total_optical_efficiency,
)
from .grid import Axis, ScanGrid
from .optimize import entanglement, maximize_over_chi, optimize_r, verified_entanglement
from .scan import angle_crossings, scan_angles, scan_chi_r, sign_crossings

__all__ = [
    "Axis",
    "EfficiencyThreshold",
    "LargeChiBound",
    "ScanGrid",
    "SchemeMaximum",
    "TABLE_COLUMNS",
    "Target",
    "angle_crossings",
    "bound_lambda",
    "bound_squeezing",
    "efficiency_table",
    "entanglement",
    "large_chi_bound",
    "maximize_over_chi",
    "min_eta_cav",
    "optimize_r",
    "scan_angles",
    "scan_chi_r",
    "scheme_comparison",
    "sign_crossings",
    "total_optical_efficiency",
    "verified_entanglement",
]
