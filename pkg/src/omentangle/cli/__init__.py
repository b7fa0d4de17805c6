from .commands import cmd_angles, cmd_precool, cmd_scan, cmd_table2, cmd_verify
from .config import RunConfig, load_run_config
from .main import build_parser, main

__all__ = [
    "RunConfig",
    "build_parser",
    "cmd_angles",
    "cmd_precool",
    "cmd_scan",
    "cmd_table2",
    "cmd_verify",
    "load_run_config",
    "main",
]
