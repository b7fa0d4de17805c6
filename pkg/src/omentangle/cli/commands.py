"""
Subcommand implementations.

Every command takes the merged :class:`~omentangle.cli.config.RunConfig`, the parsed arguments and a
console for human-readable output, and returns the process exit code. Data goes to ``--out`` (standard
output when omitted); tables meant for reading go to the console, or to standard error when the data
itself is written to standard output.

Interface Functions:
    - cmd_scan: entanglement over (chi, r), or over homodyne angles with ``--angles``
    - cmd_angles: entanglement over generation-stage homodyne angles
    - cmd_table2: minimum cavity efficiencies of every scheme
    - cmd_verify: generated, reconstructed and inverse-mapped entanglement over chi
    - cmd_precool: mechanical variances after precooling
"""

from __future__ import annotations

import logging
import math
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import TYPE_CHECKING

import numpy as np
from rich.console import Console

from omentangle.analysis import (
    TABLE_COLUMNS,
    ScanGrid,
    efficiency_table,
    entanglement,
    scan_angles,
    scan_chi_r,
)
from omentangle.gaussian import log_negativity
from omentangle.io import (
    column_key,
    format_number,
    get_axis_parser,
    grid_summary,
    rows_table,
    threshold_table,
    write_csv,
    write_grid_csv,
    write_json,
)
from omentangle.protocols import ProtocolKind, precool
from omentangle.verification import VerificationMode, build_sigma_ver, inverse_map, monte_carlo_sigma_ver

if TYPE_CHECKING:
    from argparse import Namespace
    from collections.abc import Iterator
    from typing import TextIO

    from omentangle.analysis import EfficiencyThreshold
    from omentangle.protocols import ProtocolConfig

    from .config import RunConfig

__all__ = [
    "SCAN_CHI_AXIS",
    "SCAN_R_AXIS",
    "ANGLE_AXIS",
    "VERIFY_CHI_AXIS",
    "PRECOOL_CHI_AXIS",
    "VERIFY_HEADER",
    "MC_HEADER",
    "open_output",
    "cmd_scan",
    "cmd_angles",
    "cmd_table2",
    "cmd_verify",
    "cmd_precool",
]

logger = logging.getLogger(__name__)

SCAN_CHI_AXIS = "0:6:121"
SCAN_R_AXIS = "0:1.2:61"
ANGLE_AXIS = "0:1:101"  # units of pi
VERIFY_CHI_AXIS = "0.25:6:24"
PRECOOL_CHI_AXIS = "0.5:6:12"

VERIFY_HEADER = ("chi", "en_state", "en_ver_time", "en_ver_time_noise", "en_inverse")
MC_HEADER = ("en_mc", "max_se")

STDOUT = "-"


def _to_stdout(path: str | None) -> bool:
    return path is None or path == STDOUT


@contextmanager
def open_output(path: str | None) -> Iterator[TextIO]:
    if _to_stdout(path):
        yield sys.stdout
        return
    with Path(path).open("w", encoding="utf-8", newline="") as stream:
        yield stream


def _report_console(args: Namespace, console: Console) -> Console:
    return Console(stderr=True) if _to_stdout(args.out) else console


def cmd_scan(run: RunConfig, args: Namespace, console: Console) -> int:
    if args.angles:
        return cmd_angles(run, args, console)

    parse_axis = get_axis_parser()
    chi_axis = parse_axis(run.chi_axis or SCAN_CHI_AXIS, "chi")
    r_axis = parse_axis(run.r_axis or SCAN_R_AXIS, "r")
    grid = scan_chi_r(run.protocol, run.protocol_config(), chi_axis, r_axis, curves=args.curves is not None)

    with open_output(args.out) as stream:
        write_grid_csv(stream, grid)
    if args.curves is not None:
        with open_output(args.curves) as stream:
            write_csv(stream, ["chi", *grid.curves], zip(chi_axis, *grid.curves.values(), strict=True))

    _report_console(args, console).print(grid_summary(grid, title=f"{run.protocol.label} (chi, r) scan"))
    return 0


def cmd_angles(run: RunConfig, args: Namespace, console: Console) -> int:
    """Scan the homodyne angles; axes are read and written in units of pi."""
    parse_axis = get_axis_parser()
    axes = [parse_axis(run.phi_axis or ANGLE_AXIS, "phi")]
    if run.protocol is ProtocolKind.INTERFEROMETRIC:
        axes.append(parse_axis(run.psi_axis or ANGLE_AXIS, "psi"))
    elif run.psi_axis is not None:
        logger.warning("The %s scheme has a single homodyne angle, ignoring psi", run.protocol.label)

    radians = [axis.scaled(math.pi) for axis in axes]
    values = scan_angles(run.protocol, run.protocol_config(), *radians).values
    grid = ScanGrid(axes=tuple(axes), values=values)

    with open_output(args.out) as stream:
        write_grid_csv(stream, grid)
    _report_console(args, console).print(grid_summary(grid, title=f"{run.protocol.label} angle scan (units of pi)"))
    return 0


def _threshold_cell(threshold: EfficiencyThreshold) -> str | float:
    return ">0" if threshold.degenerate else threshold.eta_min


def cmd_table2(run: RunConfig, args: Namespace, console: Console) -> int:
    thresholds = efficiency_table(run.protocol_config())
    keys = [column_key(target, theta) for target, theta in TABLE_COLUMNS]

    by_kind: dict[str, dict[str, EfficiencyThreshold]] = {kind.label: {} for kind in ProtocolKind}
    for threshold in thresholds:
        by_kind[threshold.kind.label][column_key(threshold.target, threshold.theta)] = threshold

    with open_output(args.out) as stream:
        if args.json:
            payload = {
                label: {
                    key: {"eta_min": cells[key].eta_min, "degenerate": cells[key].degenerate} for key in keys
                }
                for label, cells in by_kind.items()
            }
            write_json(stream, payload)
        else:
            rows = ([label, *(_threshold_cell(cells[key]) for key in keys)] for label, cells in by_kind.items())
            write_csv(stream, ["protocol", *keys], rows)

    _report_console(args, console).print(threshold_table(thresholds))
    return 0


def _verify_row(run: RunConfig, config: ProtocolConfig, *, mc: bool, seed: int) -> list[float]:
    kind = run.protocol
    timed = build_sigma_ver(kind, config, VerificationMode.CONSERVATIVE_TIME)
    noisy = build_sigma_ver(kind, config, VerificationMode.CONSERVATIVE_TIME_NOISE)
    inverse = inverse_map(timed, config.gamma, config.n_bath, config.omega_m)
    row = [
        config.chi,
        entanglement(kind, config),
        timed.log_negativity().log_neg,
        noisy.log_negativity().log_neg,
        log_negativity(inverse.sigma_zero_est, check_physical=False).log_neg,
    ]
    if mc:
        sampled, errors = monte_carlo_sigma_ver(kind, config, run.mode, run.samples, seed)
        row += [sampled.log_negativity().log_neg, float(np.max(errors))]
    return row


def cmd_verify(run: RunConfig, args: Namespace, console: Console) -> int:
    """Tabulate verification over chi; with ``--mc`` each row is sampled with seed ``seed + row``."""
    chi_axis = get_axis_parser()(run.chi_axis or VERIFY_CHI_AXIS, "chi")
    config = run.protocol_config()
    header = VERIFY_HEADER + MC_HEADER if args.mc else VERIFY_HEADER

    rows = [
        _verify_row(run, config.with_(chi=chi), mc=args.mc, seed=run.seed + index)
        for index, chi in enumerate(chi_axis)
    ]
    with open_output(args.out) as stream:
        write_csv(stream, header, rows)

    best = max(rows, key=lambda row: row[2])
    _report_console(args, console).print(
        rows_table(header, [best], title=f"{run.protocol.label}: row of largest conservative-in-time value"),
    )
    return 0


def cmd_precool(run: RunConfig, args: Namespace, console: Console) -> int:
    chi_axis = get_axis_parser()(run.chi_axis or PRECOOL_CHI_AXIS, "chi")
    config = run.protocol_config()
    rows = []
    for chi in chi_axis:
        cooled = precool(config.with_(chi=chi))
        rows.append((chi, cooled.v_x, cooled.v_p))

    header = ("chi", "v_x", "v_p")
    with open_output(args.out) as stream:
        if args.json:
            write_json(stream, {
                "n_bar": config.n_bar,
                "pulses": config.precool_pulses,
                "rows": [dict(zip(header, row, strict=True)) for row in rows],
            })
        else:
            write_csv(stream, header, rows)

    title = f"Precooling from n_bar={format_number(config.n_bar)} with {config.precool_pulses} pulse(s)"
    _report_console(args, console).print(rows_table(header, rows, title=title))
    return 0
