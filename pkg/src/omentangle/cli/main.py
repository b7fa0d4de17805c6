from __future__ import annotations

import argparse
import logging
import math
import sys
from typing import TYPE_CHECKING, NoReturn

from rich.console import Console
from rich.logging import RichHandler

from omentangle.exceptions import OmentangleError
from omentangle.protocols import ProtocolKind
from omentangle.verification import VerificationMode

from .commands import cmd_angles, cmd_precool, cmd_scan, cmd_table2, cmd_verify
from .config import load_run_config

if TYPE_CHECKING:
    from collections.abc import Sequence

__all__ = [
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_IO",
    "build_parser",
    "main",
]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2


class ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors through the exit code shared by all invalid input."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _pi_units(text: str) -> float:
    return float(text) * math.pi


def _common_options() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    group = common.add_argument_group("run")
    group.add_argument("--config", metavar="PATH", help="flat JSON file of run settings and physical parameters")
    group.add_argument("--out", metavar="PATH", help="data file, '-' or omitted for standard output")
    group.add_argument("-v", "--verbose", action="store_true", help="log debugging details")
    group.add_argument("-q", "--quiet", action="store_true", help="log warnings and errors only")

    physics = common.add_argument_group("physical parameters (override the configuration file)")
    physics.add_argument("--eta-cav", dest="eta_cav", type=float, help="cavity escape efficiency")
    physics.add_argument("--eta-det", dest="eta_det", type=float, help="detection efficiency")
    physics.add_argument("--eta-ver", dest="verification_efficiency", type=float, help="verification efficiency")
    physics.add_argument("--n-bar", dest="n_bar", type=float, help="initial mechanical occupation")
    physics.add_argument("--n-bath", dest="n_bath", type=float, help="bath occupation")
    physics.add_argument("--gamma", type=float, help="mechanical damping rate, rad/s")
    physics.add_argument("--omega-m", dest="omega_m", type=float, help="mechanical frequency, rad/s")
    physics.add_argument("--pulses", dest="precool_pulses", type=int, help="number of precooling pulses")
    physics.add_argument("--theta", type=_pi_units, help="mechanical rotation before readout, units of pi")
    physics.add_argument("--lab-frame", dest="lab_frame", action="store_true", default=None)
    return common


def build_parser() -> ArgumentParser:
    common = _common_options()
    parser = ArgumentParser(prog="omentangle", description="Pulsed optomechanical entanglement calculator.")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    def add_protocol(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--protocol", type=ProtocolKind.parse, help="om, int or non")

    scan = commands.add_parser("scan", parents=[common], help="entanglement over (chi, r) or homodyne angles")
    add_protocol(scan)
    scan.add_argument("--chi", dest="chi_axis", metavar="AXIS", help="start:stop:steps or a comma list")
    scan.add_argument("--r", dest="r_axis", metavar="AXIS", help="squeezing axis")
    scan.add_argument("--curves", metavar="PATH", help="also write r_sym and r_opt along chi")
    scan.add_argument("--angles", action="store_true", help="scan the homodyne angles instead")
    scan.add_argument("--phi", dest="phi_axis", metavar="AXIS", help="first homodyne angle axis, units of pi")
    scan.add_argument("--psi", dest="psi_axis", metavar="AXIS", help="second homodyne angle axis, units of pi")
    scan.set_defaults(handler=cmd_scan)

    angles = commands.add_parser("angles", parents=[common], help="entanglement over homodyne angles")
    add_protocol(angles)
    angles.add_argument("--phi", dest="phi_axis", metavar="AXIS", help="first homodyne angle axis, units of pi")
    angles.add_argument("--psi", dest="psi_axis", metavar="AXIS", help="second homodyne angle axis, units of pi")
    angles.add_argument("--chi", type=float, help="interaction strength")
    angles.add_argument("--r", type=float, help="squeezing parameter")
    angles.set_defaults(handler=cmd_angles)

    table2 = commands.add_parser("table2", parents=[common], help="minimum cavity efficiency of every scheme")
    table2.add_argument("--json", action="store_true", help="write JSON instead of CSV")
    table2.set_defaults(handler=cmd_table2)

    verify = commands.add_parser("verify", parents=[common], help="verified entanglement over chi")
    add_protocol(verify)
    verify.add_argument("--chi", dest="chi_axis", metavar="AXIS", help="interaction strength axis")
    verify.add_argument("--r", type=float, help="squeezing parameter")
    verify.add_argument("--mode", type=VerificationMode.parse, help="verification mode of the sampled column")
    verify.add_argument("--mc", action="store_true", help="append Monte Carlo estimates")
    verify.add_argument("--samples", type=int, help="simulated runs per probe")
    verify.add_argument("--seed", type=int, help="seed of the first row")
    verify.set_defaults(handler=cmd_verify)

    precool = commands.add_parser("precool", parents=[common], help="mechanical variances after precooling")
    precool.add_argument("--chi", dest="chi_axis", metavar="AXIS", help="interaction strength axis")
    precool.add_argument("--json", action="store_true", help="write JSON instead of CSV")
    precool.set_defaults(handler=cmd_precool)

    return parser


def _setup_logging(*, verbose: bool, quiet: bool) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


_NOT_OVERRIDES = {"command", "handler", "config", "out", "verbose", "quiet", "curves", "angles", "json", "mc"}


def _overrides(args: argparse.Namespace) -> dict[str, object]:
    values = {key: value for key, value in vars(args).items() if key not in _NOT_OVERRIDES}
    if values.get("theta") is not None:
        values["phi"] = values["theta"]
    return values


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _setup_logging(verbose=args.verbose, quiet=args.quiet)

    try:
        run = load_run_config(args.config).merged(_overrides(args))
        return int(args.handler(run, args, Console()))
    except OSError as exc:
        logger.error("%s", exc)
        return EXIT_IO
    except OmentangleError as exc:
        logger.error("%s", exc)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
