from __future__ import annotations

import logging
from itertools import pairwise
from typing import TYPE_CHECKING

import numpy as np
from scipy.optimize import brentq

from omentangle.exceptions import InvalidArgumentError
from omentangle.protocols import ProtocolKind, symmetrizing_squeezing

from .grid import Axis, ScanGrid
from .optimize import entanglement, optimize_r

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable

    from omentangle.protocols import ProtocolConfig

__all__ = [
    "scan_chi_r",
    "scan_angles",
    "angle_config",
    "angle_crossings",
    "sign_crossings",
]

logger = logging.getLogger(__name__)


def scan_chi_r(
    kind: ProtocolKind | str,
    config: ProtocolConfig,
    chi_axis: Axis,
    r_axis: Axis,
    *,
    curves: bool = True,
) -> ScanGrid:
    """Entanglement over interaction strength and squeezing, with ``r_sym`` and ``r_opt`` along the chi axis."""
    kind = ProtocolKind.parse(kind)
    values = np.array([[entanglement(kind, config.with_(chi=chi, r=r)) for r in r_axis] for chi in chi_axis])

    profiles = {}
    if curves:
        profiles["r_sym"] = np.array([symmetrizing_squeezing(kind, config.with_(chi=chi)) for chi in chi_axis])
        profiles["r_opt"] = np.array([optimize_r(kind, chi, config)[0] for chi in chi_axis])

    grid = ScanGrid(axes=(chi_axis, r_axis), values=values, curves=profiles)
    (chi, r), best = grid.argmax()
    logger.info("Scanned %d x %d %s grid: max %.4f at chi=%.4g, r=%.4g", len(chi_axis), len(r_axis), kind.label, best, chi, r)
    return grid


def angle_config(kind: ProtocolKind, config: ProtocolConfig, phi: float, psi: float | None = None) -> ProtocolConfig:
    """Place the generation-stage homodynes at the given angles."""
    match kind:
        case ProtocolKind.INTERFEROMETRIC if psi is not None:
            return config.with_(homodyne_angles=(phi, psi))
        case ProtocolKind.NON_INTERFEROMETRIC if psi is None:
            return config.with_(readout_angle=phi)
        case ProtocolKind.OPTOMECHANICAL:
            raise InvalidArgumentError("The optomechanical scheme has no generation-stage homodyne")
        case _:
            expected = 2 if kind is ProtocolKind.INTERFEROMETRIC else 1
            raise InvalidArgumentError(f"The {kind.label} scheme takes {expected} homodyne angle axis(es)")


def scan_angles(
    kind: ProtocolKind | str,
    config: ProtocolConfig,
    phi_axis: Axis,
    psi_axis: Axis | None = None,
) -> ScanGrid:
    """Entanglement over the generation-stage homodyne angles: two axes for the interferometric scheme, one otherwise."""
    kind = ProtocolKind.parse(kind)
    if psi_axis is None:
        values = np.array([entanglement(kind, angle_config(kind, config, phi)) for phi in phi_axis])
        return ScanGrid(axes=(phi_axis,), values=values)

    values = np.array([
        [entanglement(kind, angle_config(kind, config, phi, psi)) for psi in psi_axis] for phi in phi_axis
    ])
    return ScanGrid(axes=(phi_axis, psi_axis), values=values)


def sign_crossings(func: Callable[[float], float], points: Iterable[float]) -> list[float]:
    """Zeros of *func* between consecutive *points*, located to machine precision.

    A sample that is exactly zero counts as a crossing at that point.
    """
    xs = list(points)
    samples = [func(x) for x in xs]
    crossings = []
    for (lo, f_lo), (hi, f_hi) in pairwise(zip(xs, samples, strict=True)):
        if f_lo == 0.0:
            crossings.append(float(lo))
        elif f_lo * f_hi < 0.0:
            crossings.append(float(brentq(func, lo, hi)))
    if xs and samples[-1] == 0.0:
        crossings.append(float(xs[-1]))
    return crossings


def angle_crossings(
    kind: ProtocolKind | str,
    first: ProtocolConfig,
    second: ProtocolConfig,
    axis: Axis,
) -> list[float]:
    """Readout angles at which two single-angle curves cross."""
    kind = ProtocolKind.parse(kind)

    def gap(phi: float) -> float:
        return entanglement(kind, angle_config(kind, first, phi)) - entanglement(kind, angle_config(kind, second, phi))

    crossings = sign_crossings(gap, axis)
    logger.debug("Curves cross at %s", crossings)
    return crossings
