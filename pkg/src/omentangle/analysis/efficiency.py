from __future__ import annotations

import logging
import math
from enum import Enum
from typing import TYPE_CHECKING

from attrs import define
from scipy.optimize import bisect

from omentangle.exceptions import RootNotFoundError
from omentangle.protocols import TWO_PI, ProtocolKind

from .optimize import entanglement, maximize_over_chi, verified_entanglement

if TYPE_CHECKING:
    from omentangle.protocols import ProtocolConfig

    from .optimize import Objective

__all__ = [
    "ENTANGLED_TOL",
    "ETA_FLOOR",
    "TABLE_COLUMNS",
    "Target",
    "EfficiencyThreshold",
    "total_optical_efficiency",
    "min_eta_cav",
    "efficiency_table",
]

logger = logging.getLogger(__name__)

ENTANGLED_TOL = 1e-9
ETA_FLOOR = 1e-6
ETA_XTOL = 1e-4


class Target(Enum):
    GENERATE = "generate"  # entanglement of the protocol output
    VERIFY = "verify"  # entanglement of the conservative-in-time reconstruction


TABLE_COLUMNS: tuple[tuple[Target, float | None], ...] = (
    (Target.GENERATE, 0.0),
    (Target.GENERATE, math.pi / 2),
    (Target.GENERATE, TWO_PI),
    (Target.VERIFY, None),
)


def total_optical_efficiency(kind: ProtocolKind | str, eta_cav: float, eta_det: float) -> float:
    """Product of the intensity efficiencies along the optical path of a scheme.

    >>> round(total_optical_efficiency("non", 0.5, 0.8), 12)
    0.1
    """
    passes = 3 if ProtocolKind.parse(kind) is ProtocolKind.NON_INTERFEROMETRIC else 1
    return eta_cav**passes * eta_det


@define(frozen=True)
class EfficiencyThreshold:
    """Smallest cavity efficiency at which a scheme still reaches its target.

    A *degenerate* threshold means entanglement survives at any efficiency and *eta_min* is 0.
    """

    kind: ProtocolKind
    target: Target
    theta: float | None
    eta_min: float
    degenerate: bool = False
    eta_det: float = 1.0

    @property
    def total_efficiency(self) -> float:
        return total_optical_efficiency(self.kind, self.eta_min, self.eta_det)

    def __str__(self) -> str:
        return "> 0" if self.degenerate else f"{self.eta_min:.4g}"


def _indicator(kind: ProtocolKind, target: Target) -> Objective:
    if target is Target.VERIFY:
        return lambda config: verified_entanglement(kind, config)
    return lambda config: entanglement(kind, config)


def min_eta_cav(
    kind: ProtocolKind | str,
    config: ProtocolConfig,
    theta: float | None,
    target: Target | str = Target.GENERATE,
) -> EfficiencyThreshold:
    """Smallest ``eta_cav`` for which the best interaction strength gives entanglement, without squeezing.

    Both mechanical modes evolve by *theta* before the entanglement is assessed. The verification
    target ignores *theta*: its readouts fix their own timing.
    """
    kind, target = ProtocolKind.parse(kind), Target(target)
    base = config.with_(r=0.0)
    if theta is not None:
        base = base.with_(theta=theta, phi=theta)
    objective = _indicator(kind, target)

    def margin(eta_cav: float) -> float:
        return maximize_over_chi(objective, base.with_(eta_cav=eta_cav))[1] - ENTANGLED_TOL

    def threshold(eta_min: float, *, degenerate: bool = False) -> EfficiencyThreshold:
        return EfficiencyThreshold(kind, target, theta, eta_min, degenerate, base.eta_det)

    lo = ETA_FLOOR
    if margin(lo) > 0.0:
        logger.info("%s entangled down to eta_cav=%g", kind.label, lo)
        return threshold(0.0, degenerate=True)
    if margin(1.0) <= 0.0:
        raise RootNotFoundError(f"No entanglement for the {kind.label} scheme even at eta_cav = 1")

    hi = min(10.0 * lo, 1.0)
    while margin(hi) <= 0.0:
        lo, hi = hi, min(10.0 * hi, 1.0)

    eta_min = float(bisect(margin, lo, hi, xtol=min(ETA_XTOL, 0.01 * lo)))
    logger.info("Minimum eta_cav for %s (%s, theta=%s): %.6g", kind.label, target.value, theta, eta_min)
    return threshold(eta_min)


def efficiency_table(config: ProtocolConfig) -> list[EfficiencyThreshold]:
    """Minimum cavity efficiencies of every scheme, row by row over :data:`TABLE_COLUMNS`."""
    return [
        min_eta_cav(kind, config, theta, target)
        for kind in ProtocolKind
        for target, theta in TABLE_COLUMNS
    ]
