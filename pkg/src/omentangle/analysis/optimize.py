from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING, Protocol

import numpy as np
from scipy.optimize import minimize_scalar

from omentangle.gaussian import log_negativity
from omentangle.protocols import ProtocolKind, entangle
from omentangle.verification import VerificationMode, build_sigma_ver

if TYPE_CHECKING:
    from collections.abc import Sequence

    from omentangle.math import Vector
    from omentangle.protocols import ProtocolConfig

__all__ = [
    "R_GRID",
    "CHI_GRID",
    "Objective",
    "entanglement",
    "verified_entanglement",
    "refine_maximum",
    "optimize_r",
    "maximize_over_chi",
]

logger = logging.getLogger(__name__)

R_GRID = np.linspace(0.0, 3.0, 61)
R_XTOL = 1e-4

CHI_GRID = np.geomspace(1e-2, 1e3, 200)
LOG_CHI_XTOL = 1e-6


class Objective(Protocol):
    def __call__(self, config: ProtocolConfig, /) -> float: ...


def entanglement(kind: ProtocolKind | str, config: ProtocolConfig) -> float:
    """Logarithmic negativity of the protocol output, in bits."""
    return log_negativity(entangle(kind, config).cov).log_neg


def verified_entanglement(
    kind: ProtocolKind | str,
    config: ProtocolConfig,
    mode: VerificationMode | str = VerificationMode.CONSERVATIVE_TIME,
) -> float:
    """Logarithmic negativity of the reconstructed covariance, in bits."""
    return build_sigma_ver(kind, config, mode).log_negativity().log_neg


def refine_maximum(
    func: Objective,
    config: ProtocolConfig,
    name: str,
    grid: Sequence[float] | Vector,
    *,
    xtol: float,
    log_scale: bool = False,
) -> tuple[float, float]:
    """Maximize *func* over config field *name*: best grid point, then a bounded search between its neighbours.

    Ties on the grid go to the smallest value; an all-zero grid returns its first point.
    """
    points = np.asarray(grid, dtype=np.float64)
    values = np.array([func(config.with_(**{name: x})) for x in points])
    best = int(np.argmax(values))
    if values[best] <= 0.0:
        return float(points[0]), 0.0

    lo, hi = points[max(best - 1, 0)], points[min(best + 1, points.size - 1)]
    to_x = math.exp if log_scale else float
    bounds = (math.log(lo), math.log(hi)) if log_scale else (float(lo), float(hi))

    result = minimize_scalar(
        lambda s: -func(config.with_(**{name: to_x(s)})),
        bounds=bounds,
        method="bounded",
        options={"xatol": xtol},
    )
    refined, value = to_x(float(result.x)), -float(result.fun)
    logger.debug("Refined %s: grid %.6g -> %.6g, value %.6g -> %.6g", name, points[best], refined, values[best], value)
    if value < values[best]:
        return float(points[best]), float(values[best])
    return refined, value


def optimize_r(kind: ProtocolKind | str, chi: float, config: ProtocolConfig) -> tuple[float, float]:
    """Return ``(r_opt, E_N)``: the squeezing that maximizes entanglement at interaction strength *chi*."""
    kind = ProtocolKind.parse(kind)
    return refine_maximum(lambda c: entanglement(kind, c), config.with_(chi=chi), "r", R_GRID, xtol=R_XTOL)


def maximize_over_chi(
    func: Objective,
    config: ProtocolConfig,
    grid: Sequence[float] | Vector = CHI_GRID,
) -> tuple[float, float]:
    """Return ``(chi_opt, value)`` maximizing *func* over interaction strength, refined in log chi."""
    return refine_maximum(func, config, "chi", grid, xtol=LOG_CHI_XTOL, log_scale=True)
