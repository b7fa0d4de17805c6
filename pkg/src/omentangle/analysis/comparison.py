from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING

import numpy as np
from attrs import define

from omentangle.protocols import TWO_PI, ProtocolKind

from .optimize import entanglement, maximize_over_chi, optimize_r

if TYPE_CHECKING:
    from collections.abc import Sequence

    from omentangle.math import Vector
    from omentangle.protocols import ProtocolConfig

    from .optimize import Objective

__all__ = [
    "COMPARISON_ANGLES",
    "COMPARISON_CHI_GRID",
    "SchemeMaximum",
    "scheme_comparison",
]

logger = logging.getLogger(__name__)

COMPARISON_ANGLES = (0.0, math.pi / 2, TWO_PI)
COMPARISON_CHI_GRID = np.geomspace(0.5, 20.0, 40)


@define(frozen=True)
class SchemeMaximum:
    """Best entanglement of a scheme for one rotation angle, with or without optimized squeezing."""

    kind: ProtocolKind
    theta: float
    squeezed: bool
    chi: float
    r: float
    log_neg: float


def _unsqueezed(kind: ProtocolKind) -> Objective:
    return lambda config: entanglement(kind, config.with_(r=0.0))


def _squeezed(kind: ProtocolKind) -> Objective:
    return lambda config: optimize_r(kind, config.chi, config)[1]


def scheme_comparison(
    config: ProtocolConfig,
    angles: Sequence[float] = COMPARISON_ANGLES,
    chi_grid: Sequence[float] | Vector = COMPARISON_CHI_GRID,
) -> list[SchemeMaximum]:
    """Maximum entanglement of every scheme over chi, at each angle, first without squeezing and then with ``r_opt``."""
    results = []
    for kind in ProtocolKind:
        for theta in angles:
            base = config.with_(theta=theta, phi=theta)

            chi, value = maximize_over_chi(_unsqueezed(kind), base, chi_grid)
            results.append(SchemeMaximum(kind, theta, False, chi, 0.0, value))

            chi, value = maximize_over_chi(_squeezed(kind), base, chi_grid)
            r_opt = optimize_r(kind, chi, base)[0]
            results.append(SchemeMaximum(kind, theta, True, chi, r_opt, value))
            logger.info("%s at theta=%.4g: E_N=%.4f (r=0), %.4f (r_opt=%.4g)", kind.label, theta, results[-2].log_neg, value, r_opt)
    return results
