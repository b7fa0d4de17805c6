from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING

from scipy.optimize import bisect

from omentangle.exceptions import RootNotFoundError

from .kind import ProtocolKind
from .noninterferometric import prepare_noninterferometric
from .precool import precool

if TYPE_CHECKING:
    from .config import ProtocolConfig

__all__ = [
    "SQUEEZING_BRACKET",
    "symmetric_squeezing",
    "symmetrizing_squeezing",
]

logger = logging.getLogger(__name__)

SQUEEZING_BRACKET = (0.0, 5.0)
SQUEEZING_XTOL = 1e-10


def symmetric_squeezing(chi: float, eta_cav: float, v_x: float) -> float:
    """Squeezing that equalizes the quadratures of a pulse after one interaction and the cavity loss.

    >>> round(symmetric_squeezing(1.0, 1.0, 0.5) / math.log(2.0), 12)
    0.25
    """
    return 0.25 * math.log(1.0 - eta_cav + eta_cav * (1.0 + 2.0 * v_x * chi**2))


def _asymmetry(config: ProtocolConfig, r: float) -> float:
    light = prepare_noninterferometric(config.with_(r=r)).state.block("L")
    return float(light[0, 0] - light[1, 1])


def symmetrizing_squeezing(kind: ProtocolKind | str, config: ProtocolConfig) -> float:
    """Return the squeezing that leaves the detected pulse with equal quadrature variances.

    The shared pulse of the non-interferometric scheme passes two squeezers, so its root is found
    numerically on :data:`SQUEEZING_BRACKET`.
    """
    kind = ProtocolKind.parse(kind)
    if config.chi == 0.0:
        return 0.0
    if kind is not ProtocolKind.NON_INTERFEROMETRIC:
        return symmetric_squeezing(config.chi, config.eta_cav, precool(config).v_x)

    lo, hi = SQUEEZING_BRACKET
    f_lo, f_hi = _asymmetry(config, lo), _asymmetry(config, hi)
    if f_lo * f_hi > 0.0:
        raise RootNotFoundError(
            f"Quadrature asymmetry keeps its sign on r in [{lo}, {hi}]: {f_lo:.6g}, {f_hi:.6g}",
        )
    r_sym = float(bisect(lambda r: _asymmetry(config, r), lo, hi, xtol=SQUEEZING_XTOL))
    logger.debug("Symmetrizing squeezing for %s at chi=%.4g: r=%.10f", kind.label, config.chi, r_sym)
    return r_sym
