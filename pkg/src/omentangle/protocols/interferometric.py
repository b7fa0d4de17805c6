from __future__ import annotations

import math
from typing import TYPE_CHECKING

from omentangle.gaussian import GaussianState, tensor

from .precool import precool
from .prepared import PreparedState, Readout
from .stages import interact, lose, mix, squeeze

if TYPE_CHECKING:
    from .config import ProtocolConfig

__all__ = [
    "prepare_interferometric",
    "interferometric_entangle",
]

BALANCED = math.pi / 4


def prepare_interferometric(config: ProtocolConfig) -> PreparedState:
    """Two arms, each pulsing one precooled mechanics, recombined on a balanced beamsplitter.

    The drive enters one port of the first beamsplitter with vacuum in the other; only the means
    of the arms carry the drive, so both arms start in vacuum fluctuations.
    """
    cool = precool(config)
    state = tensor(
        GaussianState.vacuum("L1"),
        GaussianState.vacuum("L2"),
        cool.relabel("M1"),
        cool.relabel("M2"),
    )
    state = mix(state, "L1", "L2", BALANCED)
    state = interact(state, config.chi, "L1", "M1", kick=config.lambda_kick)
    state = interact(state, config.chi, "L2", "M2", kick=config.lambda_kick)
    state = lose(state, config.eta_cav, "L1", "L2")
    state = squeeze(state, config.r, "L1", "L2")
    state = lose(state, config.eta_det, "L1", "L2")
    state = mix(state, "L1", "L2", BALANCED)

    phi, psi = config.homodyne_angles
    return PreparedState(
        state=state,
        readouts=(Readout("L1", phi), Readout("L2", psi)),
        pair=("M1", "M2"),
        mechanics=("M1", "M2"),
    )


def interferometric_entangle(config: ProtocolConfig) -> GaussianState:
    """Mechanical pair after the double homodyne, evolved by ``theta`` and ``phi`` respectively."""
    return prepare_interferometric(config).finish(config, {"M1": config.theta, "M2": config.phi})
