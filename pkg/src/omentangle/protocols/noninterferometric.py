from __future__ import annotations

from typing import TYPE_CHECKING

from omentangle.gaussian import GaussianState, tensor

from .precool import precool
from .prepared import PreparedState, Readout
from .stages import interact, lose, squeeze

if TYPE_CHECKING:
    from .config import ProtocolConfig

__all__ = [
    "prepare_noninterferometric",
    "noninterferometric_entangle",
]


def prepare_noninterferometric(config: ProtocolConfig) -> PreparedState:
    """A single pulse interacts with both mechanics in series.

    Between the cavities the pulse passes out through one cavity, a squeezer and into the second
    cavity, so it reaches the second mechanics with amplitude reduced by ``eta_cav``.
    """
    cool = precool(config)
    state = tensor(GaussianState.vacuum("L"), cool.relabel("M1"), cool.relabel("M2"))
    state = interact(state, config.chi, "L", "M1", kick=config.lambda_kick)
    state = lose(state, config.eta_cav, "L")
    state = squeeze(state, config.r, "L")
    state = lose(state, config.eta_cav, "L")
    state = interact(state, config.eta_cav * config.chi, "L", "M2", kick=config.lambda_kick)
    state = lose(state, config.eta_cav, "L")
    state = squeeze(state, config.r, "L")
    state = lose(state, config.eta_det, "L")
    return PreparedState(
        state=state,
        readouts=(Readout("L", config.readout_angle),),
        pair=("M1", "M2"),
        mechanics=("M1", "M2"),
    )


def noninterferometric_entangle(config: ProtocolConfig) -> GaussianState:
    return prepare_noninterferometric(config).finish(config, {"M1": config.theta, "M2": config.phi})
