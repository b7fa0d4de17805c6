from __future__ import annotations

from typing import TYPE_CHECKING

from omentangle.gaussian import GaussianState, tensor

from .precool import precool
from .prepared import PreparedState
from .stages import interact, lose, squeeze

if TYPE_CHECKING:
    from .config import ProtocolConfig
    from .precool import PrecooledState

__all__ = [
    "LIGHT",
    "MECH",
    "prepare_optomechanical",
    "om_entangle",
    "om_entangle_squeezed_first",
]

LIGHT = "L"
MECH = "M"


def _joint(config: ProtocolConfig, cool: PrecooledState | None) -> GaussianState:
    cool = precool(config) if cool is None else cool
    joint = tensor(GaussianState.vacuum(LIGHT), cool.relabel(MECH))
    return interact(joint, config.chi, LIGHT, MECH, kick=config.lambda_kick)


def prepare_optomechanical(config: ProtocolConfig, cool: PrecooledState | None = None) -> PreparedState:
    """Light-mechanics state after the entangling pulse and the optical path.

    The optical path is cavity loss, squeezer and detection loss; there is no generation-stage homodyne.
    """
    joint = _joint(config, cool)
    joint = lose(joint, config.eta_cav, LIGHT)
    joint = squeeze(joint, config.r, LIGHT)
    joint = lose(joint, config.eta_det, LIGHT)
    return PreparedState(state=joint, readouts=(), pair=(LIGHT, MECH), mechanics=(MECH,))


def om_entangle(config: ProtocolConfig, cool: PrecooledState | None = None) -> GaussianState:
    """Light-mechanics covariance once the mechanics has rotated by ``config.theta``."""
    return prepare_optomechanical(config, cool).finish(config, {MECH: config.theta})


def om_entangle_squeezed_first(config: ProtocolConfig, cool: PrecooledState | None = None) -> GaussianState:
    """Variant with the squeezer right after the interaction, followed by the combined loss ``eta_cav * eta_det``."""
    joint = _joint(config, cool)
    joint = squeeze(joint, config.r, LIGHT)
    joint = lose(joint, config.eta, LIGHT)
    prepared = PreparedState(state=joint, readouts=(), pair=(LIGHT, MECH), mechanics=(MECH,))
    return prepared.finish(config, {MECH: config.theta})
