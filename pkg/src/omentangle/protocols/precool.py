from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING, Self

from attrs import define, field, validators

from omentangle.exceptions import InvalidStateError
from omentangle.gaussian import GaussianState, tensor
from omentangle.gaussian.state import PHYSICALITY_TOL

from .stages import decohere, interact, lose, measure, rotate

if TYPE_CHECKING:
    from .config import ProtocolConfig

__all__ = [
    "PrecooledState",
    "MECH",
    "precool",
    "cooling_pulse",
]

logger = logging.getLogger(__name__)

MECH = "M"
LIGHT = "L"

QUARTER_PERIOD = math.pi / 2
HALF_PERIOD = math.pi


@define(frozen=True)
class PrecooledState:
    """Mechanical state left by measurement-based precooling, ``cov = diag(v_x, v_p)``."""

    v_x: float = field(validator=validators.gt(0.0))
    v_p: float = field(validator=validators.gt(0.0))
    state: GaussianState = field(repr=False)

    def __attrs_post_init__(self) -> None:
        if self.v_x * self.v_p < 0.25 - PHYSICALITY_TOL:
            raise InvalidStateError(f"Precooled variances violate uncertainty: {self.v_x} * {self.v_p} < 1/4")

    @classmethod
    def from_state(cls, state: GaussianState) -> Self:
        return cls(v_x=float(state.cov[0, 0]), v_p=float(state.cov[1, 1]), state=state)

    def relabel(self, label: str) -> GaussianState:
        return self.state.relabel(label)


def cooling_pulse(mech: GaussianState, config: ProtocolConfig) -> GaussianState:
    """One precooling pulse: interaction, loss ``eta_cav * eta_det`` and a phase-quadrature homodyne."""
    joint = tensor(GaussianState.vacuum(LIGHT), mech)
    joint = interact(joint, config.chi, LIGHT, MECH, kick=config.lambda_kick)
    joint = lose(joint, config.eta, LIGHT)
    return measure(joint, LIGHT, math.pi / 2)


def precool(config: ProtocolConfig) -> PrecooledState:
    """Prepare the mechanics for the entangling pulse.

    Each pulse reads out the position quadrature. Successive pulses are half a period apart so they
    read the same quadrature; a final quarter period turns the cooled position into the momentum.
    """
    mech = GaussianState.thermal(config.n_bar, MECH)
    if config.precool_pulses == 0:
        return PrecooledState.from_state(mech)

    for pulse in range(config.precool_pulses):
        if pulse:
            mech = decohere(rotate(mech, HALF_PERIOD, MECH), config, HALF_PERIOD, MECH)
        mech = cooling_pulse(mech, config)

    mech = decohere(rotate(mech, QUARTER_PERIOD, MECH), config, QUARTER_PERIOD, MECH)
    cooled = PrecooledState.from_state(mech)
    logger.debug(
        "Precooled with chi=%.4g over %d pulse(s): V_x=%.6g, V_p=%.6g",
        config.chi,
        config.precool_pulses,
        cooled.v_x,
        cooled.v_p,
    )
    return cooled
