"""Protocol building blocks addressed by mode label."""

from __future__ import annotations

from typing import TYPE_CHECKING

from omentangle.gaussian import (
    GaussianChannel,
    HomodyneMeasurement,
    apply_channel,
    apply_symplectic,
    homodyne_update,
    make_beamsplitter,
    make_pulsed_om,
    make_rotation,
    make_squeezer,
)

if TYPE_CHECKING:
    from omentangle.gaussian import GaussianState

    from .config import ProtocolConfig

__all__ = [
    "interact",
    "lose",
    "squeeze",
    "mix",
    "rotate",
    "decohere",
    "evolve_mechanics",
    "measure",
]


def interact(state: GaussianState, chi: float, light: str, mech: str, *, kick: float = 0.0) -> GaussianState:
    """Pulsed optomechanical interaction; *kick* is the mean-field momentum offset given to the mechanics."""
    op = make_pulsed_om(chi, state.index(light), state.index(mech), state.n_modes)
    state = apply_symplectic(state, op)
    if kick:
        mean = state.mean.copy()
        mean[2 * state.index(mech) + 1] += kick
        state = state.with_moments(mean=mean)
    return state


def lose(state: GaussianState, eta: float, *labels: str) -> GaussianState:
    return apply_channel(state, GaussianChannel.optical_loss(eta, state.modes.indices(labels), state.n_modes))


def squeeze(state: GaussianState, r: float, *labels: str) -> GaussianState:
    for label in labels:
        state = apply_symplectic(state, make_squeezer(r).embed([state.index(label)], state.n_modes))
    return state


def mix(state: GaussianState, first: str, second: str, alpha: float, beta: float = 0.0) -> GaussianState:
    op = make_beamsplitter(alpha, beta).embed([state.index(first), state.index(second)], state.n_modes)
    return apply_symplectic(state, op)


def rotate(state: GaussianState, angle: float, label: str) -> GaussianState:
    return apply_symplectic(state, make_rotation(angle).embed([state.index(label)], state.n_modes))


def decohere(state: GaussianState, config: ProtocolConfig, angle: float, label: str) -> GaussianState:
    """Thermal decoherence of one mechanical mode while it rotates by *angle*."""
    channel = GaussianChannel.mechanical_decoherence(
        config.gamma,
        config.n_bath,
        config.duration(angle),
        [state.index(label)],
        state.n_modes,
    )
    return apply_channel(state, channel)


def evolve_mechanics(
    state: GaussianState,
    config: ProtocolConfig,
    angles: dict[str, float],
    *,
    lab_frame: bool = False,
) -> GaussianState:
    """Free evolution of each listed mechanical mode, in the rotating frame unless *lab_frame*."""
    for label, angle in angles.items():
        state = decohere(state, config, angle, label)
        if lab_frame:
            state = rotate(state, angle, label)
    return state


def measure(state: GaussianState, label: str, angle: float, outcome: float | None = None) -> GaussianState:
    return homodyne_update(state, HomodyneMeasurement(mode=label, angle=angle, outcome=outcome))
