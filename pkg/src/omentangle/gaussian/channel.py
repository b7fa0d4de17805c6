from __future__ import annotations

import math
from typing import TYPE_CHECKING, Self

import numpy as np
from attrs import define, field

from omentangle.exceptions import InvalidArgumentError
from omentangle.math import as_matrix, as_vector, quadrature_indices, symmetrize

from .state import VACUUM_VARIANCE, is_physical, thermal_variance

if TYPE_CHECKING:
    from collections.abc import Sequence

    from omentangle.math import Matrix, Vector

    from .state import GaussianState

__all__ = [
    "GaussianChannel",
    "apply_channel",
]


def _check_gain(_instance: GaussianChannel, _attribute: object, gain: Vector) -> None:
    if gain.size == 0 or gain.size % 2:
        raise InvalidArgumentError(f"Gain must have 2n entries, got {gain.size}")
    if np.any(gain < 0.0) or np.any(gain > 1.0):
        raise InvalidArgumentError(f"Gain entries must lie in [0, 1], got {gain}")


def _check_env(instance: GaussianChannel, _attribute: object, env_cov: Matrix) -> None:
    if env_cov.shape != (instance.gain.size, instance.gain.size):
        raise InvalidArgumentError(f"Environment covariance of shape {env_cov.shape} does not match the gain")
    if not is_physical(env_cov):
        raise InvalidArgumentError("Environment covariance is not a physical state")


@define(frozen=True, eq=False)
class GaussianChannel:
    """Phase-insensitive map :math:`\\sigma \\to G^{1/2} \\sigma G^{1/2} + (1 - G)\\sigma_{env}`.

    Only the diagonal of :math:`G` is stored; modes the channel does not touch have unit gain.
    """

    gain: Vector = field(converter=as_vector, validator=_check_gain)
    env_cov: Matrix = field(converter=as_matrix, validator=_check_env)

    @property
    def n_modes(self) -> int:
        return self.gain.size // 2

    @property
    def gain_matrix(self) -> Matrix:
        return np.diag(self.gain)

    @classmethod
    def on_modes(cls, gain: float, env_variance: float, modes: Sequence[int], n_modes: int) -> Self:
        if not 0.0 <= gain <= 1.0:
            raise InvalidArgumentError(f"Gain must lie in [0, 1], got {gain}")
        diagonal = np.ones(2 * n_modes)
        env = np.full(2 * n_modes, VACUUM_VARIANCE)
        rows = quadrature_indices(modes)
        diagonal[rows] = gain
        env[rows] = env_variance
        return cls(gain=diagonal, env_cov=np.diag(env))

    @classmethod
    def optical_loss(cls, eta: float, modes: Sequence[int], n_modes: int) -> Self:
        """Beamsplitter loss of intensity transmission *eta* mixing in vacuum."""
        if not 0.0 <= eta <= 1.0:
            raise InvalidArgumentError(f"Efficiency must lie in [0, 1], got {eta}")
        return cls.on_modes(eta, VACUUM_VARIANCE, modes, n_modes)

    @classmethod
    def mechanical_decoherence(
        cls,
        gamma: float,
        n_bath: float,
        duration: float,
        modes: Sequence[int],
        n_modes: int,
    ) -> Self:
        """Damping at rate *gamma* towards a bath of occupation *n_bath* for *duration* seconds."""
        if gamma < 0 or duration < 0 or n_bath < 0:
            raise InvalidArgumentError(f"Expected gamma, duration, n_bath >= 0, got {gamma}, {duration}, {n_bath}")
        return cls.on_modes(math.exp(-gamma * duration), thermal_variance(n_bath), modes, n_modes)


def apply_channel(state: GaussianState, channel: GaussianChannel) -> GaussianState:
    if channel.n_modes != state.n_modes:
        raise InvalidArgumentError(f"{channel.n_modes}-mode channel applied to a {state.n_modes}-mode state")
    root = np.sqrt(channel.gain)
    cov = root[:, None] * state.cov * root[None, :] + np.diag(1.0 - channel.gain) @ channel.env_cov
    return state.with_moments(mean=root * state.mean, cov=symmetrize(cov))
