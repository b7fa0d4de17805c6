from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import numpy as np
from attrs import define, field, validators

from omentangle.exceptions import InvalidArgumentError, SingularMeasurementError
from omentangle.math import as_matrix, quadrature_direction, quadrature_indices, require_finite, symmetrize

from .state import GaussianState, is_physical

if TYPE_CHECKING:
    from omentangle.math import Matrix, Vector

    from .modes import ModeRef

__all__ = [
    "HomodyneMeasurement",
    "GeneraldyneMeasurement",
    "MEASUREMENT_TOL",
    "homodyne_update",
    "generaldyne_update",
]

logger = logging.getLogger(__name__)

MEASUREMENT_TOL = 1e-14


def _finite_or_none(value: float | None) -> float | None:
    return None if value is None else require_finite("outcome", value)


@define(frozen=True)
class HomodyneMeasurement:
    """Ideal homodyne detection of :math:`X(\\phi) = X\\cos\\phi + P\\sin\\phi` on one mode.

    An *outcome* of ``None`` stands for the prior mean of the measured quadrature.
    """

    mode: ModeRef
    angle: float = field(converter=lambda angle: require_finite("angle", angle))
    outcome: float | None = field(default=None, converter=_finite_or_none)

    @property
    def direction(self) -> Vector:
        return quadrature_direction(self.angle)

    @property
    def projector(self) -> Matrix:
        """Rank-one projector :math:`\\Pi_\\phi = n n^T`."""
        n = self.direction
        return np.outer(n, n)


@define(frozen=True, eq=False)
class GeneraldyneMeasurement:
    """Gaussian measurement of one mode with finite measurement covariance *cov_meas*."""

    mode: ModeRef
    cov_meas: Matrix = field(converter=as_matrix)
    outcome: Vector | None = field(default=None)

    @cov_meas.validator
    def _check_cov(self, _attribute: object, cov: Matrix) -> None:
        if cov.shape != (2, 2) or not is_physical(cov):
            raise InvalidArgumentError("Measurement covariance must be a physical single-mode covariance")


def _split(state: GaussianState, mode: ModeRef) -> tuple[int, list[int], list[int]]:
    idx = state.index(mode)
    measured = quadrature_indices([idx])
    rest = [row for row in range(2 * state.n_modes) if row not in measured]
    return idx, measured, rest


def homodyne_update(state: GaussianState, meas: HomodyneMeasurement) -> GaussianState:
    """Condition the remaining modes on a homodyne outcome and drop the measured mode.

    Uses the closed-form pseudo-inverse :math:`(\\Pi A \\Pi)^{MP} = n n^T / (n^T A n)`, so that
    :math:`B \\to B - C^T n n^T C / (n^T A n)`. The conditional covariance does not depend on the outcome.
    Measuring the only mode leaves the empty state.
    """
    idx, measured, rest = _split(state, meas.mode)
    a = state.cov[np.ix_(measured, measured)]
    c = state.cov[np.ix_(measured, rest)]
    b = state.cov[np.ix_(rest, rest)]
    n = meas.direction

    variance = float(n @ a @ n)
    if variance < MEASUREMENT_TOL:
        raise SingularMeasurementError(f"Quadrature at angle {meas.angle} of mode {meas.mode!r} has zero variance")

    gain = (c.T @ n) / variance
    prior = float(n @ state.mean[measured])
    shift = 0.0 if meas.outcome is None else meas.outcome - prior
    logger.debug("Homodyne on %s at angle %.4f, Var = %.6g", state.modes.labels[idx], meas.angle, variance)

    return GaussianState(
        mean=state.mean[rest] + gain * shift,
        cov=symmetrize(b - variance * np.outer(gain, gain)),
        modes=state.modes.without(idx),
    )


def generaldyne_update(state: GaussianState, meas: GeneraldyneMeasurement) -> GaussianState:
    """Condition on a finite-resolution Gaussian measurement: :math:`B \\to B - C^T (A + \\sigma_m)^{-1} C`."""
    idx, measured, rest = _split(state, meas.mode)
    a = state.cov[np.ix_(measured, measured)]
    c = state.cov[np.ix_(measured, rest)]
    b = state.cov[np.ix_(rest, rest)]

    kernel = np.linalg.inv(a + meas.cov_meas)
    mean = state.mean[rest]
    if meas.outcome is not None:
        mean = mean + c.T @ kernel @ (np.asarray(meas.outcome, dtype=np.float64) - state.mean[measured])

    return GaussianState(
        mean=mean,
        cov=symmetrize(b - c.T @ kernel @ c),
        modes=state.modes.without(idx),
    )
