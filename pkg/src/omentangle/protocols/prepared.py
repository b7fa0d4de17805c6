from __future__ import annotations

from typing import TYPE_CHECKING

from attrs import define, field

from omentangle.gaussian import partial_trace

from .stages import evolve_mechanics, measure

if TYPE_CHECKING:
    from collections.abc import Mapping, Sequence

    from omentangle.gaussian import GaussianState

    from .config import ProtocolConfig

__all__ = [
    "Readout",
    "PreparedState",
]


@define(frozen=True)
class Readout:
    """A generation-stage homodyne of optical mode *label* at quadrature angle *angle*."""

    label: str
    angle: float = field(converter=float)


@define(frozen=True)
class PreparedState:
    """Joint state right before the generation-stage homodynes.

    *pair* names the two modes that remain entangled; *mechanics* the ones that decohere afterwards.
    """

    state: GaussianState
    readouts: tuple[Readout, ...]
    pair: tuple[str, str]
    mechanics: tuple[str, ...]

    def condition(self, outcomes: Sequence[float | None] | None = None) -> GaussianState:
        """Apply the readouts (at the prior mean unless *outcomes* are given) and keep the pair."""
        if outcomes is None:
            outcomes = [None] * len(self.readouts)
        state = self.state
        for readout, outcome in zip(self.readouts, outcomes, strict=True):
            state = measure(state, readout.label, readout.angle, outcome)
        return partial_trace(state, self.pair)

    def finish(self, config: ProtocolConfig, angles: Mapping[str, float]) -> GaussianState:
        """Condition, then let each mechanical mode evolve by its angle."""
        return evolve_mechanics(self.condition(), config, dict(angles), lab_frame=config.lab_frame)
