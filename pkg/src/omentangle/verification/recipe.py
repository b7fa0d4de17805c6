"""
Measurement recipes for the reconstructed covariance.

Every element of the reconstructed matrix is a linear combination of the
variances of a few measured quadrature combinations, shifted by a known
noise offset and rescaled. A :class:`Probe` is one such combination, written
as weights on the quadratures of the entangled pair at the moment each mode
is read; an :class:`ElementRecipe` says how its variances are combined.

Readouts of a mechanical mode use a verification pulse,
:math:`\\sqrt{\\eta}(P_{in} + \\chi X_M(\\theta))` plus vacuum from the loss, so they
carry unit-variance-scaled input noise of 1/2. Optical modes are read
directly and only carry the loss noise :math:`(1-\\eta)/2`.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np
from attrs import define, field

from omentangle.exceptions import InvalidArgumentError
from omentangle.gaussian import VACUUM_VARIANCE, GaussianChannel, GaussianState, apply_channel
from omentangle.math import as_vector, quadrature_direction
from omentangle.protocols import ProtocolKind

from .mode import VerificationMode

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from omentangle.math import Vector
    from omentangle.protocols import ProtocolConfig

__all__ = [
    "PULSE_NOISE",
    "Probe",
    "ElementRecipe",
    "pair_mechanics",
    "readout_channel",
    "probe_variance",
    "build_recipes",
]

PULSE_NOISE = VACUUM_VARIANCE

_QUARTER = math.pi / 2


@define(frozen=True, eq=False)
class Probe:
    """A measured quadrature combination and the angle at which each mode it touches is read."""

    weights: Vector = field(converter=as_vector)
    angles: tuple[float, float]
    noise: float
    modes: frozenset[int]

    @weights.validator
    def _check_weights(self, _attribute: object, weights: Vector) -> None:
        if weights.shape != (4,):
            raise InvalidArgumentError(f"Probe weights must cover two modes, got shape {weights.shape}")


@define(frozen=True, eq=False)
class ElementRecipe:
    """``scale * (sum(coef * Var(probe)) - offset)`` for the element at *index*."""

    index: tuple[int, int]
    terms: tuple[tuple[float, Probe], ...]
    scale: float
    offset: float = 0.0
    timing: tuple[float, ...] = ()

    @property
    def probes(self) -> tuple[Probe, ...]:
        return tuple(probe for _, probe in self.terms)

    def evaluate(self, variances: Sequence[float]) -> float:
        total = sum(coef * variance for (coef, _), variance in zip(self.terms, variances, strict=True))
        return self.scale * (total - self.offset)


def _embed(mode: int, direction: Vector) -> Vector:
    weights = np.zeros(4)
    weights[2 * mode : 2 * mode + 2] = direction
    return weights


def _pulse(mode: int, angle: float, eta: float, chi: float) -> Probe:
    angles = [0.0, 0.0]
    angles[mode] = angle
    return Probe(
        weights=math.sqrt(eta) * chi * _embed(mode, quadrature_direction(angle)),
        angles=(angles[0], angles[1]),
        noise=PULSE_NOISE,
        modes=frozenset({mode}),
    )


def _direct(angle: float, eta: float) -> Probe:
    return Probe(
        weights=math.sqrt(eta) * _embed(0, quadrature_direction(angle)),
        angles=(angle, 0.0),
        noise=(1.0 - eta) * VACUUM_VARIANCE,
        modes=frozenset({0}),
    )


def _double_pass(first: float, second: float, eta: float, chi: float) -> Probe:
    """One pulse through both cavities, reading ``X_1(first) + X_2(second)``."""
    weights = np.concatenate([quadrature_direction(first), quadrature_direction(second)])
    return Probe(weights=eta * chi * weights, angles=(first, second), noise=PULSE_NOISE, modes=frozenset({0, 1}))


def _balanced(first: Probe, second: Probe, sign: float) -> Probe:
    """Outputs of a balanced beamsplitter that combines readouts of different modes."""
    if first.modes & second.modes:
        raise InvalidArgumentError("Balanced combination needs readouts of different modes")
    angles = tuple(first.angles[k] if k in first.modes else second.angles[k] for k in (0, 1))
    return Probe(
        weights=(first.weights + sign * second.weights) / math.sqrt(2.0),
        angles=(angles[0], angles[1]),
        noise=(first.noise + second.noise) / 2.0,
        modes=first.modes | second.modes,
    )


def pair_mechanics(kind: ProtocolKind) -> tuple[bool, bool]:
    """Which modes of the entangled pair decohere while they wait to be read."""
    return (kind.is_mechanical, True)


def readout_channel(config: ProtocolConfig, angles: Iterable[float], mechanical: Iterable[bool]) -> GaussianChannel:
    """Decoherence of each mechanical mode of the pair up to its readout angle."""
    gains, env = [], []
    for angle, is_mech in zip(angles, mechanical, strict=True):
        gains.append(config.decay(angle) if is_mech else 1.0)
        env.append(config.bath_variance() if is_mech else VACUUM_VARIANCE)
    return GaussianChannel(gain=np.repeat(gains, 2), env_cov=np.diag(np.repeat(env, 2)))


def probe_variance(probe: Probe, state: GaussianState, config: ProtocolConfig, mechanical: tuple[bool, bool]) -> float:
    """Exact variance of *probe* measured on the pair that was generated in *state*."""
    decohered = apply_channel(state, readout_channel(config, probe.angles, mechanical))
    return float(probe.weights @ decohered.cov @ probe.weights) + probe.noise


def _local_block(mode: int, eta: float, chi: float, subtract: bool) -> list[ElementRecipe]:
    row = 2 * mode
    scale = 1.0 / (eta * chi**2)
    offset = PULSE_NOISE if subtract else 0.0
    return [
        ElementRecipe((row, row), ((1.0, _pulse(mode, 0.0, eta, chi)),), scale, offset, (0.0,)),
        ElementRecipe(
            (row, row + 1),
            ((1.0, _pulse(mode, math.pi / 4, eta, chi)), (-1.0, _pulse(mode, 3 * math.pi / 4, eta, chi))),
            scale / 2.0,
            timing=(math.pi / 4, 3 * math.pi / 4),
        ),
        ElementRecipe((row + 1, row + 1), ((1.0, _pulse(mode, _QUARTER, eta, chi)),), scale, offset, (_QUARTER,)),
    ]


def _optical_block(eta: float, subtract: bool) -> list[ElementRecipe]:
    offset = (1.0 - eta) * VACUUM_VARIANCE if subtract else 0.0
    return [
        ElementRecipe((0, 0), ((1.0, _direct(0.0, eta)),), 1.0 / eta, offset, (0.0,)),
        ElementRecipe(
            (0, 1),
            ((1.0, _direct(5 * math.pi / 4, eta)), (-1.0, _direct(3 * math.pi / 4, eta))),
            1.0 / (2.0 * eta),
            timing=(5 * math.pi / 4, 3 * math.pi / 4),
        ),
        ElementRecipe((1, 1), ((1.0, _direct(_QUARTER, eta)),), 1.0 / eta, offset, (_QUARTER,)),
    ]


def _cross(index: tuple[int, int], first: Probe, second: Probe, scale: float, timing: tuple[float, ...]) -> ElementRecipe:
    plus, minus = _balanced(first, second, 1.0), _balanced(first, second, -1.0)
    return ElementRecipe(index, ((1.0, plus), (-1.0, minus)), scale, timing=timing)


def _om_cross(eta: float, chi: float, columns: tuple[float, float]) -> list[ElementRecipe]:
    recipes = []
    for i, phi in enumerate((0.0, _QUARTER)):
        for j, theta in enumerate(columns):
            recipes.append(
                _cross((i, 2 + j), _direct(phi, eta), _pulse(1, theta, eta, chi), 1.0 / (2.0 * chi * eta), (phi, theta)),
            )
    return recipes


def _interferometric_cross(eta: float, chi: float, columns: tuple[float, float]) -> list[ElementRecipe]:
    recipes = []
    for i, first in enumerate(columns):
        for j, second in enumerate(columns):
            recipes.append(
                _cross(
                    (i, 2 + j),
                    _pulse(0, first, eta, chi),
                    _pulse(1, second, eta, chi),
                    1.0 / (2.0 * chi**2 * eta),
                    (first, second),
                ),
            )
    return recipes


def _serial(index: tuple[int, int], first: float, second: float, sign: float, eta: float, chi: float) -> ElementRecipe:
    """``sign * [Var(S(first, second)) - Var(S(first, second + pi))]`` with the second mode always read last."""
    terms = (
        (sign, _double_pass(first, second, eta, chi)),
        (-sign, _double_pass(first, second + math.pi, eta, chi)),
    )
    return ElementRecipe(index, terms, 1.0 / (4.0 * chi**2 * eta**2), timing=(first, second))


def _noninterferometric_cross(eta: float, chi: float, columns: tuple[float, float]) -> list[ElementRecipe]:
    x, p = columns
    return [
        _serial((0, 2), x, x, 1.0, eta, chi),
        _serial((0, 3), x, p, 1.0, eta, chi),
        # X_2 is read at x + pi after P_1 so the second readout comes last.
        _serial((1, 2), p, x + math.pi, -1.0, eta, chi),
        _serial((1, 3), p, p, 1.0, eta, chi),
    ]


def build_recipes(
    kind: ProtocolKind | str,
    config: ProtocolConfig,
    mode: VerificationMode | str,
) -> tuple[ElementRecipe, ...]:
    """Return the ten recipes of the upper triangle for a protocol in a verification mode."""
    kind, mode = ProtocolKind.parse(kind), VerificationMode.parse(mode)
    eta, chi = config.eta_ver, config.chi
    if chi <= 0.0:
        raise InvalidArgumentError(f"Verification pulses need chi > 0, got {chi}")

    subtract = mode.subtracts_noise
    columns = (mode.time_offset, mode.time_offset + _QUARTER)
    match kind:
        case ProtocolKind.OPTOMECHANICAL:
            recipes = _optical_block(eta, subtract) + _local_block(1, eta, chi, subtract) + _om_cross(eta, chi, columns)
        case ProtocolKind.INTERFEROMETRIC:
            recipes = (
                _local_block(0, eta, chi, subtract)
                + _local_block(1, eta, chi, subtract)
                + _interferometric_cross(eta, chi, columns)
            )
        case ProtocolKind.NON_INTERFEROMETRIC:
            recipes = (
                _local_block(0, eta, chi, subtract)
                + _local_block(1, eta, chi, subtract)
                + _noninterferometric_cross(eta, chi, columns)
            )
    return tuple(recipes)
