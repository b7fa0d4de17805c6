from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import numpy as np
from attrs import define, field

from omentangle.exceptions import SingularInversionError
from omentangle.math import as_matrix

from .recipe import pair_mechanics, readout_channel
from .sigma_ver import assemble

if TYPE_CHECKING:
    from omentangle.math import Matrix, Vector
    from omentangle.protocols import ProtocolConfig

    from .recipe import ElementRecipe, Probe
    from .sigma_ver import VerifiedCovariance

__all__ = [
    "GAIN_FLOOR",
    "InverseMapResult",
    "decoherence_map",
    "inverse_map",
]

logger = logging.getLogger(__name__)

GAIN_FLOOR = 1e-12
COUPLING_TOL = 1e-14

_UPPER = [(i, j) for i in range(4) for j in range(i, 4)]
_POSITION = {index: k for k, index in enumerate(_UPPER)}


@define(frozen=True, eq=False)
class InverseMapResult:
    """Covariance at generation recovered from a reconstruction, and its largest deviation from the true one."""

    sigma_zero_est: Matrix = field(converter=as_matrix)
    residual: float | None = None


def _probe_row(probe: Probe, config: ProtocolConfig, mechanical: tuple[bool, bool]) -> tuple[Vector, float]:
    """Variance of *probe* as ``row @ upper(sigma_0) + const``, leaving out its readout noise."""
    channel = readout_channel(config, probe.angles, mechanical)
    if channel.gain.min() <= GAIN_FLOOR:
        raise SingularInversionError(f"Decoherence gain {channel.gain.min():.3g} at angles {probe.angles} is too small")
    scaled = probe.weights * np.sqrt(channel.gain)
    kernel = np.outer(scaled, scaled)
    row = np.array([kernel[i, j] if i == j else kernel[i, j] + kernel[j, i] for i, j in _UPPER])
    const = float(probe.weights**2 @ ((1.0 - channel.gain) * np.diag(channel.env_cov)))
    return row, const


def decoherence_map(
    recipes: tuple[ElementRecipe, ...],
    config: ProtocolConfig,
    mechanical: tuple[bool, bool],
) -> tuple[Matrix, Vector]:
    """Affine map ``upper(sigma_ver) = M @ upper(sigma_0) + c`` over the ten upper-triangle elements.

    Readout noise and its subtraction are treated as part of the signal, so ``c`` only holds bath terms.
    """
    matrix = np.zeros((len(_UPPER), len(_UPPER)))
    const = np.zeros(len(_UPPER))
    for recipe in recipes:
        k = _POSITION[recipe.index]
        for coef, probe in recipe.terms:
            row, bath = _probe_row(probe, config, mechanical)
            matrix[k] += recipe.scale * coef * row
            const[k] += recipe.scale * coef * bath
    return matrix, const


def _solve(matrix: Matrix, target: Vector) -> Vector:
    """Back-substitute, starting from the elements that depend on nothing but themselves."""
    solution = np.zeros_like(target)
    solved: set[int] = set()
    pending = set(range(target.size))
    while pending:
        ready = []
        for k in sorted(pending):
            row = matrix[k]
            coupled = np.abs(row) > COUPLING_TOL * np.abs(row).max(initial=0.0)
            if not any(coupled[j] for j in pending if j != k):
                ready.append(k)
        if not ready:
            raise SingularInversionError(f"Elements {sorted(_UPPER[k] for k in pending)} depend on each other")
        for k in ready:
            diagonal = matrix[k, k]
            if abs(diagonal) <= GAIN_FLOOR:
                raise SingularInversionError(f"Element {_UPPER[k]} is insensitive to its own value at generation")
            known = sum(matrix[k, j] * solution[j] for j in solved)
            solution[k] = (target[k] - known) / diagonal
        solved.update(ready)
        pending.difference_update(ready)
        logger.debug("Recovered elements %s", [_UPPER[k] for k in ready])
    return solution


def inverse_map(ver: VerifiedCovariance, gamma: float, n_bath: float, omega_m: float) -> InverseMapResult:
    """Undo the decoherence each element picked up before its readout.

    Local elements read at a single time are inverted directly; those read at two times, or whose
    recipe mixes in other elements under unequal decoherence, follow once their inputs are known.
    """
    config = ver.config.with_(gamma=gamma, n_bath=n_bath, omega_m=omega_m)
    matrix, const = decoherence_map(ver.recipes, config, pair_mechanics(ver.kind))
    target = np.array([ver.sigma_ver[i, j] for i, j in _UPPER]) - const
    solution = _solve(matrix, target)

    estimate = assemble(_UPPER, list(solution))
    residual = float(np.max(np.abs(estimate - ver.reference)))
    return InverseMapResult(sigma_zero_est=estimate, residual=residual)
