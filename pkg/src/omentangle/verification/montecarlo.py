from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING

import numpy as np

from omentangle.exceptions import InvalidArgumentError
from omentangle.math import quadrature_direction
from omentangle.protocols import ProtocolKind, generated_state, prepare
from omentangle.protocols.stages import decohere

from .mode import VerificationMode
from .recipe import build_recipes
from .sigma_ver import VerifiedCovariance, assemble

if TYPE_CHECKING:
    from omentangle.math import Matrix
    from omentangle.protocols import PreparedState, ProtocolConfig

    from .recipe import Probe

__all__ = [
    "SampledVariance",
    "sample_probe",
    "monte_carlo_sigma_ver",
]

logger = logging.getLogger(__name__)

_SEED_MASK = (1 << 64) - 1

type SampledVariance = tuple[float, float]


def _observables(prepared: PreparedState, probe: Probe) -> Matrix:
    """Rows picking out each generation-stage homodyne and then the probe from the joint quadratures."""
    state = prepared.state
    rows = np.zeros((len(prepared.readouts) + 1, 2 * state.n_modes))
    for k, readout in enumerate(prepared.readouts):
        i = 2 * state.index(readout.label)
        rows[k, i : i + 2] = quadrature_direction(readout.angle)
    for k, label in enumerate(prepared.pair):
        i = 2 * state.index(label)
        rows[-1, i : i + 2] = probe.weights[2 * k : 2 * k + 2]
    return rows


def sample_probe(
    prepared: PreparedState,
    probe: Probe,
    config: ProtocolConfig,
    n_samples: int,
    rng: np.random.Generator,
) -> SampledVariance:
    """Sample a probe over many runs and return its estimated variance with the standard error.

    Each run draws the generation-stage homodyne outcomes jointly with the probe readout. The conditional
    first moment implied by those outcomes is recorded and subtracted, so the residuals carry the
    conditional variance only.
    """
    state = prepared.state
    for k, label in enumerate(prepared.pair):
        if label in prepared.mechanics:
            state = decohere(state, config, probe.angles[k], label)

    rows = _observables(prepared, probe)
    mean = rows @ state.mean
    cov = rows @ state.cov @ rows.T
    cov[-1, -1] += probe.noise

    draws = mean + rng.standard_normal((n_samples, mean.size)) @ np.linalg.cholesky(cov).T
    outcomes, readout = draws[:, :-1], draws[:, -1]
    predicted = np.full(n_samples, mean[-1])
    if outcomes.shape[1]:
        kalman = np.linalg.solve(cov[:-1, :-1], cov[:-1, -1])
        predicted = predicted + (outcomes - mean[:-1]) @ kalman

    variance = float(np.mean((readout - predicted) ** 2))
    return variance, variance * math.sqrt(2.0 / n_samples)


def monte_carlo_sigma_ver(
    kind: ProtocolKind | str,
    config: ProtocolConfig,
    mode: VerificationMode | str,
    n_samples: int,
    seed: int,
) -> tuple[VerifiedCovariance, Matrix]:
    """Estimate the reconstructed covariance from *n_samples* simulated runs per probe.

    Returns the estimate and the standard error of every element. The same *seed* always gives the same result.
    """
    if n_samples < 2:
        raise InvalidArgumentError(f"n_samples must be at least 2, got {n_samples}")
    kind, mode = ProtocolKind.parse(kind), VerificationMode.parse(mode)
    rng = np.random.default_rng(seed & _SEED_MASK)
    prepared = prepare(kind, config)
    recipes = build_recipes(kind, config, mode)

    values, errors = [], []
    for recipe in recipes:
        sampled = [sample_probe(prepared, probe, config, n_samples, rng) for probe in recipe.probes]
        values.append(recipe.evaluate([variance for variance, _ in sampled]))
        spread = sum((coef * error) ** 2 for (coef, _), (_, error) in zip(recipe.terms, sampled, strict=True))
        errors.append(abs(recipe.scale) * math.sqrt(spread))

    logger.info("Sampled %d runs for each of %d elements (seed %d)", n_samples, len(recipes), seed)
    indices = [recipe.index for recipe in recipes]
    verified = VerifiedCovariance(
        kind=kind,
        mode=mode,
        sigma_ver=assemble(indices, values),
        recipes=recipes,
        reference=generated_state(kind, config).cov,
        config=config,
    )
    return verified, assemble(indices, errors)
