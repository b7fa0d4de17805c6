from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import numpy as np
from attrs import define, field

from omentangle.gaussian import log_negativity
from omentangle.math import as_matrix
from omentangle.protocols import ProtocolKind, generated_state

from .mode import VerificationMode
from .recipe import build_recipes, pair_mechanics, probe_variance

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from omentangle.gaussian import EntanglementReport
    from omentangle.math import Matrix
    from omentangle.protocols import ProtocolConfig

    from .recipe import ElementRecipe

__all__ = [
    "VerifiedCovariance",
    "assemble",
    "build_sigma_ver",
]

logger = logging.getLogger(__name__)


@define(frozen=True, eq=False)
class VerifiedCovariance:
    """Covariance reconstructed from homodyne statistics, with the recipes (and so the timing) behind each element.

    *reference* is the pair's covariance right after generation, which the reconstruction approximates.
    """

    kind: ProtocolKind
    mode: VerificationMode
    sigma_ver: Matrix = field(converter=as_matrix)
    recipes: tuple[ElementRecipe, ...]
    reference: Matrix = field(converter=as_matrix, repr=False)
    config: ProtocolConfig = field(repr=False)

    @property
    def element_angles(self) -> dict[tuple[int, int], tuple[float, ...]]:
        """Readout angle(s) of each upper-triangle element: one for local elements, two for cross elements."""
        return {recipe.index: recipe.timing for recipe in self.recipes}

    def log_negativity(self) -> EntanglementReport:
        return log_negativity(self.sigma_ver, check_physical=False)


def assemble(indices: Iterable[tuple[int, int]], values: Sequence[float]) -> Matrix:
    """Fill a symmetric 4x4 matrix from upper-triangle values."""
    matrix = np.zeros((4, 4))
    for (i, j), value in zip(indices, values, strict=True):
        matrix[i, j] = matrix[j, i] = value
    return matrix


def build_sigma_ver(
    kind: ProtocolKind | str,
    config: ProtocolConfig,
    mode: VerificationMode | str = VerificationMode.PLAIN,
) -> VerifiedCovariance:
    """Reconstruct the pair's covariance from exact variances of the prescribed homodyne combinations."""
    kind, mode = ProtocolKind.parse(kind), VerificationMode.parse(mode)
    state = generated_state(kind, config)
    mechanical = pair_mechanics(kind)
    recipes = build_recipes(kind, config, mode)

    values = [
        recipe.evaluate([probe_variance(probe, state, config, mechanical) for probe in recipe.probes])
        for recipe in recipes
    ]
    sigma_ver = assemble((recipe.index for recipe in recipes), values)
    logger.debug("Reconstructed %s covariance in %s mode:\n%s", kind.label, mode.value, sigma_ver)
    return VerifiedCovariance(
        kind=kind,
        mode=mode,
        sigma_ver=sigma_ver,
        recipes=recipes,
        reference=state.cov,
        config=config,
    )
