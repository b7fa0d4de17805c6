from __future__ import annotations

from typing import TYPE_CHECKING, Any, Self

import numpy as np
from attrs import define, evolve, field
from scipy.linalg import block_diag

from omentangle.exceptions import InvalidArgumentError, InvalidStateError
from omentangle.math import as_matrix, as_vector, is_symmetric, quadrature_indices, symplectic_form

from .modes import ModeRegistry

if TYPE_CHECKING:
    from collections.abc import Iterable

    from omentangle.math import Matrix, Vector

    from .modes import ModeRef

__all__ = [
    "GaussianState",
    "PHYSICALITY_TOL",
    "VACUUM_VARIANCE",
    "thermal_variance",
    "is_physical",
    "tensor",
    "partial_trace",
]

PHYSICALITY_TOL = 1e-10
VACUUM_VARIANCE = 0.5


def thermal_variance(occupation: float) -> float:
    """Return the quadrature variance :math:`(1 + 2\\bar n)/2` of a thermal state."""
    return (1.0 + 2.0 * occupation) / 2.0


def is_physical(cov: Matrix, tol: float = PHYSICALITY_TOL) -> bool:
    """Test the uncertainty principle :math:`\\sigma + i\\Omega/2 \\geq 0` to *tol*.

    *tol* is scaled by the largest entry of *cov* once that exceeds one.
    """
    if cov.size == 0:
        return True
    n_modes = cov.shape[0] // 2
    hermitian = cov + 0.5j * symplectic_form(n_modes)
    scale = max(1.0, float(np.abs(cov).max()))
    return bool(np.linalg.eigvalsh(hermitian).min() >= -tol * scale)


@define(frozen=True, eq=False)
class GaussianState:
    """First and second moments of an n-mode Gaussian state."""

    mean: Vector = field(converter=as_vector, repr=False)
    cov: Matrix = field(converter=as_matrix)
    modes: ModeRegistry = field()

    @modes.default
    def _default_modes(self) -> ModeRegistry:
        return ModeRegistry.default(self.cov.shape[0] // 2)

    def __attrs_post_init__(self) -> None:
        dim = self.cov.shape[0]
        if dim % 2 or self.cov.shape != (dim, dim):
            raise InvalidArgumentError(f"Covariance must be 2n x 2n, got shape {self.cov.shape}")
        if self.mean.shape != (dim,):
            raise InvalidArgumentError(f"Mean of length {self.mean.shape[0]} does not match {dim} quadratures")
        if len(self.modes) != dim // 2:
            raise InvalidArgumentError(f"Registry {self.modes} does not match {dim // 2} modes")
        if not is_symmetric(self.cov):
            raise InvalidArgumentError("Covariance matrix is not symmetric")

    @property
    def n_modes(self) -> int:
        return len(self.modes)

    def index(self, mode: ModeRef) -> int:
        return self.modes.index(mode)

    def block(self, first: ModeRef, second: ModeRef | None = None) -> Matrix:
        """Return the 2x2 covariance block between two modes (or of one mode with itself)."""
        i = 2 * self.index(first)
        j = 2 * self.index(first if second is None else second)
        return self.cov[i : i + 2, j : j + 2].copy()

    def is_physical(self, tol: float = PHYSICALITY_TOL) -> bool:
        return is_physical(self.cov, tol)

    def assert_physical(self, tol: float = PHYSICALITY_TOL) -> None:
        if not self.is_physical(tol):
            raise InvalidStateError(f"State on {self.modes} violates the uncertainty principle")

    def relabel(self, *labels: str) -> Self:
        return evolve(self, modes=ModeRegistry(labels))

    def with_moments(self, mean: Vector | None = None, cov: Matrix | None = None) -> Self:
        changes: dict[str, Any] = {}
        if mean is not None:
            changes["mean"] = mean
        if cov is not None:
            changes["cov"] = cov
        return evolve(self, **changes)

    @classmethod
    def vacuum(cls, *labels: str) -> Self:
        return cls.thermal(0.0, *labels)

    @classmethod
    def thermal(cls, occupation: float, *labels: str) -> Self:
        if occupation < 0:
            raise InvalidArgumentError(f"Occupation must be non-negative, got {occupation}")
        registry = ModeRegistry(labels or ("0",))
        dim = 2 * len(registry)
        return cls(mean=np.zeros(dim), cov=thermal_variance(occupation) * np.eye(dim), modes=registry)

    @classmethod
    def squeezed_thermal(cls, v_x: float, v_p: float, label: str = "0") -> Self:
        return cls(mean=np.zeros(2), cov=np.diag([v_x, v_p]), modes=ModeRegistry((label,)))

    def __rich_repr__(self) -> Iterable[tuple[str, object]]:
        yield "modes", str(self.modes)
        yield "cov", np.array2string(self.cov, precision=6, suppress_small=True)


def tensor(*states: GaussianState) -> GaussianState:
    """Return the product state: direct sums of means and covariances, registries concatenated."""
    if not states:
        raise InvalidArgumentError("tensor() requires at least one state")
    registry = states[0].modes
    for state in states[1:]:
        registry = registry.concat(state.modes)
    return GaussianState(
        mean=np.concatenate([state.mean for state in states]),
        cov=block_diag(*(state.cov for state in states)),
        modes=registry,
    )


def partial_trace(state: GaussianState, keep_modes: Iterable[ModeRef]) -> GaussianState:
    """Restrict *state* to *keep_modes* (in the given order)."""
    kept = state.modes.indices(keep_modes)
    if not kept:
        raise InvalidArgumentError("partial_trace() requires a non-empty set of modes to keep")
    if len(set(kept)) != len(kept):
        raise InvalidArgumentError(f"Duplicate modes in {kept}")
    rows = quadrature_indices(kept)
    return GaussianState(
        mean=state.mean[rows],
        cov=state.cov[np.ix_(rows, rows)],
        modes=state.modes.restrict(kept),
    )
