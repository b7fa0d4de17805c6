from __future__ import annotations

import math
from typing import TYPE_CHECKING, Self

import numpy as np
from attrs import define, field

from omentangle.exceptions import InvalidArgumentError
from omentangle.math import as_matrix, quadrature_indices, require_finite, symmetrize, symplectic_form

from .state import GaussianState

if TYPE_CHECKING:
    from collections.abc import Sequence

    from omentangle.math import Matrix

__all__ = [
    "SymplecticOp",
    "SYMPLECTIC_TOL",
    "make_rotation",
    "make_squeezer",
    "make_beamsplitter",
    "make_pulsed_om",
    "apply_symplectic",
]

SYMPLECTIC_TOL = 1e-10


def _check_symplectic(_instance: SymplecticOp, _attribute: object, matrix: Matrix) -> None:
    dim = matrix.shape[0]
    if dim == 0 or dim % 2 or matrix.shape != (dim, dim):
        raise InvalidArgumentError(f"Symplectic matrix must be 2n x 2n, got shape {matrix.shape}")
    omega = symplectic_form(dim // 2)
    scale = max(1.0, float(np.max(np.abs(matrix))) ** 2)
    if np.max(np.abs(matrix @ omega @ matrix.T - omega)) > SYMPLECTIC_TOL * scale:
        raise InvalidArgumentError("Matrix does not preserve the symplectic form")


@define(frozen=True, eq=False)
class SymplecticOp:
    """Real matrix :math:`S` with :math:`S \\Omega S^T = \\Omega`, acting as :math:`\\sigma \\to S \\sigma S^T`."""

    matrix: Matrix = field(converter=as_matrix, validator=_check_symplectic)

    @property
    def n_modes(self) -> int:
        return self.matrix.shape[0] // 2

    def __matmul__(self, other: SymplecticOp) -> SymplecticOp:
        """Compose: ``(a @ b)`` applies ``b`` first."""
        if self.n_modes != other.n_modes:
            raise InvalidArgumentError(f"Cannot compose {self.n_modes}-mode and {other.n_modes}-mode operations")
        return SymplecticOp(self.matrix @ other.matrix)

    def embed(self, modes: Sequence[int], n_modes: int) -> Self:
        """Act with this operation on *modes* of an *n_modes* system, identity elsewhere."""
        if len(modes) != self.n_modes:
            raise InvalidArgumentError(f"Expected {self.n_modes} target modes, got {len(modes)}")
        if len(set(modes)) != len(modes):
            raise InvalidArgumentError(f"Target modes collide: {tuple(modes)}")
        if any(not 0 <= mode < n_modes for mode in modes):
            raise InvalidArgumentError(f"Target modes {tuple(modes)} out of range for {n_modes} modes")
        rows = quadrature_indices(modes)
        full = np.eye(2 * n_modes)
        full[np.ix_(rows, rows)] = self.matrix
        return type(self)(full)

    @classmethod
    def identity(cls, n_modes: int) -> Self:
        return cls(np.eye(2 * n_modes))


def make_rotation(theta: float) -> SymplecticOp:
    """Phase-space rotation :math:`[[\\cos\\theta, \\sin\\theta], [-\\sin\\theta, \\cos\\theta]]`."""
    theta = require_finite("theta", theta)
    c, s = math.cos(theta), math.sin(theta)
    return SymplecticOp([[c, s], [-s, c]])


def make_squeezer(r: float) -> SymplecticOp:
    """Single-mode squeezer :math:`\\mathrm{diag}(e^r, e^{-r})`; positive *r* squeezes P."""
    r = require_finite("r", r)
    return SymplecticOp(np.diag([math.exp(r), math.exp(-r)]))


def make_beamsplitter(alpha: float, beta: float) -> SymplecticOp:
    """Two-mode beamsplitter with mixing angle *alpha* and phase *beta*.

    ``alpha = pi/4`` is a balanced splitter; with ``beta = 0`` it maps
    :math:`X_1 \\to (X_1 + X_2)/\\sqrt{2}` and :math:`X_2 \\to (X_2 - X_1)/\\sqrt{2}`.
    """
    alpha = require_finite("alpha", alpha)
    beta = require_finite("beta", beta)
    ca, sa = math.cos(alpha), math.sin(alpha)
    cb, sb = math.cos(beta), math.sin(beta)
    return SymplecticOp(
        [
            [ca, 0.0, sa * cb, -sa * sb],
            [0.0, ca, sa * sb, sa * cb],
            [-sa * cb, -sa * sb, ca, 0.0],
            [sa * sb, -sa * cb, 0.0, ca],
        ],
    )


def make_pulsed_om(chi: float, light_mode: int, mech_mode: int, n_modes: int) -> SymplecticOp:
    """Pulsed optomechanical interaction :math:`e^{i\\chi X_L X_M}`.

    Positions are unchanged while :math:`P_L \\to P_L + \\chi X_M` and :math:`P_M \\to P_M + \\chi X_L`.
    """
    chi = require_finite("chi", chi)
    if light_mode == mech_mode:
        raise InvalidArgumentError(f"Light and mechanical modes must differ, both are {light_mode}")
    for name, mode in (("light_mode", light_mode), ("mech_mode", mech_mode)):
        if not 0 <= mode < n_modes:
            raise InvalidArgumentError(f"{name}={mode} out of range for {n_modes} modes")

    matrix = np.eye(2 * n_modes)
    matrix[2 * light_mode + 1, 2 * mech_mode] = chi
    matrix[2 * mech_mode + 1, 2 * light_mode] = chi
    return SymplecticOp(matrix)


def apply_symplectic(state: GaussianState, op: SymplecticOp) -> GaussianState:
    if op.n_modes != state.n_modes:
        raise InvalidArgumentError(f"{op.n_modes}-mode operation applied to a {state.n_modes}-mode state")
    s = op.matrix
    return state.with_moments(mean=s @ state.mean, cov=symmetrize(s @ state.cov @ s.T))
