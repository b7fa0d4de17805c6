"""
The :mod:`omentangle.math` module contains phase-space utilities shared by every
subpackage.

Quadratures of an n-mode system are ordered :math:`(X_1, P_1, X_2, P_2, \\dots)`
and the vacuum variance is 1/2.

Interface Functions:

* :func:`symplectic_form` --- Return the block-diagonal symplectic form of n modes
* :func:`quadrature_direction` --- Return the phase-space direction of :math:`X(\\phi)`
* :func:`quadrature_indices` --- Return the row indices of a set of modes
* :func:`symmetrize` --- Return the symmetric part of a matrix
* :func:`is_symmetric` --- Test a matrix for symmetry with a scale-aware tolerance
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np
import numpy.typing as npt

from omentangle.exceptions import InvalidArgumentError

if TYPE_CHECKING:
    from collections.abc import Iterable

__all__ = [
    "Matrix",
    "Vector",
    "SYMMETRY_TOL",
    "symplectic_form",
    "quadrature_direction",
    "quadrature_indices",
    "symmetrize",
    "is_symmetric",
    "as_matrix",
    "as_vector",
    "require_finite",
]

type Matrix = npt.NDArray[np.float64]
type Vector = npt.NDArray[np.float64]

SYMMETRY_TOL = 1e-12


def symplectic_form(n_modes: int) -> Matrix:
    """Return :math:`\\Omega = \\bigoplus_k [[0, 1], [-1, 0]]` for *n_modes* modes.

    >>> symplectic_form(1).tolist()
    [[0.0, 1.0], [-1.0, 0.0]]
    """
    if n_modes < 1:
        raise ValueError("expected n_modes >= 1")
    return np.kron(np.eye(n_modes), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def quadrature_direction(phi: float) -> Vector:
    """Return :math:`(\\cos\\phi, \\sin\\phi)`, so that :math:`X(\\phi) = X\\cos\\phi + P\\sin\\phi`.

    The rotated phase quadrature :math:`P(\\phi) = P\\cos\\phi - X\\sin\\phi` is :math:`X(\\phi + \\pi/2)`.

    >>> [round(float(c), 12) for c in quadrature_direction(math.pi / 2)]
    [0.0, 1.0]
    """
    return np.array([math.cos(phi), math.sin(phi)])


def quadrature_indices(modes: Iterable[int]) -> list[int]:
    """Return the rows of :math:`(X, P)` for each mode, in the given order.

    >>> quadrature_indices([2, 0])
    [4, 5, 0, 1]
    """
    return [row for mode in modes for row in (2 * mode, 2 * mode + 1)]


def symmetrize(matrix: Matrix) -> Matrix:
    return 0.5 * (matrix + matrix.T)


def is_symmetric(matrix: Matrix, tol: float = SYMMETRY_TOL) -> bool:
    """Test symmetry to *tol*, relative to the largest entry when it exceeds one."""
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    scale = max(1.0, float(np.max(np.abs(matrix), initial=0.0)))
    return bool(np.max(np.abs(matrix - matrix.T), initial=0.0) <= tol * scale)


def as_matrix(value: npt.ArrayLike) -> Matrix:
    matrix = np.array(value, dtype=np.float64)
    if matrix.ndim != 2:
        raise ValueError(f"expected a 2-D array, got shape {matrix.shape}")
    return matrix


def as_vector(value: npt.ArrayLike) -> Vector:
    vector = np.array(value, dtype=np.float64)
    if vector.ndim != 1:
        raise ValueError(f"expected a 1-D array, got shape {vector.shape}")
    return vector


def require_finite(name: str, value: float) -> float:
    """Return *value* as a float, raising on NaN or infinity.

    >>> require_finite("theta", float("nan"))
    Traceback (most recent call last):
        ...
    omentangle.exceptions.InvalidArgumentError: theta must be finite, got nan
    """
    value = float(value)
    if not math.isfinite(value):
        raise InvalidArgumentError(f"{name} must be finite, got {value}")
    return value
