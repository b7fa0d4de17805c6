from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np
from attrs import define, field, validators
from scipy.special import xlogy

from omentangle.exceptions import InvalidArgumentError, InvalidStateError
from omentangle.math import is_symmetric, symplectic_form

from .state import PHYSICALITY_TOL, VACUUM_VARIANCE, is_physical

if TYPE_CHECKING:
    from omentangle.math import Matrix, Vector

__all__ = [
    "EntanglementReport",
    "symplectic_eigenvalues",
    "log_negativity",
    "purity",
    "von_neumann_entropy",
    "purity_optimal_squeezing",
]


@define(frozen=True)
class EntanglementReport:
    """Partial-transpose spectrum of a two-mode state.

    ``log_neg`` is in bits; ``ppt_lambda`` is :math:`4\\det\\sigma - \\tilde\\Delta + 1/4`, negative iff entangled.
    """

    nu_minus: float = field(validator=validators.ge(0.0))
    log_neg: float = field(validator=validators.ge(0.0))
    ppt_lambda: float

    @property
    def is_entangled(self) -> bool:
        return self.log_neg > 0.0


def _check_cov(cov: Matrix) -> Matrix:
    cov = np.asarray(cov, dtype=np.float64)
    if cov.ndim != 2 or cov.shape[0] != cov.shape[1] or cov.shape[0] % 2:
        raise InvalidArgumentError(f"Expected a 2n x 2n covariance, got shape {cov.shape}")
    if not is_symmetric(cov):
        raise InvalidArgumentError("Covariance matrix is not symmetric")
    return cov


def _spectrum(cov: Matrix) -> Vector:
    """Symplectic eigenvalues of a checked covariance, ascending.

    For positive-definite *cov* = :math:`RR^T` the values come from the Hermitian matrix
    :math:`iR^T\\Omega R`, which keeps small eigenvalues accurate when the entries are large.
    """
    n_modes = cov.shape[0] // 2
    omega = symplectic_form(n_modes)
    try:
        factor = np.linalg.cholesky(cov)
    except np.linalg.LinAlgError:
        spectrum = np.abs(np.linalg.eigvals(1j * omega @ cov))
    else:
        spectrum = np.abs(np.linalg.eigvalsh(1j * (factor.T @ omega @ factor)))
    return np.sort(spectrum)[::2]


def symplectic_eigenvalues(cov: Matrix) -> Vector:
    """Return the n symplectic eigenvalues of *cov* in ascending order.

    The spectrum of :math:`i\\Omega\\sigma` is :math:`\\{\\pm\\nu_k\\}`; each pair contributes one value.
    """
    return _spectrum(_check_cov(cov))


def log_negativity(cov: Matrix, *, check_physical: bool = True) -> EntanglementReport:
    """Logarithmic negativity of a two-mode covariance in block form ``[[A, C], [C^T, B]]``.

    Reconstructed covariances are not guaranteed to be physical; pass ``check_physical=False`` for those.
    """
    cov = _check_cov(cov)
    if cov.shape != (4, 4):
        raise InvalidArgumentError(f"Expected a two-mode (4x4) covariance, got shape {cov.shape}")
    if check_physical and not is_physical(cov, PHYSICALITY_TOL):
        raise InvalidStateError("Covariance matrix violates the uncertainty principle")

    a, b, c = cov[:2, :2], cov[2:, 2:], cov[:2, 2:]
    det_sigma = float(np.linalg.det(cov))
    delta = float(np.linalg.det(a) + np.linalg.det(b) - 2.0 * np.linalg.det(c))

    # Partial transpose: P of the second mode changes sign.
    flip = np.diag([1.0, 1.0, 1.0, -1.0])
    nu_minus = float(_spectrum(flip @ cov @ flip)[0])
    if nu_minus <= 0.0:
        raise InvalidStateError("Partially transposed covariance has a vanishing symplectic eigenvalue")

    log_neg = 0.0 if nu_minus >= VACUUM_VARIANCE else -math.log2(2.0 * nu_minus)
    return EntanglementReport(
        nu_minus=nu_minus,
        log_neg=log_neg,
        ppt_lambda=4.0 * det_sigma - delta + 0.25,
    )


def purity(cov: Matrix) -> float:
    """Return :math:`\\mu = 1/\\sqrt{4^n \\det\\sigma}`."""
    cov = _check_cov(cov)
    det = float(np.linalg.det(2.0 * cov))
    if det <= 0.0:
        raise InvalidStateError(f"Covariance determinant must be positive, got {det}")
    return 1.0 / math.sqrt(det)


def von_neumann_entropy(cov: Matrix) -> float:
    """Entropy in bits of a single-mode state with symplectic eigenvalue :math:`\\nu = \\sqrt{\\det\\sigma}`."""
    cov = _check_cov(cov)
    if cov.shape != (2, 2):
        raise InvalidArgumentError(f"Expected a single-mode (2x2) covariance, got shape {cov.shape}")
    det = float(np.linalg.det(cov))
    if det <= 0.0:
        raise InvalidStateError(f"Covariance determinant must be positive, got {det}")
    nu = math.sqrt(det)
    if nu < VACUUM_VARIANCE - PHYSICALITY_TOL:
        raise InvalidStateError(f"Symplectic eigenvalue {nu} is below the vacuum value")
    upper, lower = nu + 0.5, max(nu - 0.5, 0.0)
    return float(xlogy(upper, upper) - xlogy(lower, lower)) / math.log(2.0)


def purity_optimal_squeezing(v_x: float, v_p: float) -> float:
    """Squeezing that symmetrizes ``diag(v_x, v_p)``: :math:`e^{2r} = \\sqrt{v_p / v_x}`.

    A symmetric state maximizes the output purity and minimizes the output entropy of any
    phase-insensitive channel among all squeezed versions of the input.
    """
    if v_x <= 0.0 or v_p <= 0.0:
        raise InvalidArgumentError(f"Variances must be positive, got {v_x}, {v_p}")
    return 0.25 * math.log(v_p / v_x)
