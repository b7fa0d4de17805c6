"""
Analytic covariance matrices of the protocols.

They are written in the rotating frame, with the entangled pair ordered as
in the numeric pipelines, and serve as independent oracles for them.

Interface Functions:

* :func:`cool_closed_form` --- Variances left by a single precooling pulse
* :func:`om_closed_form` --- Light-mechanics covariance
* :func:`interferometric_closed_form` --- Mechanical covariance for homodyne angles ``(0, pi/2)``
* :func:`j_factors` --- Measurement factors of the non-interferometric scheme
* :func:`noninterferometric_closed_form` --- Mechanical covariance of the non-interferometric scheme
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np
from attrs import define

from omentangle.exceptions import InvalidArgumentError

if TYPE_CHECKING:
    from omentangle.math import Matrix

    from .config import ProtocolConfig

__all__ = [
    "JFactors",
    "cool_closed_form",
    "om_closed_form",
    "interferometric_closed_form",
    "j_factors",
    "noninterferometric_closed_form",
]


def cool_closed_form(config: ProtocolConfig) -> tuple[float, float]:
    """Return ``(v_x, v_p)`` after at most one precooling pulse and a quarter period of decoherence."""
    if config.precool_pulses == 0:
        variance = (1.0 + 2.0 * config.n_bar) / 2.0
        return variance, variance
    if config.precool_pulses != 1:
        raise InvalidArgumentError(f"Closed form covers at most one precooling pulse, got {config.precool_pulses}")

    g = config.decay(math.pi / 2)
    chi2 = config.chi**2
    thermal = 1.0 + 2.0 * config.n_bar
    bath = 1.0 + 2.0 * config.n_bath
    v_x = (bath + 2.0 * g * (config.n_bar - config.n_bath) + g * chi2) / 2.0
    v_p = (bath * (1.0 - g) + g * thermal / (1.0 + config.eta * chi2 * thermal)) / 2.0
    return v_x, v_p


def _cooled(config: ProtocolConfig, cooled: tuple[float, float] | None) -> tuple[float, float]:
    return cool_closed_form(config) if cooled is None else cooled


def _blocks(a: Matrix, b: Matrix, c: Matrix) -> Matrix:
    return np.block([[a, c], [c.T, b]])


def om_closed_form(config: ProtocolConfig, cooled: tuple[float, float] | None = None) -> Matrix:
    """Covariance of light ⊗ mechanics, with ``eta = eta_cav * eta_det`` in the correlations."""
    v_x, v_p = _cooled(config, cooled)
    r, chi, eta_d, eta = config.r, config.chi, config.eta_det, config.eta
    g = config.decay(config.theta)
    floor = (1.0 + 2.0 * config.n_bath) * (1.0 - g)

    a = np.diag([
        (1.0 - eta_d + math.exp(2 * r) * eta_d) / 2.0,
        (1.0 - eta_d + math.exp(-2 * r) * eta_d * (1.0 + 2.0 * v_x * config.eta_cav * chi**2)) / 2.0,
    ])
    b = np.diag([
        (floor + 2.0 * v_x * g) / 2.0,
        (floor + (2.0 * v_p + chi**2) * g) / 2.0,
    ])
    amplitude = math.sqrt(g * eta) * chi
    c = np.array([
        [0.0, math.exp(r) * amplitude / 2.0],
        [v_x * math.exp(-r) * amplitude, 0.0],
    ])
    return _blocks(a, b, c)


def _gains(config: ProtocolConfig) -> tuple[float, float, float]:
    g_a, g_b = config.decay(config.theta), config.decay(config.phi)
    return g_a, g_b, math.sqrt(g_a * g_b)


def interferometric_closed_form(config: ProtocolConfig, cooled: tuple[float, float] | None = None) -> Matrix:
    """Mechanical covariance when the outputs are read at angles ``(0, pi/2)``."""
    v_x, v_p = _cooled(config, cooled)
    r, chi, eta_c, eta_d, eta = config.r, config.chi, config.eta_cav, config.eta_det, config.eta
    g_a, g_b, g_c = _gains(config)
    bath = 1.0 + 2.0 * config.n_bath
    e2r = math.exp(2 * r)

    position = e2r * (1.0 - eta_d) + eta_d * (1.0 + 2.0 * v_x * eta_c * chi**2)
    momentum = 1.0 + eta_d * (e2r - 1.0)

    def local(g: float) -> Matrix:
        return np.diag([
            (bath * (1.0 - g) + 2.0 * v_x * g * (1.0 - eta * v_x * chi**2 / position)) / 2.0,
            (bath * (1.0 - g) + g * (2.0 * v_p + chi**2 - 0.5 * e2r * eta * chi**2 / momentum)) / 2.0,
        ])

    c = np.diag([
        g_c * eta * v_x**2 * chi**2 / position,
        -0.25 * e2r * g_c * eta * chi**2 / momentum,
    ])
    return _blocks(local(g_a), local(g_b), c)


@define(frozen=True)
class JFactors:
    """Factors by which the phase readout shrinks the position variances (``a``, ``b``) and sets their correlation (``c``)."""

    a: float
    b: float
    c: float


def j_factors(config: ProtocolConfig, v_x: float) -> JFactors:
    """Return the measurement factors for the non-interferometric scheme.

    At ``r = 0`` they reduce to ``J_a = J_b = (1 + 2z) / (1 + 4z)`` and ``J_c = 4 / (1 + 4z)``
    with ``z = v_x * eta_cav**3 * eta_det * chi**2``.
    """
    r, chi, eta_c, eta_d = config.r, config.chi, config.eta_cav, config.eta_det
    coupling = 2.0 * v_x * eta_c * chi**2
    denominator = (
        math.exp(5 * r) * (1.0 - eta_d)
        + math.exp(3 * r) * eta_d * (1.0 - eta_c**2 * (1.0 - coupling))
        + math.exp(r) * eta_c**2 * eta_d * (1.0 + coupling)
    )
    readout = 2.0 * eta_c**3 * eta_d * v_x * chi**2
    return JFactors(
        a=1.0 - readout * math.exp(r) / denominator,
        b=1.0 - readout * math.exp(3 * r) / denominator,
        c=4.0 / denominator,
    )


def noninterferometric_closed_form(config: ProtocolConfig, cooled: tuple[float, float] | None = None) -> Matrix:
    """Mechanical covariance after the phase readout of the shared pulse.

    The position entries match direct Gaussian conditioning: the variances carry ``2 g v_x J``
    and the correlation carries ``-J_c / 2``.
    """
    v_x, v_p = _cooled(config, cooled)
    r, chi, eta_c, eta_d = config.r, config.chi, config.eta_cav, config.eta_det
    g_a, g_b, g_c = _gains(config)
    bath = 1.0 + 2.0 * config.n_bath
    j = j_factors(config, v_x)

    a = np.diag([
        (bath * (1.0 - g_a) + 2.0 * g_a * v_x * j.a) / 2.0,
        (bath * (1.0 - g_a) + g_a * (2.0 * v_p + chi**2)) / 2.0,
    ])
    b = np.diag([
        (bath * (1.0 - g_b) + 2.0 * g_b * v_x * j.b) / 2.0,
        (bath * (1.0 - g_b) + g_b * (2.0 * v_p + eta_c**2 * chi**2 * (1.0 + eta_c * (math.exp(2 * r) - 1.0)))) / 2.0,
    ])
    c = np.diag([
        -0.5 * math.exp(2 * r) * v_x**2 * g_c * eta_c**3 * eta_d * chi**2 * j.c,
        0.5 * math.exp(r) * g_c * eta_c**2 * chi**2,
    ])
    return _blocks(a, b, c)
