"""Numeric pipelines against the analytic covariance matrices."""

from __future__ import annotations

import itertools
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from omentangle.gaussian import GaussianState, HomodyneMeasurement, ModeRegistry, homodyne_update
from omentangle.protocols import (
    TWO_PI,
    ProtocolKind,
    closed_form,
    entangle,
    interferometric_closed_form,
    j_factors,
    noninterferometric_closed_form,
    om_closed_form,
    precool,
)

CHI_VALUES = (0.5, 1.0, 2.0, 3.0, 5.0)
R_VALUES = (0.0, 0.3, 0.6, 0.9, 1.2)
THETA_VALUES = (0.0, math.pi / 2, TWO_PI)
GRID = list(itertools.product(CHI_VALUES, R_VALUES, THETA_VALUES))


@pytest.mark.parametrize("kind", list(ProtocolKind))
@pytest.mark.parametrize(("chi", "r", "theta"), GRID)
def test_pipeline_matches_closed_form(config, kind, chi, r, theta):
    config = config.with_(chi=chi, r=r, theta=theta, phi=theta)
    assert_allclose(entangle(kind, config).cov, closed_form(kind, config), atol=1e-9, rtol=0.0)


@pytest.mark.parametrize("kind", list(ProtocolKind))
def test_closed_form_with_strong_decoherence(config, kind):
    config = config.with_(gamma=2e4, n_bath=50.0, theta=1.0, phi=2.0, r=0.4)
    assert_allclose(entangle(kind, config).cov, closed_form(kind, config), atol=1e-9, rtol=0.0)


def test_closed_forms_accept_given_cooling(config):
    cooled = precool(config)
    given = (cooled.v_x, cooled.v_p)
    for form in (om_closed_form, interferometric_closed_form, noninterferometric_closed_form):
        assert_allclose(form(config, given), form(config))


def test_j_factors_without_squeezing(config):
    v_x = precool(config).v_x
    z = v_x * config.eta_cav**3 * config.eta_det * config.chi**2
    j = j_factors(config.with_(r=0.0), v_x)
    assert j.a == pytest.approx((1.0 + 2.0 * z) / (1.0 + 4.0 * z))
    assert j.b == pytest.approx((1.0 + 2.0 * z) / (1.0 + 4.0 * z))
    assert j.c == pytest.approx(4.0 / (1.0 + 4.0 * z))


def test_noninterferometric_position_block_from_direct_conditioning(config):
    # Lossless, undamped and unsqueezed: one pulse reads X1 + X2 through its phase quadrature.
    v_x, v_p, chi = 3.0, 40.0, 2.0
    coupling = np.eye(6)
    coupling[5, [0, 2]] = chi
    coupling[[1, 3], 4] = chi
    prior = np.diag([v_x, v_p, v_x, v_p, 0.5, 0.5])
    state = GaussianState(mean=np.zeros(6), cov=coupling @ prior @ coupling.T, modes=ModeRegistry(("M1", "M2", "L")))
    conditioned = homodyne_update(state, HomodyneMeasurement(mode="L", angle=math.pi / 2))

    lossless = config.with_(chi=chi, r=0.0, gamma=0.0, eta_cav=1.0, eta_det=1.0)
    cov = noninterferometric_closed_form(lossless, (v_x, v_p))
    assert cov[0, 2] == pytest.approx(conditioned.cov[0, 2])
    assert cov[0, 0] == pytest.approx(conditioned.cov[0, 0])
    assert cov[2, 2] == pytest.approx(conditioned.cov[2, 2])
    assert cov[0, 2] == pytest.approx(-(chi**2) * v_x**2 / (0.5 + 2.0 * chi**2 * v_x))
