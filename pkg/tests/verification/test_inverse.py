from __future__ import annotations

import pytest
from numpy.testing import assert_allclose

from omentangle.exceptions import SingularInversionError
from omentangle.protocols import ProtocolKind
from omentangle.verification import build_sigma_ver, inverse_map


def _invert(ver, gamma):
    config = ver.config
    return inverse_map(ver, gamma, config.n_bath, config.omega_m)


@pytest.mark.parametrize("kind", list(ProtocolKind))
@pytest.mark.parametrize("mode", ["plain", "conservative_time"])
def test_recovers_the_generated_covariance(config, kind, mode):
    ver = build_sigma_ver(kind, config.with_(r=0.2), mode)
    result = _invert(ver, config.gamma)
    assert_allclose(result.sigma_zero_est, ver.reference, atol=1e-9, rtol=0.0)
    assert result.residual < 1e-9


@pytest.mark.parametrize("kind", list(ProtocolKind))
def test_without_decoherence_is_the_identity(config, kind):
    ver = build_sigma_ver(kind, config, "conservative_time")
    assert_allclose(_invert(ver, 0.0).sigma_zero_est, ver.sigma_ver, atol=1e-10, rtol=0.0)


def test_wrong_linewidth_leaves_a_residual(config):
    ver = build_sigma_ver("om", config, "conservative_time")
    assert _invert(ver, 1.1 * config.gamma).residual > 1e-6


def test_vanishing_gain(config):
    ver = build_sigma_ver("int", config, "conservative_time")
    with pytest.raises(SingularInversionError):
        _invert(ver, 1e10)
