from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from omentangle.protocols import ProtocolConfig

settings.register_profile(
    "omentangle",
    max_examples=200,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("omentangle")


@pytest.fixture
def config() -> ProtocolConfig:
    """Proposed experimental parameters."""
    return ProtocolConfig()


@pytest.fixture
def lossless() -> ProtocolConfig:
    return ProtocolConfig(eta_cav=1.0, eta_det=1.0, gamma=0.0)
