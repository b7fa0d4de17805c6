from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from omentangle.exceptions import InvalidArgumentError, SingularMeasurementError
from omentangle.gaussian import (
    GaussianState,
    GeneraldyneMeasurement,
    HomodyneMeasurement,
    generaldyne_update,
    homodyne_update,
)
from tests.strategies import angles, gaussian_states, two_mode_squeezed


class TestHomodyne:
    def test_position_readout_of_two_mode_squeezed_vacuum(self):
        r = 0.7
        conditioned = homodyne_update(two_mode_squeezed(r), HomodyneMeasurement(mode=0, angle=0.0))
        assert conditioned.n_modes == 1
        assert_allclose(conditioned.cov, np.diag([1.0 / (2.0 * math.cosh(2 * r)), math.cosh(2 * r) / 2.0]))

    @given(gaussian_states(n_modes=3), angles, st.floats(-10.0, 10.0))
    def test_covariance_ignores_the_outcome(self, state, angle, outcome):
        at_mean = homodyne_update(state, HomodyneMeasurement(mode=1, angle=angle))
        shifted = homodyne_update(state, HomodyneMeasurement(mode=1, angle=angle, outcome=outcome))
        assert_allclose(shifted.cov, at_mean.cov)
        assert shifted.is_physical(tol=1e-8)

    def test_prior_mean_outcome_leaves_mean(self):
        state = GaussianState(mean=[1.0, 0.0, 2.0, 3.0], cov=two_mode_squeezed(0.4).cov)
        assert_allclose(homodyne_update(state, HomodyneMeasurement(mode=0, angle=0.0)).mean, [2.0, 3.0])
        assert_allclose(homodyne_update(state, HomodyneMeasurement(mode=0, angle=0.0, outcome=1.0)).mean, [2.0, 3.0])

    def test_outcome_shifts_correlated_quadrature(self):
        r = 0.5
        state = two_mode_squeezed(r)
        conditioned = homodyne_update(state, HomodyneMeasurement(mode=0, angle=0.0, outcome=1.0))
        assert_allclose(conditioned.mean, [math.tanh(2 * r), 0.0], atol=1e-15)

    def test_zero_variance(self):
        state = GaussianState(mean=np.zeros(4), cov=np.diag([0.0, 1.0, 0.5, 0.5]))
        with pytest.raises(SingularMeasurementError):
            homodyne_update(state, HomodyneMeasurement(mode=0, angle=0.0))

    def test_measuring_the_only_mode_leaves_nothing(self):
        conditioned = homodyne_update(GaussianState.vacuum("L"), HomodyneMeasurement(mode="L", angle=0.0, outcome=0.3))
        assert conditioned.n_modes == 0
        assert conditioned.cov.shape == (0, 0)
        assert conditioned.mean.shape == (0,)
        assert conditioned.is_physical()

    def test_unknown_mode(self):
        with pytest.raises(InvalidArgumentError):
            homodyne_update(GaussianState.vacuum("L"), HomodyneMeasurement(mode="M", angle=0.0))

    def test_rejects_non_finite_angle(self):
        with pytest.raises(InvalidArgumentError):
            HomodyneMeasurement(mode=0, angle=math.nan)


class TestGeneraldyne:
    def test_homodyne_is_the_infinitely_squeezed_limit(self):
        state = two_mode_squeezed(0.6)
        eps = 1e-9
        sharp = generaldyne_update(state, GeneraldyneMeasurement(mode=0, cov_meas=np.diag([eps, 1.0 / eps])))
        ideal = homodyne_update(state, HomodyneMeasurement(mode=0, angle=0.0))
        assert_allclose(sharp.cov, ideal.cov, atol=1e-6)

    def test_uninformative_measurement(self):
        state = two_mode_squeezed(0.6)
        blind = generaldyne_update(state, GeneraldyneMeasurement(mode=0, cov_meas=1e12 * np.eye(2)))
        assert_allclose(blind.cov, state.block(1), atol=1e-9)

    def test_heterodyne(self):
        r = 0.3
        c, s = math.cosh(2 * r) / 2.0, math.sinh(2 * r) / 2.0
        conditioned = generaldyne_update(two_mode_squeezed(r), GeneraldyneMeasurement(mode=0, cov_meas=0.5 * np.eye(2)))
        assert_allclose(conditioned.cov, (c - s * s / (c + 0.5)) * np.eye(2))

    def test_rejects_unphysical_measurement(self):
        with pytest.raises(InvalidArgumentError):
            GeneraldyneMeasurement(mode=0, cov_meas=np.diag([0.1, 0.1]))
