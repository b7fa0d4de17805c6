from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from numpy.testing import assert_allclose

from omentangle.exceptions import InvalidArgumentError, InvalidStateError
from omentangle.gaussian import GaussianState, ModeRegistry, is_physical, partial_trace, tensor, thermal_variance
from tests.strategies import gaussian_states


class TestModeRegistry:
    def test_lookup(self):
        registry = ModeRegistry(("L", "M"))
        assert registry.index("M") == 1
        assert registry.index(0) == 0
        assert str(registry) == "L⊗M"

    @pytest.mark.parametrize("mode", ["X", 2, -1])
    def test_unknown_mode(self, mode):
        with pytest.raises(InvalidArgumentError):
            ModeRegistry(("L", "M")).index(mode)

    def test_duplicate_labels(self):
        with pytest.raises(InvalidArgumentError):
            ModeRegistry(("M", "M"))

    def test_without(self):
        assert ModeRegistry(("L", "M1", "M2")).without("M1").labels == ("L", "M2")

    def test_concat_renames_clashes(self):
        merged = ModeRegistry(("M",)).concat(ModeRegistry(("M",)))
        assert merged.labels == ("M0", "M1")


class TestGaussianState:
    def test_thermal(self):
        state = GaussianState.thermal(2.0, "M")
        assert_allclose(state.cov, 2.5 * np.eye(2))
        assert thermal_variance(0.0) == 0.5

    def test_vacuum_is_physical(self):
        assert GaussianState.vacuum("A", "B").is_physical()

    def test_below_vacuum_is_unphysical(self):
        state = GaussianState(mean=np.zeros(2), cov=np.diag([0.4, 0.6]))
        assert not state.is_physical()
        with pytest.raises(InvalidStateError):
            state.assert_physical()

    def test_squeezed_vacuum_is_physical(self):
        assert is_physical(np.diag([0.05, 5.0]))

    @pytest.mark.parametrize(
        ("mean", "cov"),
        [
            (np.zeros(3), np.eye(3)),
            (np.zeros(4), np.eye(2)),
            (np.zeros(2), np.array([[1.0, 0.2], [0.0, 1.0]])),
        ],
    )
    def test_rejects_malformed_moments(self, mean, cov):
        with pytest.raises(InvalidArgumentError):
            GaussianState(mean=mean, cov=cov)

    def test_block(self):
        cov = np.arange(16, dtype=float).reshape(4, 4)
        cov = cov + cov.T
        state = GaussianState(mean=np.zeros(4), cov=cov, modes=ModeRegistry(("A", "B")))
        assert_allclose(state.block("A", "B"), cov[:2, 2:])
        assert_allclose(state.block("B"), cov[2:, 2:])


class TestComposition:
    def test_tensor_is_direct_sum(self):
        joint = tensor(GaussianState.thermal(1.0, "A"), GaussianState.squeezed_thermal(0.25, 1.0, "B"))
        assert joint.modes.labels == ("A", "B")
        assert_allclose(joint.cov, np.diag([1.5, 1.5, 0.25, 1.0]))

    def test_tensor_requires_states(self):
        with pytest.raises(InvalidArgumentError):
            tensor()

    @given(gaussian_states(n_modes=3))
    def test_partial_trace_keeps_requested_order(self, state):
        reduced = partial_trace(state, [2, 0])
        assert reduced.modes.labels == (state.modes.labels[2], state.modes.labels[0])
        assert_allclose(reduced.block(0), state.block(2))
        assert_allclose(reduced.block(0, 1), state.block(2, 0))
        assert_allclose(reduced.mean, state.mean[[4, 5, 0, 1]])

    @given(gaussian_states(n_modes=2))
    def test_reduced_states_are_physical(self, state):
        assert partial_trace(state, [0]).is_physical()
        assert partial_trace(state, [1]).is_physical()

    def test_partial_trace_rejects_duplicates(self):
        with pytest.raises(InvalidArgumentError):
            partial_trace(GaussianState.vacuum("A", "B"), ["A", "A"])
