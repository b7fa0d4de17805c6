from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from omentangle.exceptions import InvalidArgumentError, InvalidStateError
from omentangle.gaussian import (
    GaussianState,
    apply_symplectic,
    log_negativity,
    purity,
    purity_optimal_squeezing,
    symplectic_eigenvalues,
    tensor,
    von_neumann_entropy,
)
from tests.strategies import gaussian_states, local_symplectics, two_mode_squeezed


class TestLogNegativity:
    @pytest.mark.parametrize("r", [0.1, 0.5, 1.2])
    def test_two_mode_squeezed_vacuum(self, r):
        report = log_negativity(two_mode_squeezed(r).cov)
        assert report.nu_minus == pytest.approx(math.exp(-2 * r) / 2.0)
        assert report.log_neg == pytest.approx(2.0 * r / math.log(2.0))
        assert report.ppt_lambda == pytest.approx((1.0 - math.cosh(4 * r)) / 2.0)
        assert report.is_entangled

    def test_strongly_squeezed_pair(self):
        r = 4.0
        report = log_negativity(two_mode_squeezed(r).cov)
        assert report.nu_minus == pytest.approx(math.exp(-2 * r) / 2.0, rel=1e-4)
        assert report.log_neg == pytest.approx(2.0 * r / math.log(2.0), rel=1e-5)

    def test_product_state(self):
        product = tensor(GaussianState.thermal(3.0, "A"), GaussianState.squeezed_thermal(0.1, 2.5, "B"))
        report = log_negativity(product.cov)
        assert report.log_neg == 0.0
        assert report.ppt_lambda > 0.0
        assert not report.is_entangled

    @given(gaussian_states(n_modes=2), local_symplectics(n_modes=2))
    def test_local_symplectic_invariance(self, state, local):
        before = log_negativity(state.cov).log_neg
        after = log_negativity(apply_symplectic(state, local).cov).log_neg
        assert after == pytest.approx(before, abs=1e-6)

    @given(gaussian_states(n_modes=2))
    def test_witness_agrees_with_negativity(self, state):
        report = log_negativity(state.cov)
        scale = max(1.0, float(np.abs(state.cov).max()) ** 4)
        assume(abs(report.ppt_lambda) > 1e-9 * scale)
        assert (report.ppt_lambda < 0.0) == report.is_entangled

    def test_rejects_unphysical(self):
        with pytest.raises(InvalidStateError):
            log_negativity(np.diag([0.1, 0.1, 0.5, 0.5]))

    def test_unphysical_allowed_on_request(self):
        report = log_negativity(np.diag([0.1, 0.1, 0.5, 0.5]), check_physical=False)
        assert report.log_neg >= 0.0

    def test_needs_two_modes(self):
        with pytest.raises(InvalidArgumentError):
            log_negativity(0.5 * np.eye(6))


class TestSpectra:
    def test_thermal_symplectic_eigenvalues(self):
        state = tensor(GaussianState.thermal(1.0, "A"), GaussianState.thermal(4.0, "B"))
        assert_allclose(symplectic_eigenvalues(state.cov), [1.5, 4.5])

    @given(gaussian_states(n_modes=2), local_symplectics(n_modes=2))
    def test_symplectic_eigenvalues_are_invariant(self, state, local):
        evolved = apply_symplectic(state, local)
        assert_allclose(symplectic_eigenvalues(evolved.cov), symplectic_eigenvalues(state.cov), rtol=1e-6)

    def test_purity(self):
        assert purity(0.5 * np.eye(4)) == pytest.approx(1.0)
        assert purity(GaussianState.thermal(1.0, "A").cov) == pytest.approx(1.0 / 3.0)

    def test_vacuum_entropy(self):
        assert von_neumann_entropy(0.5 * np.eye(2)) == pytest.approx(0.0, abs=1e-12)

    def test_thermal_entropy(self):
        n = 2.0
        expected = ((n + 1) * math.log(n + 1) - n * math.log(n)) / math.log(2.0)
        assert von_neumann_entropy(GaussianState.thermal(n, "A").cov) == pytest.approx(expected)


class TestPurityOptimalSqueezing:
    @given(st.floats(0.1, 50.0), st.floats(0.1, 50.0))
    def test_symmetrizes(self, v_x, v_p):
        r = purity_optimal_squeezing(v_x, v_p)
        assert v_x * math.exp(2 * r) == pytest.approx(v_p * math.exp(-2 * r))

    def test_rejects_non_positive(self):
        with pytest.raises(InvalidArgumentError):
            purity_optimal_squeezing(0.0, 1.0)
