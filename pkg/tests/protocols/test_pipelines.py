from __future__ import annotations

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from omentangle.exceptions import InvalidArgumentError
from omentangle.gaussian import log_negativity
from omentangle.protocols import (
    ProtocolKind,
    entangle,
    generated_state,
    om_entangle,
    om_entangle_squeezed_first,
    prepare,
    prepare_noninterferometric,
    precool,
    prepare_optomechanical,
    symmetric_squeezing,
    symmetrizing_squeezing,
)

KINDS = list(ProtocolKind)
LONG_WAIT = 5 * math.pi


def _log_neg(kind, config):
    return log_negativity(entangle(kind, config).cov).log_neg


@pytest.mark.parametrize("kind", KINDS)
class TestOutputs:
    def test_pair_labels(self, config, kind):
        expected = ("L", "M") if kind is ProtocolKind.OPTOMECHANICAL else ("M1", "M2")
        assert entangle(kind, config).modes.labels == expected

    def test_output_is_physical(self, config, kind):
        for r in (0.0, 0.5):
            assert entangle(kind, config.with_(r=r)).is_physical()

    def test_entangled_at_proposed_parameters(self, config, kind):
        assert _log_neg(kind, config) > 0.0

    def test_kick_moves_only_the_mean(self, config, kind):
        plain = entangle(kind, config)
        kicked = entangle(kind, config.with_(lambda_kick=3.0))
        assert_allclose(kicked.cov, plain.cov)
        assert not np.allclose(kicked.mean, plain.mean)

    def test_lab_frame_is_a_local_rotation(self, config, kind):
        config = config.with_(theta=1.1, phi=0.4)
        rotating = entangle(kind, config)
        lab = entangle(kind, config.with_(lab_frame=True))
        assert not np.allclose(lab.cov, rotating.cov)
        assert log_negativity(lab.cov).log_neg == pytest.approx(log_negativity(rotating.cov).log_neg, abs=1e-9)

    def test_generated_state_skips_the_evolution(self, config, kind):
        assert_allclose(generated_state(kind, config).cov, entangle(kind, config.with_(theta=0.0, phi=0.0)).cov)

    def test_conditioning_on_outcomes_keeps_the_covariance(self, config, kind):
        prepared = prepare(kind, config)
        outcomes = [1.5] * len(prepared.readouts)
        assert_allclose(prepared.condition(outcomes).cov, prepared.condition().cov)

    def test_decoherence_only_reduces_entanglement(self, config, kind):
        assert _log_neg(kind, config.with_(theta=LONG_WAIT, phi=LONG_WAIT)) < _log_neg(kind, config)

    def test_strong_pulses_lose_entanglement(self, config, kind):
        # Decoherence from the precooling and from the post-generation rotation both grow with chi.
        peak = max(_log_neg(kind, config.with_(chi=chi, r=0.0)) for chi in np.linspace(0.5, 6.0, 23))
        assert _log_neg(kind, config.with_(chi=20.0, r=0.0)) < peak


class TestOptomechanical:
    def test_squeezer_placement_is_irrelevant_without_squeezing(self, config):
        assert_allclose(om_entangle_squeezed_first(config).cov, om_entangle(config).cov, atol=1e-12)

    def test_no_generation_readout(self, config):
        assert prepare_optomechanical(config).readouts == ()


class TestSymmetrizingSqueezing:
    def test_optomechanical_light_is_symmetric(self, config):
        r_sym = symmetrizing_squeezing("om", config)
        light = prepare_optomechanical(config.with_(r=r_sym)).state.block("L")
        assert light[0, 0] == pytest.approx(light[1, 1], rel=1e-10)

    def test_interferometric_uses_the_single_arm_formula(self, config):
        v_x = precool(config).v_x
        assert symmetrizing_squeezing("int", config) == pytest.approx(symmetric_squeezing(config.chi, config.eta_cav, v_x))

    def test_noninterferometric_light_is_symmetric(self, config):
        r_sym = symmetrizing_squeezing("non", config)
        light = prepare_noninterferometric(config.with_(r=r_sym)).state.block("L")
        assert light[0, 0] == pytest.approx(light[1, 1], rel=1e-8)
        assert r_sym > 0.0

    @pytest.mark.parametrize("kind", KINDS)
    def test_no_interaction_needs_no_squeezing(self, config, kind):
        assert symmetrizing_squeezing(kind, config.with_(chi=0.0)) == 0.0


class TestInvalidInput:
    def test_unknown_protocol(self, config):
        with pytest.raises(InvalidArgumentError):
            entangle("bell", config)
