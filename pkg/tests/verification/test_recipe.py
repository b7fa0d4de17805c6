from __future__ import annotations

import math

import numpy as np
import pytest

from omentangle.exceptions import InvalidArgumentError
from omentangle.protocols import ProtocolKind
from omentangle.verification import PULSE_NOISE, Probe, build_recipes, readout_channel

UPPER = {(i, j) for i in range(4) for j in range(i, 4)}


@pytest.mark.parametrize("mode", ["plain", "conservative_time", "conservative_time_noise"])
@pytest.mark.parametrize("kind", list(ProtocolKind))
def test_recipes_cover_the_upper_triangle(config, kind, mode):
    recipes = build_recipes(kind, config, mode)
    assert {recipe.index for recipe in recipes} == UPPER
    assert len(recipes) == len(UPPER)


def test_noise_offsets(config):
    subtracted = {recipe.index: recipe.offset for recipe in build_recipes("int", config, "conservative_time")}
    kept = {recipe.index: recipe.offset for recipe in build_recipes("int", config, "conservative_time_noise")}
    assert subtracted[(0, 0)] == PULSE_NOISE
    assert kept[(0, 0)] == 0.0
    assert subtracted[(0, 2)] == kept[(0, 2)] == 0.0


def test_local_off_diagonal_is_read_at_two_angles(config):
    recipes = {recipe.index: recipe for recipe in build_recipes("om", config, "plain")}
    assert recipes[(2, 3)].timing == (math.pi / 4, 3 * math.pi / 4)


def test_evaluate(config):
    recipe = build_recipes("om", config, "plain")[0]
    assert recipe.evaluate([2.0]) == pytest.approx(recipe.scale * (2.0 - recipe.offset))


def test_verification_needs_a_pulse(config):
    with pytest.raises(InvalidArgumentError):
        build_recipes("non", config.with_(chi=0.0), "plain")


def test_probe_weights_cover_two_modes():
    with pytest.raises(InvalidArgumentError):
        Probe(weights=np.ones(2), angles=(0.0, 0.0), noise=0.5, modes=frozenset({0}))


def test_readout_channel_spares_the_light(config):
    channel = readout_channel(config, (math.pi, math.pi), (False, True))
    assert channel.gain[0] == channel.gain[1] == 1.0
    assert channel.gain[2] == pytest.approx(config.decay(math.pi))
    assert channel.env_cov[2, 2] == pytest.approx(config.bath_variance())
