from __future__ import annotations

import math

import numpy as np
import pytest

from omentangle.analysis import scheme_comparison
from omentangle.protocols import TWO_PI, ProtocolKind


def test_squeezing_never_hurts(config):
    results = scheme_comparison(config, angles=(math.pi / 2,), chi_grid=np.linspace(2.0, 4.0, 5))
    assert len(results) == 2 * len(ProtocolKind)
    for plain, squeezed in zip(results[::2], results[1::2], strict=True):
        assert (plain.kind, plain.theta) == (squeezed.kind, squeezed.theta)
        assert not plain.squeezed and squeezed.squeezed
        assert plain.r == 0.0
        assert squeezed.log_neg >= plain.log_neg - 1e-6


@pytest.mark.slow
def test_scheme_ordering(config):
    results = scheme_comparison(config, chi_grid=np.geomspace(0.5, 20.0, 25))
    best = {(row.kind, row.theta, row.squeezed): row.log_neg for row in results}
    for theta in (0.0, math.pi / 2, TWO_PI):
        for squeezed in (False, True):
            om, inter, non = (best[kind, theta, squeezed] for kind in ProtocolKind)
            assert om > non > inter
