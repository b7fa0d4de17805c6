from __future__ import annotations

import math

import pytest

from omentangle.analysis import (
    TABLE_COLUMNS,
    EfficiencyThreshold,
    Target,
    efficiency_table,
    min_eta_cav,
    total_optical_efficiency,
)
from omentangle.exceptions import RootNotFoundError
from omentangle.protocols import TWO_PI, ProtocolKind


class TestTotalOpticalEfficiency:
    def test_single_path(self):
        assert total_optical_efficiency("int", 0.53, 0.95) == pytest.approx(0.50, abs=0.01)
        assert total_optical_efficiency("om", 0.5, 0.9) == pytest.approx(0.45)

    def test_serial_scheme_passes_three_times(self):
        assert total_optical_efficiency("non", 0.48, 0.95) == pytest.approx(0.11, abs=0.01)

    def test_lossless(self):
        for kind in ProtocolKind:
            assert total_optical_efficiency(kind, 1.0, 1.0) == 1.0


class TestEfficiencyThreshold:
    def test_str(self):
        assert str(EfficiencyThreshold(ProtocolKind.OPTOMECHANICAL, Target.GENERATE, 0.0, 0.0, True)) == "> 0"
        assert str(EfficiencyThreshold(ProtocolKind.INTERFEROMETRIC, Target.VERIFY, None, 0.5312)) == "0.5312"

    def test_total_efficiency(self):
        threshold = EfficiencyThreshold(ProtocolKind.NON_INTERFEROMETRIC, Target.GENERATE, 0.0, 0.5, eta_det=0.8)
        assert threshold.total_efficiency == pytest.approx(0.1)


class TestMinEtaCav:
    def test_lossy_light_keeps_its_entanglement_without_decoherence(self, config):
        threshold = min_eta_cav("om", config, 0.0)
        assert threshold.degenerate
        assert threshold.eta_min == 0.0

    def test_thermalized_mechanics_never_entangle(self, config):
        with pytest.raises(RootNotFoundError):
            min_eta_cav("int", config.with_(gamma=config.omega_m), TWO_PI)

    def test_columns(self):
        assert [target for target, _ in TABLE_COLUMNS] == [Target.GENERATE] * 3 + [Target.VERIFY]
        assert TABLE_COLUMNS[1][1] == math.pi / 2


@pytest.mark.slow
class TestEfficiencyTable:
    @pytest.fixture(scope="class")
    def table(self):
        from omentangle.protocols import ProtocolConfig

        rows = efficiency_table(ProtocolConfig())
        return {(row.kind, row.target, row.theta): row for row in rows}

    @pytest.mark.parametrize(
        ("kind", "expected"),
        [
            (ProtocolKind.INTERFEROMETRIC, (0.53, 0.59, 0.70, 0.63)),
            (ProtocolKind.NON_INTERFEROMETRIC, (0.48, 0.52, 0.61, 0.55)),
        ],
    )
    def test_mechanical_schemes(self, table, kind, expected):
        for (target, theta), eta in zip(TABLE_COLUMNS, expected, strict=True):
            assert table[kind, target, theta].eta_min == pytest.approx(eta, abs=0.01)

    def test_optomechanical_scheme(self, table):
        om = ProtocolKind.OPTOMECHANICAL
        assert table[om, Target.GENERATE, 0.0].degenerate
        assert table[om, Target.GENERATE, math.pi / 2].eta_min == pytest.approx(0.0004, rel=0.15)
        assert table[om, Target.GENERATE, TWO_PI].eta_min == pytest.approx(0.0065, rel=0.15)
        assert table[om, Target.VERIFY, None].eta_min == pytest.approx(0.0066, rel=0.15)

    def test_later_readouts_need_better_cavities(self, table):
        for kind in ProtocolKind:
            etas = [table[kind, Target.GENERATE, theta].eta_min for theta in (0.0, math.pi / 2, TWO_PI)]
            assert etas == sorted(etas)
