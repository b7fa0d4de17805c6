from __future__ import annotations

import math
from typing import TYPE_CHECKING, Any, Self

from attrs import define, evolve, field, fields

from omentangle.exceptions import InvalidArgumentError

if TYPE_CHECKING:
    from collections.abc import Mapping

__all__ = [
    "ProtocolConfig",
    "TWO_PI",
]

TWO_PI = 2.0 * math.pi


def _finite(instance: object, attribute: Any, value: float) -> None:
    if not math.isfinite(value):
        raise InvalidArgumentError(f"{attribute.name} must be finite, got {value}")


def _positive(instance: object, attribute: Any, value: float) -> None:
    _finite(instance, attribute, value)
    if value <= 0:
        raise InvalidArgumentError(f"{attribute.name} must be positive, got {value}")


def _non_negative(instance: object, attribute: Any, value: float) -> None:
    _finite(instance, attribute, value)
    if value < 0:
        raise InvalidArgumentError(f"{attribute.name} must be non-negative, got {value}")


def _efficiency(instance: object, attribute: Any, value: float | None) -> None:
    if value is None:
        return
    if not 0.0 < value <= 1.0:
        raise InvalidArgumentError(f"{attribute.name} must lie in (0, 1], got {value}")


def _angle_pair(value: Any) -> tuple[float, float]:
    first, second = value
    return float(first), float(second)


def _optional_float(value: Any) -> float | None:
    return None if value is None else float(value)


@define(frozen=True, kw_only=True)
class ProtocolConfig:
    """Physical parameters and protocol knobs.

    Defaults are the proposed experimental parameters: a 4 MHz mechanical mode with a 100 Hz linewidth
    in a bath of 500 phonons, cavity escape efficiency 0.9 and detection efficiency 0.95. Angles are in
    radians; rates are angular frequencies.
    """

    omega_m: float = field(default=TWO_PI * 4e6, converter=float, validator=_positive)
    gamma: float = field(default=TWO_PI * 100.0, converter=float, validator=_non_negative)
    n_bar: float = field(default=500.0, converter=float, validator=_non_negative)
    n_bath: float = field(default=500.0, converter=float, validator=_non_negative)
    eta_cav: float = field(default=0.9, converter=float, validator=_efficiency)
    eta_det: float = field(default=0.95, converter=float, validator=_efficiency)

    chi: float = field(default=3.0, converter=float, validator=_non_negative)
    r: float = field(default=0.0, converter=float, validator=_finite)
    precool_pulses: int = field(default=1, converter=int)

    theta: float = field(default=math.pi / 2, converter=float, validator=_non_negative)
    phi: float = field(default=math.pi / 2, converter=float, validator=_non_negative)
    lambda_kick: float = field(default=0.0, converter=float, validator=_finite)
    homodyne_angles: tuple[float, float] = field(default=(0.0, math.pi / 2), converter=_angle_pair)
    readout_angle: float = field(default=math.pi / 2, converter=float, validator=_finite)

    verification_efficiency: float | None = field(default=None, converter=_optional_float, validator=_efficiency)
    lab_frame: bool = field(default=False, converter=bool)

    # Kept for reference only, chi is the operative coupling.
    g0: float = field(default=TWO_PI * 30e6, converter=float, validator=_non_negative)
    kappa: float = field(default=TWO_PI * 20e9, converter=float, validator=_non_negative)
    alpha: float | None = field(default=None, converter=_optional_float)

    @precool_pulses.validator
    def _check_pulses(self, _attribute: object, value: int) -> None:
        if value < 0:
            raise InvalidArgumentError(f"precool_pulses must be non-negative, got {value}")

    @property
    def eta(self) -> float:
        """Total optical efficiency of a single pass, cavity escape times detection."""
        return self.eta_cav * self.eta_det

    @property
    def eta_ver(self) -> float:
        return self.eta if self.verification_efficiency is None else self.verification_efficiency

    def duration(self, angle: float) -> float:
        """Time for the mechanics to rotate by *angle* in phase space."""
        return angle / self.omega_m

    def decay(self, angle: float) -> float:
        """Gain :math:`e^{-\\gamma t}` of the mechanical decoherence channel over a phase-space *angle*."""
        return math.exp(-self.gamma * self.duration(angle))

    def bath_variance(self) -> float:
        return (1.0 + 2.0 * self.n_bath) / 2.0

    def with_(self, **changes: Any) -> Self:
        try:
            return evolve(self, **changes)
        except InvalidArgumentError:
            raise
        except (TypeError, ValueError) as exc:
            raise InvalidArgumentError(str(exc)) from exc

    @classmethod
    def field_names(cls) -> tuple[str, ...]:
        return tuple(attribute.name for attribute in fields(cls))

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any]) -> Self:
        unknown = sorted(set(values) - set(cls.field_names()))
        if unknown:
            raise InvalidArgumentError(f"Unknown configuration keys: {', '.join(unknown)}")
        try:
            return cls(**values)
        except InvalidArgumentError:
            raise
        except (TypeError, ValueError) as exc:
            raise InvalidArgumentError(str(exc)) from exc
