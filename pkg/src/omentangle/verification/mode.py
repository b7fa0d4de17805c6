from __future__ import annotations

from enum import Enum

from omentangle.exceptions import InvalidArgumentError
from omentangle.protocols import TWO_PI

__all__ = [
    "VerificationMode",
]


class VerificationMode(Enum):
    PLAIN = "plain"  # cross correlations read within the first period
    CONSERVATIVE_TIME = "conservative_time"  # cross correlations read one full period later
    CONSERVATIVE_TIME_NOISE = "conservative_time_noise"  # as above, input noise left in the variances

    @property
    def time_offset(self) -> float:
        """Extra phase-space angle added to every cross-correlation readout."""
        return 0.0 if self is VerificationMode.PLAIN else TWO_PI

    @property
    def subtracts_noise(self) -> bool:
        return self is not VerificationMode.CONSERVATIVE_TIME_NOISE

    @classmethod
    def parse(cls, value: str | VerificationMode) -> VerificationMode:
        if isinstance(value, VerificationMode):
            return value
        text = value.strip().lower().replace("-", "_")
        try:
            return cls(text)
        except ValueError:
            raise InvalidArgumentError(
                f"Unknown verification mode {value!r}, expected one of {[mode.value for mode in cls]}",
            ) from None
