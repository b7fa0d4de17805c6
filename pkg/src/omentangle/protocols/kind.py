from __future__ import annotations

from enum import Enum

from omentangle.exceptions import InvalidArgumentError

__all__ = [
    "ProtocolKind",
]


class ProtocolKind(Enum):
    OPTOMECHANICAL = "om"  # light ⊗ mechanics
    INTERFEROMETRIC = "int"  # two mechanics, parallel pulses recombined on a beamsplitter
    NON_INTERFEROMETRIC = "non"  # two mechanics, one pulse in series

    @property
    def is_mechanical(self) -> bool:
        """Both entangled modes are mechanical and decohere after generation."""
        return self is not ProtocolKind.OPTOMECHANICAL

    @property
    def label(self) -> str:
        return self.name.lower().replace("_", "-")

    @classmethod
    def parse(cls, value: str | ProtocolKind) -> ProtocolKind:
        if isinstance(value, ProtocolKind):
            return value
        text = value.strip().lower().replace("_", "-")
        for kind in cls:
            if text in (kind.value, kind.label):
                return kind
        raise InvalidArgumentError(f"Unknown protocol {value!r}, expected one of {[k.value for k in cls]}")
