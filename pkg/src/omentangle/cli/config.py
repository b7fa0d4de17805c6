"""
Run configuration of the command-line interface.

A run is described by a flat JSON object whose keys are either run settings (protocol, scan axes,
verification mode, sampling) or :class:`~omentangle.protocols.ProtocolConfig` fields, the latter in
the same units as the class itself. Flags given on the command line override file values.

Interface Functions:
    - load_run_config: read a JSON file into a :class:`RunConfig`
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import TYPE_CHECKING, Any, Self

from attrs import define, evolve, field, fields

from omentangle.exceptions import InvalidArgumentError
from omentangle.protocols import ProtocolConfig, ProtocolKind
from omentangle.verification import VerificationMode

if TYPE_CHECKING:
    from collections.abc import Mapping

__all__ = [
    "RunConfig",
    "load_run_config",
]

logger = logging.getLogger(__name__)


def _physics(values: Mapping[str, Any]) -> dict[str, Any]:
    unknown = sorted(set(values) - set(ProtocolConfig.field_names()))
    if unknown:
        raise InvalidArgumentError(f"Unknown configuration keys: {', '.join(unknown)}")
    return dict(values)


@define(frozen=True, kw_only=True)
class RunConfig:
    protocol: ProtocolKind = field(default=ProtocolKind.OPTOMECHANICAL, converter=ProtocolKind.parse)
    mode: VerificationMode = field(default=VerificationMode.CONSERVATIVE_TIME, converter=VerificationMode.parse)
    chi_axis: str | None = None
    r_axis: str | None = None
    phi_axis: str | None = None
    psi_axis: str | None = None
    samples: int = field(default=10_000, converter=int)
    seed: int = field(default=0, converter=int)
    physics: dict[str, Any] = field(factory=dict, converter=_physics)

    @classmethod
    def run_keys(cls) -> tuple[str, ...]:
        return tuple(attribute.name for attribute in fields(cls) if attribute.name != "physics")

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any]) -> Self:
        run_keys = set(cls.run_keys())
        run = {key: value for key, value in values.items() if key in run_keys}
        physics = {key: value for key, value in values.items() if key not in run_keys}
        try:
            return cls(physics=physics, **run)
        except InvalidArgumentError:
            raise
        except (TypeError, ValueError) as exc:
            raise InvalidArgumentError(str(exc)) from exc

    def merged(self, overrides: Mapping[str, Any]) -> Self:
        """Apply command-line *overrides*; ``None`` values leave the current setting untouched."""
        given = {key: value for key, value in overrides.items() if value is not None}
        run_keys = set(self.run_keys())
        run = {key: value for key, value in given.items() if key in run_keys}
        physics = self.physics | {key: value for key, value in given.items() if key not in run_keys}
        try:
            return evolve(self, physics=physics, **run)
        except InvalidArgumentError:
            raise
        except (TypeError, ValueError) as exc:
            raise InvalidArgumentError(str(exc)) from exc

    def protocol_config(self) -> ProtocolConfig:
        return ProtocolConfig.from_mapping(self.physics)


def load_run_config(path: str | Path | None) -> RunConfig:
    """Read a flat JSON object; no *path* gives the compiled-in defaults."""
    if path is None:
        return RunConfig()
    with Path(path).open(encoding="utf-8") as stream:
        try:
            values = json.load(stream)
        except json.JSONDecodeError as exc:
            raise InvalidArgumentError(f"Malformed configuration file {path}: {exc}") from exc
    if not isinstance(values, dict):
        raise InvalidArgumentError(f"Configuration file {path} must hold a JSON object")
    logger.debug("Loaded %d configuration keys from %s", len(values), path)
    return RunConfig.from_mapping(values)
