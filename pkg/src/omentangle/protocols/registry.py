from __future__ import annotations

from typing import TYPE_CHECKING, Protocol

from .closed_form import interferometric_closed_form, noninterferometric_closed_form, om_closed_form
from .interferometric import interferometric_entangle, prepare_interferometric
from .kind import ProtocolKind
from .noninterferometric import noninterferometric_entangle, prepare_noninterferometric
from .optomechanical import om_entangle, prepare_optomechanical

if TYPE_CHECKING:
    from omentangle.gaussian import GaussianState
    from omentangle.math import Matrix

    from .config import ProtocolConfig
    from .prepared import PreparedState

__all__ = [
    "prepare",
    "entangle",
    "generated_state",
    "closed_form",
]


class _Preparer(Protocol):
    def __call__(self, config: ProtocolConfig, /) -> PreparedState: ...


class _Entangler(Protocol):
    def __call__(self, config: ProtocolConfig, /) -> GaussianState: ...


class _ClosedForm(Protocol):
    def __call__(self, config: ProtocolConfig, /) -> Matrix: ...


_PREPARERS: dict[ProtocolKind, _Preparer] = {
    ProtocolKind.OPTOMECHANICAL: prepare_optomechanical,
    ProtocolKind.INTERFEROMETRIC: prepare_interferometric,
    ProtocolKind.NON_INTERFEROMETRIC: prepare_noninterferometric,
}

_ENTANGLERS: dict[ProtocolKind, _Entangler] = {
    ProtocolKind.OPTOMECHANICAL: om_entangle,
    ProtocolKind.INTERFEROMETRIC: interferometric_entangle,
    ProtocolKind.NON_INTERFEROMETRIC: noninterferometric_entangle,
}

_CLOSED_FORMS: dict[ProtocolKind, _ClosedForm] = {
    ProtocolKind.OPTOMECHANICAL: om_closed_form,
    ProtocolKind.INTERFEROMETRIC: interferometric_closed_form,
    ProtocolKind.NON_INTERFEROMETRIC: noninterferometric_closed_form,
}


def prepare(kind: ProtocolKind | str, config: ProtocolConfig) -> PreparedState:
    return _PREPARERS[ProtocolKind.parse(kind)](config)


def entangle(kind: ProtocolKind | str, config: ProtocolConfig) -> GaussianState:
    """Run a protocol end to end and return the entangled pair."""
    return _ENTANGLERS[ProtocolKind.parse(kind)](config)


def generated_state(kind: ProtocolKind | str, config: ProtocolConfig) -> GaussianState:
    """The pair right after generation, before any post-generation evolution."""
    return entangle(kind, config.with_(theta=0.0, phi=0.0))


def closed_form(kind: ProtocolKind | str, config: ProtocolConfig) -> Matrix:
    return _CLOSED_FORMS[ProtocolKind.parse(kind)](config)
