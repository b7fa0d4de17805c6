from .closed_form import (
    JFactors,
    cool_closed_form,
    interferometric_closed_form,
    j_factors,
    noninterferometric_closed_form,
    om_closed_form,
)
from .config import TWO_PI, ProtocolConfig
from .interferometric import interferometric_entangle, prepare_interferometric
from .kind import ProtocolKind
from .noninterferometric import noninterferometric_entangle, prepare_noninterferometric
from .optomechanical import om_entangle, om_entangle_squeezed_first, prepare_optomechanical
from .precool import PrecooledState, cooling_pulse, precool
from .prepared import PreparedState, Readout
from .registry import closed_form, entangle, generated_state, prepare
from .squeezing import symmetric_squeezing, symmetrizing_squeezing

__all__ = [
    "JFactors",
    "PrecooledState",
    "PreparedState",
    "ProtocolConfig",
    "ProtocolKind",
    "Readout",
    "TWO_PI",
    "closed_form",
    "cool_closed_form",
    "cooling_pulse",
    "entangle",
    "generated_state",
    "interferometric_closed_form",
    "interferometric_entangle",
    "j_factors",
    "noninterferometric_closed_form",
    "noninterferometric_entangle",
    "om_closed_form",
    "om_entangle",
    "om_entangle_squeezed_first",
    "precool",
    "prepare",
    "prepare_interferometric",
    "prepare_noninterferometric",
    "prepare_optomechanical",
    "symmetric_squeezing",
    "symmetrizing_squeezing",
]
