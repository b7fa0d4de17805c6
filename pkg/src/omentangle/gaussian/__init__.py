from .channel import GaussianChannel, apply_channel
from .entanglement import (
    EntanglementReport,
    log_negativity,
    purity,
    purity_optimal_squeezing,
    symplectic_eigenvalues,
    von_neumann_entropy,
)
from .measurement import GeneraldyneMeasurement, HomodyneMeasurement, generaldyne_update, homodyne_update
from .modes import ModeRef, ModeRegistry
from .state import VACUUM_VARIANCE, GaussianState, is_physical, partial_trace, tensor, thermal_variance
from .symplectic import (
    SymplecticOp,
    apply_symplectic,
    make_beamsplitter,
    make_pulsed_om,
    make_rotation,
    make_squeezer,
)

__all__ = [
    "EntanglementReport",
    "GaussianChannel",
    "GaussianState",
    "GeneraldyneMeasurement",
    "HomodyneMeasurement",
    "ModeRef",
    "ModeRegistry",
    "SymplecticOp",
    "VACUUM_VARIANCE",
    "apply_channel",
    "apply_symplectic",
    "generaldyne_update",
    "homodyne_update",
    "is_physical",
    "log_negativity",
    "make_beamsplitter",
    "make_pulsed_om",
    "make_rotation",
    "make_squeezer",
    "partial_trace",
    "purity",
    "purity_optimal_squeezing",
    "symplectic_eigenvalues",
    "tensor",
    "thermal_variance",
    "von_neumann_entropy",
]
