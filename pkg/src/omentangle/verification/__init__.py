from .inverse import InverseMapResult, decoherence_map, inverse_map
from .mode import VerificationMode
from .montecarlo import monte_carlo_sigma_ver, sample_probe
from .recipe import PULSE_NOISE, ElementRecipe, Probe, build_recipes, probe_variance, readout_channel
from .sigma_ver import VerifiedCovariance, build_sigma_ver

__all__ = [
    "PULSE_NOISE",
    "ElementRecipe",
    "InverseMapResult",
    "Probe",
    "VerificationMode",
    "VerifiedCovariance",
    "build_recipes",
    "build_sigma_ver",
    "decoherence_map",
    "inverse_map",
    "monte_carlo_sigma_ver",
    "probe_variance",
    "readout_channel",
    "sample_probe",
]
