"""
Cooling requirement for entanglement to survive arbitrarily strong pulses.

With the squeezer placed right after the interaction, ahead of all optical
loss, and squeezing grown with the pulse as :math:`e^{2r} = 1 + c\\chi^2`, the
light-mechanics state stays entangled as :math:`\\chi \\to \\infty` exactly when the
precooled momentum variance lies below a bound :math:`f` that depends only on
the optical efficiency, the bath occupation and the decoherence over the
post-generation rotation. The position variance plays no part.

Interface Functions:

* :func:`large_chi_bound` --- Evaluate the bound and the optimal squeezing growth rate
* :func:`bound_squeezing` --- Squeezing prescribed by the growth rate at a given interaction strength
* :func:`bound_lambda` --- PPT witness of the squeezed-first state with an imposed momentum variance
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

from attrs import define, field, validators

from omentangle.exceptions import InvalidArgumentError
from omentangle.gaussian import GaussianState, log_negativity
from omentangle.protocols import PrecooledState, om_entangle_squeezed_first, precool

if TYPE_CHECKING:
    from attrs import Attribute

    from omentangle.protocols import ProtocolConfig

__all__ = [
    "LargeChiBound",
    "large_chi_bound",
    "bound_squeezing",
    "bound_lambda",
]


def _finite(_instance: object, attribute: Attribute[float], value: float) -> None:
    if not math.isfinite(value):
        raise InvalidArgumentError(f"{attribute.name} must be finite, got {value}")


@define(frozen=True)
class LargeChiBound:
    """Upper bound *f_value* on the precooled momentum variance and the growth rate *c_opt* attaining it.

    *f_value* is infinite without mechanical decoherence.
    """

    f_value: float
    c_opt: float = field(validator=validators.ge(0.0))
    f1: float = field(validator=_finite)
    f2: float = field(validator=_finite)
    f3: float = field(validator=_finite)

    @property
    def feasible(self) -> bool:
        """False when decoherence dominates and no amount of cooling avoids separability."""
        return self.f_value > 0.0


def large_chi_bound(config: ProtocolConfig) -> LargeChiBound:
    """Evaluate the bound for the mechanics rotating by ``config.theta`` after a pulse with efficiency ``eta_cav * eta_det``."""
    g = config.decay(config.theta)
    eta = config.eta
    n_bath = config.n_bath
    thermal = 1.0 + 2.0 * n_bath

    f1 = n_bath * (1.0 + n_bath) * (g**4 - (3.0 - eta) * g**3 + 3.0 * (1.0 - eta) * g**2 + (3.0 * eta - 1.0) * g - eta)
    f2 = -(g**3) + (1.0 - eta) * g**2 + eta * g
    f3 = g**3 - (2.0 - eta) * g**2 + (1.0 - 2.0 * eta) * g + eta
    f_value = math.inf if g == 1.0 else 2.0 * (f1 + f2) / (g * thermal * f3)
    return LargeChiBound(
        f_value=f_value,
        c_opt=thermal * (1.0 - g) / (1.0 + g),
        f1=f1,
        f2=f2,
        f3=f3,
    )


def bound_squeezing(c: float, chi: float) -> float:
    """Squeezing with :math:`e^{2r} = 1 + c\\chi^2`, so that :math:`r = \\ln(1 + c\\chi^2)/2`.

    >>> bound_squeezing(0.0, 10.0)
    0.0
    """
    return 0.5 * math.log1p(c * chi**2)


def bound_lambda(config: ProtocolConfig, v_p: float, chi: float, c: float | None = None) -> float:
    """PPT witness of the squeezed-first state at *chi*, with the precooled momentum variance replaced by *v_p*.

    Negative values mean entanglement. *c* defaults to the optimal growth rate.
    """
    if c is None:
        c = large_chi_bound(config).c_opt
    config = config.with_(chi=chi, r=bound_squeezing(c, chi))
    v_x = precool(config).v_x
    cool = PrecooledState(v_x=v_x, v_p=v_p, state=GaussianState.squeezed_thermal(v_x, v_p, "M"))
    state = om_entangle_squeezed_first(config, cool)
    return log_negativity(state.cov, check_physical=False).ppt_lambda
