"""
Closed forms for the harmonic-oscillator spectrum h_i = i, used as regression
oracles against the generic pipeline.
"""

import math
from typing import NamedTuple, Optional

from scipy.special import entr, xlogy

from errors import DomainError
from units import from_nats, resolve_base


class OscillatorReference(NamedTuple):
    g: float
    F_plus: float
    Z: float
    a: float
    kappa: Optional[float]


def oscillator_g(E: float) -> float:
    """g(E) = (E + 1) ln(E + 1) - E ln E."""
    return float(xlogy(E + 1.0, E + 1.0) - xlogy(E, E))


def _h(x: float) -> float:
    return float(entr(x) + entr(1.0 - x))


def oscillator_reference(E: float, eps: Optional[float] = None,
                         base: Optional[str] = None) -> OscillatorReference:
    """
    Closed-form oscillator quantities at energy E.

    Args:
        E: Energy, > 0.
        eps: Optional distance in [0, 1]; kappa is None when omitted.
        base: Log base of the entropic fields.

    Returns:
        OscillatorReference(g, F_plus, Z, a, kappa). F_plus = E h(1/E) is nan for E < 1.
    """
    base = resolve_base(base)
    if not (math.isfinite(E) and E > 0):
        raise DomainError(f"E must be positive and finite, got {E}")
    if eps is not None and not (0.0 <= eps <= 1.0):
        raise DomainError(f"eps must lie in [0, 1], got {eps}")

    g = oscillator_g(E)
    f_plus = E * _h(1.0 / E) if E >= 1.0 else math.nan
    a = E / (1.0 + E)

    kappa = None
    if eps is not None:
        if eps == 0:
            kappa = 0.0
        elif eps <= a:
            kappa = from_nats(E * _h(eps / E) + _h(eps), base)
        else:
            kappa = from_nats(g, base)

    return OscillatorReference(
        g=from_nats(g, base),
        F_plus=from_nats(f_plus, base),
        Z=1.0 + E,
        a=a,
        kappa=kappa,
    )
