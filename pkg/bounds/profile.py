"""
The concave profile G_E(delta) = delta * F+(E / delta) + h(delta), its maximizer,
and the residual of the identity a F+(E/a) + h(a) = F(E).
"""

import logging
import math
from typing import Callable, Optional

from config import DEFAULT_TOL, GAP_RTOL, GOLDEN_MAX_STEPS, GOLDEN_XTOL
from errors import DomainError
from gibbs.solver import solve_capped
from spectrum.levels import Spectrum
from units import from_nats

from .formulas import _check_energy, binary_entropy, capacity_F_plus

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0      # 1/phi
INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0   # 1/phi^2


def golden_section_max(func: Callable[[float], float], a: float, b: float,
                       xtol: float = GOLDEN_XTOL) -> float:
    """
    Locate the maximum of a unimodal function on [a, b].

    Args:
        func: Function to maximize.
        a: Lower end of the bracket.
        b: Upper end of the bracket.
        xtol: Width at which the bracket is considered converged.

    Returns:
        Midpoint of the final bracket.
    """
    dist = b - a
    if dist <= xtol:
        return 0.5 * (a + b)

    c = a + INV_PHI_SQ * dist
    d = a + INV_PHI * dist
    yc = func(c)
    yd = func(d)

    for _ in range(GOLDEN_MAX_STEPS):
        if dist <= xtol:
            break
        if yc > yd:
            b, d, yd = d, c, yc
            dist = INV_PHI * dist
            c = a + INV_PHI_SQ * dist
            yc = func(c)
        else:
            a, c, yc = c, d, yd
            dist = INV_PHI * dist
            d = a + INV_PHI * dist
            yd = func(d)

    return 0.5 * (a + b)


def profile_upper(s: Spectrum, E: float) -> float:
    """Right end of the profile domain, min(1, E / h_1)."""
    h1 = s.gap
    return 1.0 if h1 <= 0 else min(1.0, E / h1)


def _profile_nats(s: Spectrum, E: float, delta: float, tol: float) -> float:
    return delta * capacity_F_plus(s, E / delta, tol, 'nats', capped=True) + binary_entropy(delta, 'nats')


def g_profile(s: Spectrum, E: float, delta: float, tol: float = DEFAULT_TOL,
              base: Optional[str] = None) -> float:
    """G_E(delta) on 0 < delta <= min(1, E / h_1)."""
    _check_energy(E)
    upper = profile_upper(s, E)
    if not (0.0 < delta <= upper * (1.0 + GAP_RTOL)):
        raise DomainError(f"delta must lie in (0, {upper}], got {delta}")
    return from_nats(_profile_nats(s, E, min(delta, 1.0), tol), base)


def argmax_G(s: Spectrum, E: float, tol: float = DEFAULT_TOL) -> float:
    """
    Maximizer of G_E by golden-section search over [tol, min(1, E/h_1) - tol].

    G_E is concave, so the search is exact up to GOLDEN_XTOL.
    """
    _check_energy(E)
    upper = profile_upper(s, E)
    lo, hi = tol, upper - tol
    if hi <= lo:
        return 0.5 * upper
    location = golden_section_max(lambda delta: _profile_nats(s, E, delta, tol), lo, hi)
    logger.debug(f"argmax_G: E={E} maximizer={location}")
    return location


def identity_residual(s: Spectrum, E: float, tol: float = DEFAULT_TOL,
                      base: Optional[str] = None) -> float:
    """|a F+(E/a) + h(a) - F(E)| with a = a_H(E)."""
    _check_energy(E)
    gibbs = solve_capped(s, E, tol)
    a = gibbs.threshold
    lhs = _profile_nats(s, E, a, tol)
    return from_nats(abs(lhs - gibbs.entropy_nats), base)
