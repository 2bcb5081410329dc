"""
Bound formulas: binary entropy, threshold a_H(E), F_H, F+_H and the piecewise
bound kappa_E(eps).

kappa_E(eps) = eps * F+(E / eps) + h(eps)   for 0 < eps <= a_H(E)
             = F_H(E)                        for eps > a_H(E)

The same value bounds the quantum semicontinuity gap, the classical Shannon
gap, and the Fano conditional entropy.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from scipy.special import entr

from config import DEFAULT_TOL, GAP_RTOL
from errors import ArgumentBelowGap, DomainError, InternalGapViolation
from gibbs.solver import solve_beta, solve_capped
from spectrum.levels import Spectrum, shift_plus
from units import from_nats, resolve_base

logger = logging.getLogger(__name__)


class Branch(str, Enum):
    SUB_THRESHOLD = 'SubThreshold'
    SATURATED = 'Saturated'


@dataclass(frozen=True)
class BoundResult:
    """
    Attributes:
        value: kappa_E(eps) in `base`.
        branch: SubThreshold when eps <= threshold_a (ties included).
        threshold_a: a_H(E) for the effective energy.
        epsilon: Distance argument.
        E: Energy bound.
        f_plus_argument: E / eps on the SubThreshold branch.
        capacity: F_H(E) in `base`, the saturated value.
        base: Log base of value and capacity.
    """
    value: float
    branch: Branch
    threshold_a: float
    epsilon: float
    E: float
    f_plus_argument: Optional[float] = None
    capacity: float = math.nan
    base: str = 'nats'

    def to_dict(self) -> dict:
        return {
            'E': self.E,
            'epsilon': self.epsilon,
            'kappa': self.value,
            'branch': self.branch.value,
            'a': self.threshold_a,
            'F': self.capacity,
            'F_plus_arg': self.f_plus_argument,
            'log_base': self.base,
        }


def _check_unit_interval(x: float, label: str) -> None:
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"{label} must lie in [0, 1], got {x}")


def _check_energy(E: float) -> None:
    if not (math.isfinite(E) and E > 0):
        raise DomainError(f"Energy bound must be positive and finite, got {E}")


def binary_entropy(eps: float, base: Optional[str] = None) -> float:
    """h(eps) = -eps log eps - (1 - eps) log(1 - eps), with h(0) = h(1) = 0."""
    _check_unit_interval(eps, 'eps')
    return from_nats(float(entr(eps) + entr(1.0 - eps)), base)


def threshold_a(s: Spectrum, E: float, tol: float = DEFAULT_TOL, capped: bool = False) -> float:
    """
    a_H(E) = 1 - 1/Z_H(E).

    Uncapped by default: on a finite spectrum above the uniform mean this uses
    the negative-beta Gibbs state, while kappa reports the capped value.
    """
    solver = solve_capped if capped else solve_beta
    return solver(s, E, tol).threshold


def capacity_F(s: Spectrum, E: float, tol: float = DEFAULT_TOL,
               base: Optional[str] = None, capped: bool = False) -> float:
    """
    F_H(E), the Gibbs entropy at energy E.

    Uncapped by default; pass capped=True for the <f> <= E maximum that kappa uses.
    """
    solver = solve_capped if capped else solve_beta
    return solver(s, E, tol, base).entropy


def capacity_F_plus(s: Spectrum, E: float, tol: float = DEFAULT_TOL,
                    base: Optional[str] = None, capped: bool = False) -> float:
    """
    F+_H(E) = F_{H+}(E), solved on the shifted spectrum without re-grounding.

    At E = h_1 (within GAP_RTOL) the value is the log of the bottom multiplicity
    of H+, which is 0 for a simple h_1.

    Args:
        s: Grounded spectrum with at least 2 levels.
        E: Energy argument, at least h_1.
        tol: Solver tolerance.
        base: Log base of the result.
        capped: Use the <f> <= E maximum on finite spectra above the uniform mean.

    Returns:
        F+_H(E) in `base`.
    """
    _check_energy(E)
    shifted = shift_plus(s)
    h1 = shifted.minimum
    if E < h1 * (1.0 - GAP_RTOL):
        raise ArgumentBelowGap(f"F+ needs E >= h_1 = {h1}, got E={E}")
    if E <= h1 * (1.0 + GAP_RTOL):
        return from_nats(math.log(shifted.ground_multiplicity), base)
    solver = solve_capped if capped else solve_beta
    return solver(shifted, E, tol, base).entropy


def kappa(s: Spectrum, E: float, eps: float, tol: float = DEFAULT_TOL,
          base: Optional[str] = None) -> BoundResult:
    """
    Evaluate the optimal bound kappa_E(eps).

    Args:
        s: Grounded spectrum.
        E: Energy bound, > 0.
        eps: Trace distance, total variation distance, or error probability in [0, 1].
        tol: Solver tolerance.
        base: Log base of the result.

    Returns:
        BoundResult with the value and its branch.
    """
    base = resolve_base(base)
    _check_energy(E)
    _check_unit_interval(eps, 'eps')

    gibbs = solve_capped(s, E, tol)
    a = gibbs.threshold
    capacity = gibbs.entropy_nats

    if eps == 0:
        value, branch, argument = 0.0, Branch.SUB_THRESHOLD, None
    elif eps <= a:
        argument = E / eps
        h1 = s.gap
        if argument < h1 * (1.0 - GAP_RTOL):
            raise InternalGapViolation(
                f"E/eps={argument} fell below h_1={h1} with eps={eps} <= a={a}"
            )
        f_plus = capacity_F_plus(s, argument, tol, 'nats', capped=True)
        value = eps * f_plus + binary_entropy(eps, 'nats')
        branch = Branch.SUB_THRESHOLD
    else:
        value, branch, argument = capacity, Branch.SATURATED, None

    return BoundResult(
        value=from_nats(value, base),
        branch=branch,
        threshold_a=a,
        epsilon=eps,
        E=E,
        f_plus_argument=argument,
        capacity=from_nats(capacity, base),
        base=base,
    )


# H(X|Y) <= kappa_E(P(X != Y)) and |S(rho) - S(sigma)| <= kappa_E(eps) use the same value.
fano_bound = kappa
continuity_bound = kappa
