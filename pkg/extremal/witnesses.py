"""
Tightness witnesses.

    W_E:     Gibbs distribution w_E(x) = exp(lambda_0 + lambda f(x))
    W~_x:    Gibbs distribution of the shifted constraint f~(n) = f(n + 1) at energy x
    (X, Y):  p_X = (1 - eps, eps w~_{E/eps}(0), eps w~_{E/eps}(1), ...), p_Y = delta_0
             for eps <= a; p_X = w_E, p_Y = delta_0 above the threshold.
"""

import logging
import math
from typing import NamedTuple

import numpy as np

from config import DEFAULT_TOL, GAP_RTOL, WITNESS_TAIL_TOL
from errors import DomainError
from gibbs.solver import solve_beta, solve_capped
from spectrum.levels import Spectrum, shift_plus
from spectrum.truncation import plan_truncation

from .distributions import Distribution, JointDistribution

logger = logging.getLogger(__name__)


class ExtremalPair(NamedTuple):
    rho_diag: Distribution
    sigma_diag: Distribution


def _check_arguments(E: float, eps: float) -> None:
    if not (math.isfinite(E) and E > 0):
        raise DomainError(f"E must be positive and finite, got {E}")
    if not (0.0 <= eps <= 1.0):
        raise DomainError(f"eps must lie in [0, 1], got {eps}")


def gibbs_distribution(s: Spectrum, beta: float, tol: float = DEFAULT_TOL,
                       support_offset: int = 0) -> Distribution:
    """
    Gibbs weights exp(-beta h) over a certified truncation of s.

    Args:
        s: Spectrum (shifted spectra allowed).
        beta: Inverse temperature.
        tol: Truncation tolerance, capped at WITNESS_TAIL_TOL.
        support_offset: Label of the first level in the returned Distribution.

    Returns:
        Distribution with the cut-off mass recorded in certified_tail.
    """
    tail, tail_energy = 0.0, 0.0
    if s.is_finite:
        levels = s.levels(s.size)
    else:
        plan = plan_truncation(s, beta, min(tol, WITNESS_TAIL_TOL))
        levels = s.levels(plan.cutoff_index)
        tail = plan.partition_tail
        tail_energy = plan.energy_tail + s.minimum * plan.partition_tail

    log_w = -beta * (levels - levels[0])
    weights = np.exp(log_w - log_w.max())
    return Distribution.from_weights(weights, support_offset, certified_tail=tail,
                                     tail_energy=tail_energy)


def max_entropy_distribution(s: Spectrum, E: float, tol: float = DEFAULT_TOL,
                             capped: bool = False) -> Distribution:
    """W_E, the entropy-maximizing distribution with expected level E."""
    solver = solve_capped if capped else solve_beta
    solution = solver(s, E, tol)
    return gibbs_distribution(s, solution.beta, tol)


def shifted_max_entropy_distribution(s: Spectrum, x: float, tol: float = DEFAULT_TOL) -> Distribution:
    """
    W~_x labelled on the original symbols 1, 2, ...

    At x = h_1 (within GAP_RTOL) the maximizer is uniform over the bottom
    levels of H+.
    """
    shifted = shift_plus(s)
    h1 = shifted.minimum
    if x <= h1 * (1.0 + GAP_RTOL):
        return Distribution.from_weights(np.ones(shifted.ground_multiplicity), support_offset=1)
    solution = solve_capped(shifted, x, tol)
    return gibbs_distribution(shifted, solution.beta, tol, support_offset=1)


def extremal_pair(s: Spectrum, E: float, eps: float, tol: float = DEFAULT_TOL) -> ExtremalPair:
    """
    Distributions attaining kappa_E(eps).

    Args:
        s: Grounded spectrum.
        E: Energy bound.
        eps: Distance in [0, 1].
        tol: Solver and truncation tolerance.

    Returns:
        ExtremalPair(rho_diag, sigma_diag) with sigma_diag the point mass at 0.
    """
    _check_arguments(E, eps)
    ground = Distribution.point_mass(0)
    if eps == 0:
        return ExtremalPair(ground, ground)

    a = solve_capped(s, E, tol).threshold
    if eps <= a:
        shifted = shifted_max_entropy_distribution(s, E / eps, tol)
        weights = np.concatenate([[1.0 - eps], eps * shifted.probs])
        rho = Distribution.from_weights(
            weights,
            certified_tail=eps * shifted.certified_tail,
            tail_energy=eps * shifted.tail_energy,
        )
    else:
        rho = max_entropy_distribution(s, E, tol, capped=True)

    logger.debug(f"extremal_pair: E={E} eps={eps} a={a} support={len(rho.probs)}")
    return ExtremalPair(rho, ground)


def extremal_joint(s: Spectrum, E: float, eps: float, tol: float = DEFAULT_TOL) -> JointDistribution:
    """
    Joint table attaining the Fano bound: p(n, 0) = p_X(n), Y identically 0.

    P(X != Y) = min(eps, a) and the X marginal equals extremal_pair's rho_diag.
    """
    rho, _ = extremal_pair(s, E, eps, tol)
    column = rho.dense()
    return JointDistribution(column[:, np.newaxis], certified_tail=rho.certified_tail)
