"""
Certified truncation of Gibbs sums over infinite spectra.

Omitted tails are bounded with the geometric series of the spectrum's affine
lower bound, measured from the bottom level so that the bound is relative to a
partition sum of at least one.
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

from config import BETA_FLOOR, DEFAULT_TOL, MAX_CUTOFF, MIN_CUTOFF
from errors import BetaTooSmall, DomainError, TruncationLimitExceeded
from spectrum.levels import Spectrum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncationPlan:
    """
    Attributes:
        cutoff_index: Number of represented levels (indices 0 .. cutoff_index - 1).
        tail_bound: Upper bound on both omitted tails below.
        beta_floor: Smallest beta the plan is valid for (tails shrink as beta grows).
        partition_tail: Bound on sum_{k >= cutoff} exp(-beta (h_k - h_min)).
        energy_tail: Bound on sum_{k >= cutoff} (h_k - h_min) exp(-beta (h_k - h_min)).
    """
    cutoff_index: int
    tail_bound: float
    beta_floor: float
    partition_tail: float = 0.0
    energy_tail: float = 0.0


def geometric_tails(s: Spectrum, beta: float, cutoff: int) -> Tuple[float, float]:
    """
    Closed-form bounds on the omitted tails beyond `cutoff`.

    With l(k) = c k + d_rel the affine lower bound relative to the bottom level,
    A = exp(-beta l(cutoff)) and q = exp(-beta c):

        partition tail <= A / (1 - q)
        energy tail    <= A (l(cutoff) / (1 - q) + c q / (1 - q)^2)

    The energy bound needs l(cutoff) >= 1 / beta, where x exp(-beta x) is
    decreasing; below that it is reported as infinite.
    """
    c, d = s.affine_bound(cutoff)
    ell = c * cutoff + d - s.minimum
    if ell <= 0:
        return math.inf, math.inf
    one_minus_q = -math.expm1(-beta * c)
    amplitude = math.exp(-beta * ell)
    partition_tail = amplitude / one_minus_q
    if ell < 1.0 / beta:
        return partition_tail, math.inf
    q = 1.0 - one_minus_q
    energy_tail = amplitude * (ell / one_minus_q + c * q / one_minus_q ** 2)
    return partition_tail, energy_tail


def plan_truncation(s: Spectrum, beta: float, tol: float = DEFAULT_TOL) -> TruncationPlan:
    """
    Choose the smallest cutoff whose certified tails are both below tol.

    Args:
        s: Validated spectrum.
        beta: Inverse temperature; must be >= BETA_FLOOR for infinite spectra.
        tol: Required bound on the omitted tails.

    Returns:
        TruncationPlan. Finite spectra return their full length with a zero tail.
    """
    if not tol > 0:
        raise DomainError(f"Truncation tolerance must be positive, got {tol}")
    if s.is_finite:
        return TruncationPlan(cutoff_index=s.size, tail_bound=0.0, beta_floor=beta)
    if not beta >= BETA_FLOOR:
        raise BetaTooSmall(f"beta={beta} is below the floor {BETA_FLOOR}; tail cannot be certified")

    def certified(n: int) -> bool:
        partition_tail, energy_tail = geometric_tails(s, beta, n)
        return partition_tail < tol and energy_tail < tol

    smallest = max(len(s.head), 1)
    below = smallest - 1
    upper = max(smallest, MIN_CUTOFF)
    while not certified(upper):
        below = upper
        upper *= 2
        if upper > MAX_CUTOFF:
            raise TruncationLimitExceeded(
                f"Certified cutoff for beta={beta}, tol={tol} exceeds {MAX_CUTOFF} levels"
            )

    while upper - below > 1:
        mid = (upper + below) // 2
        if certified(mid):
            upper = mid
        else:
            below = mid

    partition_tail, energy_tail = geometric_tails(s, beta, upper)
    logger.debug(f"Truncation plan: beta={beta}, tol={tol}, cutoff={upper}")
    return TruncationPlan(
        cutoff_index=upper,
        tail_bound=max(partition_tail, energy_tail),
        beta_floor=beta,
        partition_tail=partition_tail,
        energy_tail=energy_tail,
    )
