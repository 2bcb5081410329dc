"""
Gibbs multiplier solver.

Solves mean_energy(beta) = E by multiplicative bracket expansion followed by
bisection. Finite spectra allow beta <= 0; infinite spectra refuse to go
below BETA_FLOOR.
"""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Callable, Optional, Tuple

from config import (
    BETA_FLOOR,
    BISECTION_REL_WIDTH,
    BRACKET_GROWTH,
    DEFAULT_TOL,
    MAX_BISECTION_STEPS,
    MAX_BRACKET_EXPANSIONS,
    SUM_TOL_FACTOR,
)
from errors import BetaTooSmall, DomainError, NonConvergence, TargetEnergyUnattainable
from gibbs.partition import PartitionMoments, partition_moments
from spectrum.levels import Spectrum
from units import from_nats, resolve_base

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GibbsSolution:
    """
    Solved Gibbs state at target energy E.

    The classical exponential family reads w_E(x) = exp(lambda_0 + lambda_ f(x))
    with lambda_ = -beta and lambda_0 = -log_Z. A capped solution is the uniform
    state of a finite spectrum whose target lies at or above the uniform mean.
    """
    energy: float
    beta: float
    log_Z: float
    mean_energy: float
    residual: float
    entropy_nats: float
    base: str = 'nats'
    capped: bool = False

    @property
    def entropy(self) -> float:
        return from_nats(self.entropy_nats, self.base)

    @property
    def partition(self) -> float:
        return math.exp(self.log_Z)

    @property
    def lambda_(self) -> float:
        return -self.beta

    @property
    def lambda_0(self) -> float:
        return -self.log_Z

    @property
    def threshold(self) -> float:
        """a = 1 - 1/Z."""
        return -math.expm1(-self.log_Z)

    @property
    def beta_nonpositive(self) -> bool:
        return self.beta <= 0

    def to_dict(self) -> dict:
        data = asdict(self)
        data.update(entropy=self.entropy, Z=self.partition, threshold=self.threshold,
                    beta_nonpositive=self.beta_nonpositive)
        return data


def _check_energy(s: Spectrum, E: float) -> None:
    if not math.isfinite(E):
        raise DomainError(f"Target energy must be finite, got {E}")
    if E <= s.minimum:
        raise TargetEnergyUnattainable(f"E={E} is not above the bottom level {s.minimum}")
    if s.is_finite and E >= s.maximum:
        raise TargetEnergyUnattainable(f"E={E} is not below the top level {s.maximum}")


def _bracket(s: Spectrum, E: float, residual: Callable[[float], float]) -> Tuple[float, float]:
    """Return (lo, hi) with residual(lo) >= 0 >= residual(hi)."""
    expansions = 0

    def expanded():
        nonlocal expansions
        expansions += 1
        if expansions > MAX_BRACKET_EXPANSIONS:
            raise NonConvergence(f"Bracket for E={E} not found after {MAX_BRACKET_EXPANSIONS} expansions")

    if s.is_finite:
        if residual(0.0) > 0:
            lo, hi = 0.0, 1.0 / (E - s.minimum)
            while residual(hi) > 0:
                expanded()
                lo, hi = hi, hi * BRACKET_GROWTH
        else:
            lo, hi = -1.0 / (s.maximum - E), 0.0
            while residual(lo) < 0:
                expanded()
                lo, hi = lo * BRACKET_GROWTH, lo
        return lo, hi

    start = 1.0 / (E - s.minimum)
    if residual(start) > 0:
        lo, hi = start, start * BRACKET_GROWTH
        while residual(hi) > 0:
            expanded()
            lo, hi = hi, hi * BRACKET_GROWTH
    else:
        lo, hi = start / BRACKET_GROWTH, start
        while residual(lo) < 0:
            expanded()
            lo, hi = lo / BRACKET_GROWTH, lo
            if lo < BETA_FLOOR:
                raise BetaTooSmall(
                    f"E={E} needs beta below {BETA_FLOOR}; the result cannot be certified"
                )
    return lo, hi


def solve_beta(s: Spectrum, E: float, tol: float = DEFAULT_TOL,
               base: Optional[str] = None) -> GibbsSolution:
    """
    Solve the Gibbs equation Tr H exp(-beta H) = E Tr exp(-beta H).

    Args:
        s: Validated spectrum (shifted spectra are solved as-is).
        E: Target mean energy.
        tol: Residual tolerance, relative to max(1, E).
        base: Log base of the reported entropy.

    Returns:
        GibbsSolution with |mean_energy - E| <= tol * max(1, E), unless the
        bracket shrank to relative width 2**-60 first.
    """
    base = resolve_base(base)
    _check_energy(s, E)
    sum_tol = tol * SUM_TOL_FACTOR
    threshold = tol * max(1.0, E)
    evaluated = {}

    def residual(beta: float) -> float:
        moments = partition_moments(s, beta, sum_tol)
        evaluated[beta] = moments
        return moments.mean_energy - E

    def solution(beta: float) -> GibbsSolution:
        moments: PartitionMoments = evaluated[beta]
        return GibbsSolution(
            energy=E,
            beta=beta,
            log_Z=moments.log_Z,
            mean_energy=moments.mean_energy,
            residual=abs(moments.mean_energy - E),
            entropy_nats=beta * E + moments.log_Z,
            base=base,
        )

    lo, hi = _bracket(s, E, residual)
    for candidate in (lo, hi):
        if abs(evaluated[candidate].mean_energy - E) <= threshold:
            return solution(candidate)

    for step in range(MAX_BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        r = residual(mid)
        narrow = (hi - lo) <= BISECTION_REL_WIDTH * max(abs(lo), abs(hi))
        if abs(r) <= threshold or narrow or mid in (lo, hi):
            logger.debug(f"solve_beta: E={E} beta={mid} residual={r:.3e} after {step + 1} bisections")
            return solution(mid)
        if r > 0:
            lo = mid
        else:
            hi = mid

    raise NonConvergence(f"Bisection for E={E} did not converge in {MAX_BISECTION_STEPS} steps")


def capped_energy(s: Spectrum, E: float) -> float:
    """Effective energy min(E, uniform mean) for the constraint <f> <= E."""
    return min(E, s.uniform_mean)


def solve_capped(s: Spectrum, E: float, tol: float = DEFAULT_TOL,
                 base: Optional[str] = None) -> GibbsSolution:
    """
    Maximum-entropy state under <f> <= E.

    Identical to solve_beta except on finite spectra with E at or above the
    uniform mean, where the constraint is slack and the uniform state wins.
    """
    base = resolve_base(base)
    uniform_mean = s.uniform_mean
    if s.is_finite and math.isfinite(E) and E > s.minimum and capped_energy(s, E) == uniform_mean:
        log_n = math.log(s.size)
        logger.debug(f"solve_capped: E={E} at or above uniform mean {uniform_mean}; using uniform state")
        return GibbsSolution(
            energy=E,
            beta=0.0,
            log_Z=log_n,
            mean_energy=uniform_mean,
            residual=abs(uniform_mean - E),
            entropy_nats=log_n,
            base=base,
            capped=True,
        )
    return solve_beta(s, E, tol, base)


def gibbs_entropy(s: Spectrum, E: float, tol: float = DEFAULT_TOL,
                  base: Optional[str] = None) -> float:
    """F_H(E) = beta E + ln Z in the requested base."""
    return solve_beta(s, E, tol, base).entropy
