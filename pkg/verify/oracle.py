"""
Brute-force oracle for the constrained maximum entropy

    Delta_E(eps) = max { H(p) : p in simplex_N, sum f(i) p(i) <= E, p(0) >= 1 - eps }.

Projected gradient ascent with random restarts. Steps are scaled by the
entropy Hessian (diag p) and projected back in the same metric by Dykstra's
alternating projections over the simplex hyperplane, the energy halfspace, the
ground-weight halfspace and the nonnegative orthant. Nothing here uses the
closed-form bound.
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np
from scipy.special import entr

from config import (
    DEFAULT_SEED,
    DEFAULT_TOL,
    DYKSTRA_MAX_CYCLES,
    DYKSTRA_TOL,
    METRIC_FLOOR,
    ORACLE_ARMIJO,
    ORACLE_CUTOFF,
    ORACLE_MAX_ITER,
    ORACLE_MIN_STEP,
    ORACLE_RESTARTS,
)
from errors import DomainError, NonConvergence
from spectrum.levels import Spectrum
from units import from_nats

logger = logging.getLogger(__name__)


def _entropy(p: np.ndarray) -> float:
    return float(entr(p).sum())


def _project_feasible(y: np.ndarray, d: np.ndarray, f: np.ndarray, E: float,
                      ground: float) -> np.ndarray:
    """Dykstra projection of y onto the feasible set in the metric diag(1 / d)."""
    d_sum = d.sum()
    df = d * f
    df_norm = float(np.dot(df, f))

    def onto_simplex_plane(z):
        return z - ((z.sum() - 1.0) / d_sum) * d

    def onto_energy(z):
        excess = float(np.dot(f, z)) - E
        return z - (excess / df_norm) * df if excess > 0 else z

    def onto_ground(z):
        if z[0] < ground:
            z = z.copy()
            z[0] = ground
        return z

    def onto_orthant(z):
        return np.maximum(z, 0.0)

    projections = (onto_simplex_plane, onto_energy, onto_ground, onto_orthant)
    increments = [np.zeros_like(y) for _ in projections]
    x = y.copy()
    for _ in range(DYKSTRA_MAX_CYCLES):
        previous = x
        for k, project in enumerate(projections):
            z = x + increments[k]
            x = project(z)
            increments[k] = z - x
        if np.abs(x - previous).max() <= DYKSTRA_TOL:
            break
    return x


def _repair(x: np.ndarray, f: np.ndarray, E: float, ground: float) -> np.ndarray:
    """Restore exact feasibility by mixing with the point mass at 0 (f(0) = 0)."""
    x = np.maximum(x, 0.0)
    x = x / x.sum()
    energy = float(np.dot(f, x))
    mix = 0.0
    if energy > E:
        mix = 1.0 - E / energy
    if x[0] < ground:
        mix = max(mix, (ground - x[0]) / (1.0 - x[0]))
    if mix > 0:
        x = (1.0 - mix) * x
        x[0] += mix
    return x


def _ascend(p: np.ndarray, f: np.ndarray, E: float, ground: float, tol: float,
            max_iter: int) -> Tuple[float, bool, int]:
    value = _entropy(p)
    for iteration in range(1, max_iter + 1):
        gradient = -np.log(np.maximum(p, 1e-300)) - 1.0
        metric = np.maximum(p, METRIC_FLOOR)
        step = 1.0
        while True:
            candidate = _repair(_project_feasible(p + step * metric * gradient, metric, f, E, ground),
                                f, E, ground)
            candidate_value = _entropy(candidate)
            if candidate_value >= value + ORACLE_ARMIJO * float(np.dot(gradient, candidate - p)):
                break
            step /= 2.0
            if step < ORACLE_MIN_STEP:
                return value, True, iteration

        improvement = candidate_value - value
        p, value = candidate, candidate_value
        if improvement < tol and step == 1.0:
            return value, True, iteration
    return value, False, max_iter


def delta_oracle(s: Spectrum, E: float, eps: float, cutoff_N: int = ORACLE_CUTOFF,
                 tol: float = DEFAULT_TOL, seed: int = DEFAULT_SEED,
                 restarts: int = ORACLE_RESTARTS, max_iter: int = ORACLE_MAX_ITER,
                 base: Optional[str] = None) -> float:
    """
    Numerically maximize H(X) under E[f(X)] <= E and p_X(0) >= 1 - eps.

    Args:
        s: Grounded spectrum; the first cutoff_N levels are used.
        E: Energy bound.
        eps: Distance from the ground point mass.
        cutoff_N: Truncation of the support.
        tol: Entropy improvement below which a full step counts as converged.
        seed: Seed for the random restarts.
        restarts: Number of random starting points.
        max_iter: Iteration cap per restart.
        base: Log base of the result.

    Returns:
        Best entropy over all restarts.
    """
    if not (math.isfinite(E) and E > 0):
        raise DomainError(f"E must be positive and finite, got {E}")
    if not (0.0 <= eps <= 1.0):
        raise DomainError(f"eps must lie in [0, 1], got {eps}")
    if eps == 0:
        return 0.0

    n = cutoff_N if s.size is None else min(cutoff_N, s.size)
    f = s.levels(n)
    ground = 1.0 - eps

    best = -math.inf
    converged = 0
    for restart in range(restarts):
        rng = np.random.default_rng(np.random.SeedSequence([seed, restart]))
        start = 0.5 * rng.dirichlet(np.ones(n)) + 0.5 / n
        start = _repair(start, f, E, ground)
        value, done, iterations = _ascend(start, f, E, ground, tol, max_iter)
        logger.debug(f"delta_oracle restart {restart}: H={value:.12f} converged={done} iterations={iterations}")
        converged += done
        best = max(best, value)

    if not converged:
        raise NonConvergence(f"delta_oracle: no restart converged within {max_iter} iterations")
    return from_nats(best, base)
