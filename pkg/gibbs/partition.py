"""
Log-partition and mean-energy evaluation.

Sums are max-shifted in log space. Linear tails are added in closed form;
other infinite tails are cut at a certified truncation plan.
"""

import logging
import math
from typing import NamedTuple

import numpy as np

from config import BETA_FLOOR, DEFAULT_TOL
from errors import BetaTooSmall
from spectrum.levels import Spectrum
from spectrum.truncation import plan_truncation

logger = logging.getLogger(__name__)


class PartitionMoments(NamedTuple):
    log_Z: float
    mean_energy: float
    cutoff_index: int


def log_sum_exp(log_terms: np.ndarray) -> float:
    """log(sum(exp(log_terms))), with log1p over the non-dominant terms."""
    top = int(np.argmax(log_terms))
    shift = float(log_terms[top])
    rest = np.exp(log_terms - shift)
    rest[top] = 0.0
    return shift + math.log1p(float(rest.sum()))


def _explicit_moments(levels: np.ndarray, beta: float) -> PartitionMoments:
    log_w = -beta * levels
    log_Z = log_sum_exp(log_w)
    probs = np.exp(log_w - log_Z)
    return PartitionMoments(log_Z, float(np.dot(levels, probs)), len(levels))


def _linear_tail_moments(s: Spectrum, beta: float) -> PartitionMoments:
    # sum_{k >= K} exp(-beta (c k + d)) = exp(-beta (c K + d)) / (1 - exp(-beta c))
    head = np.asarray(s.head, dtype=float)
    anchor = len(head)
    c, d = s.affine_bound(anchor)
    first = c * anchor + d
    log_tail = -beta * first - math.log(-math.expm1(-beta * c))

    log_w = np.concatenate([-beta * head, [log_tail]])
    log_Z = log_sum_exp(log_w)
    head_probs = np.exp(log_w[:-1] - log_Z)
    tail_mass = math.exp(log_tail - log_Z)
    tail_mean = first + c * math.exp(-beta * c) / -math.expm1(-beta * c)
    mean = float(np.dot(head, head_probs)) + tail_mass * tail_mean
    return PartitionMoments(log_Z, mean, anchor)


def partition_moments(s: Spectrum, beta: float, tol: float = DEFAULT_TOL) -> PartitionMoments:
    """
    Evaluate ln Z(beta) and the mean energy in one pass.

    Args:
        s: Validated spectrum.
        beta: Inverse temperature; any real for finite spectra, >= BETA_FLOOR otherwise.
        tol: Bound on the summation error of either sum.

    Returns:
        PartitionMoments(log_Z, mean_energy, cutoff_index).
    """
    if s.is_finite:
        return _explicit_moments(s.levels(s.size), beta)
    if not beta >= BETA_FLOOR:
        raise BetaTooSmall(f"beta={beta} is below the floor {BETA_FLOOR} on an infinite spectrum")
    if s.tail_is_exact:
        return _linear_tail_moments(s, beta)
    plan = plan_truncation(s, beta, tol)
    return _explicit_moments(s.levels(plan.cutoff_index), beta)


def log_partition(s: Spectrum, beta: float, tol: float = DEFAULT_TOL) -> float:
    """ln sum_i exp(-beta h_i)."""
    return partition_moments(s, beta, tol).log_Z


def mean_energy(s: Spectrum, beta: float, tol: float = DEFAULT_TOL) -> float:
    """sum_i h_i exp(-beta h_i) / Z; strictly decreasing in beta."""
    return partition_moments(s, beta, tol).mean_energy
