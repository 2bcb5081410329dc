"""
Information measures over Distribution and JointDistribution, with the
error bars implied by their certified tails.
"""

from typing import Optional

import numpy as np
from scipy.special import entr, xlogy

from errors import IncompatibleSupport
from spectrum.levels import Spectrum
from units import from_nats

from .distributions import Distribution, JointDistribution


def shannon_entropy(d: Distribution, base: Optional[str] = None) -> float:
    """-sum p log p over the represented symbols (0 log 0 = 0)."""
    return from_nats(float(entr(d.probs).sum()), base)


def shannon_entropy_error(d: Distribution, base: Optional[str] = None) -> float:
    """eta(certified_tail), the error bar reported next to shannon_entropy."""
    return from_nats(float(entr(d.certified_tail)), base)


def conditional_entropy(j: JointDistribution, base: Optional[str] = None) -> float:
    """H(X|Y) = -sum p(x, y) log(p(x, y) / p_Y(y))."""
    column_mass = j.probs.sum(axis=0, keepdims=True)
    ratio = np.divide(j.probs, column_mass, out=np.zeros_like(j.probs), where=column_mass > 0)
    return from_nats(float(-xlogy(j.probs, ratio).sum()), base)


def tv_distance(p: Distribution, q: Distribution) -> float:
    """Half the l1 distance over the union of the two supports."""
    length = max(p.end, q.end)
    return float(0.5 * np.abs(p.dense(length) - q.dense(length)).sum())


def tv_distance_error(p: Distribution, q: Distribution) -> float:
    return 0.5 * (p.certified_tail + q.certified_tail)


def expected_f(d: Distribution, s: Spectrum) -> float:
    """sum_x f(x) p(x) with f the levels of s."""
    if s.is_finite and d.end > s.size:
        raise IncompatibleSupport(
            f"Distribution reaches symbol {d.end - 1} but the spectrum has {s.size} levels"
        )
    levels = s.levels(d.end)[d.support_offset:]
    return float(np.dot(levels, d.probs))


def expected_f_error(d: Distribution) -> float:
    return d.tail_energy
