"""
Probability vectors and joint tables on truncated N_0.

Represented mass is renormalized to exactly one; mass that was cut off is
recorded in `certified_tail` as an error bar and never added to values.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np
import pandas as pd

from config import DISTRIBUTION_MASS_TOL
from errors import InvalidState

logger = logging.getLogger(__name__)


def _frozen(values: np.ndarray) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.setflags(write=False)
    return array


def _check_weights(weights: np.ndarray, certified_tail: float) -> None:
    if weights.size == 0:
        raise InvalidState("Distribution has no represented symbols")
    if not np.all(np.isfinite(weights)) or np.any(weights < 0):
        raise InvalidState("Probabilities must be finite and nonnegative")
    if not (0.0 <= certified_tail <= DISTRIBUTION_MASS_TOL):
        raise InvalidState(f"Certified tail {certified_tail} exceeds {DISTRIBUTION_MASS_TOL}")
    if weights.sum() <= 0:
        raise InvalidState("Distribution has zero represented mass")


@dataclass(frozen=True)
class Distribution:
    """
    Attributes:
        probs: Read-only probabilities of symbols support_offset, support_offset + 1, ...
        support_offset: Index of the first represented symbol.
        certified_tail: Bound on the mass cut off beyond the vector.
        tail_energy: Bound on the cut-off contribution to the expected level.
    """
    probs: np.ndarray
    support_offset: int = 0
    certified_tail: float = 0.0
    tail_energy: float = 0.0

    def __post_init__(self):
        weights = np.asarray(self.probs, dtype=float)
        _check_weights(weights, self.certified_tail)
        if abs(weights.sum() - 1.0) > DISTRIBUTION_MASS_TOL * max(1, weights.size):
            raise InvalidState(f"Probabilities sum to {weights.sum()}, not 1")
        if self.support_offset < 0:
            raise InvalidState(f"Negative support offset {self.support_offset}")
        object.__setattr__(self, 'probs', _frozen(weights))

    @classmethod
    def from_weights(cls, weights, support_offset: int = 0, certified_tail: float = 0.0,
                     tail_energy: float = 0.0) -> 'Distribution':
        """Renormalize nonnegative weights into a Distribution."""
        weights = np.asarray(weights, dtype=float)
        _check_weights(weights, certified_tail)
        return cls(weights / weights.sum(), support_offset, certified_tail, tail_energy)

    @classmethod
    def point_mass(cls, index: int = 0) -> 'Distribution':
        return cls(np.ones(1), support_offset=index)

    @property
    def support(self) -> np.ndarray:
        """Symbol indices of the represented entries."""
        return np.arange(self.support_offset, self.support_offset + len(self.probs))

    @property
    def end(self) -> int:
        """One past the last represented symbol."""
        return self.support_offset + len(self.probs)

    def dense(self, length: int = None) -> np.ndarray:
        """Probabilities aligned on symbols 0 .. length - 1."""
        length = self.end if length is None else length
        if length < self.end:
            raise InvalidState(f"Length {length} cuts represented symbols (need {self.end})")
        out = np.zeros(length)
        out[self.support_offset:self.end] = self.probs
        return out

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({'index': self.support, 'probability': self.probs})

    def to_list(self) -> list:
        return self.dense().tolist()


@dataclass(frozen=True)
class JointDistribution:
    """
    Joint table p(n, m) over truncated N_0 x N_0.

    Attributes:
        probs: Read-only matrix; rows index X, columns index Y.
        certified_tail: Bound on the mass cut off beyond the table.
    """
    probs: np.ndarray
    certified_tail: float = 0.0

    def __post_init__(self):
        table = np.atleast_2d(np.asarray(self.probs, dtype=float))
        _check_weights(table, self.certified_tail)
        if abs(table.sum() - 1.0) > DISTRIBUTION_MASS_TOL * max(1, table.size):
            raise InvalidState(f"Joint probabilities sum to {table.sum()}, not 1")
        object.__setattr__(self, 'probs', _frozen(table))

    @classmethod
    def from_weights(cls, weights, certified_tail: float = 0.0) -> 'JointDistribution':
        table = np.atleast_2d(np.asarray(weights, dtype=float))
        _check_weights(table, certified_tail)
        return cls(table / table.sum(), certified_tail)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.probs.shape

    def marginals(self) -> Tuple[Distribution, Distribution]:
        """(p_X, p_Y) as row and column sums."""
        return (
            Distribution.from_weights(self.probs.sum(axis=1), certified_tail=self.certified_tail),
            Distribution.from_weights(self.probs.sum(axis=0), certified_tail=self.certified_tail),
        )

    def error_probability(self) -> float:
        """P(X != Y) over the represented table."""
        k = min(self.probs.shape)
        return float(1.0 - np.trace(self.probs[:k, :k]))
