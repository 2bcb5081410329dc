"""
Extremal module for the entropy bounds toolkit.

Provides distribution types, elementary information measures, and the
witnesses that attain the bound.
"""

from .distributions import (
    Distribution,
    JointDistribution,
)
from .measures import (
    conditional_entropy,
    expected_f,
    expected_f_error,
    shannon_entropy,
    shannon_entropy_error,
    tv_distance,
    tv_distance_error,
)
from .witnesses import (
    ExtremalPair,
    extremal_joint,
    extremal_pair,
    gibbs_distribution,
    max_entropy_distribution,
    shifted_max_entropy_distribution,
)

__all__ = [
    'Distribution',
    'JointDistribution',
    'conditional_entropy',
    'expected_f',
    'expected_f_error',
    'shannon_entropy',
    'shannon_entropy_error',
    'tv_distance',
    'tv_distance_error',
    'ExtremalPair',
    'extremal_joint',
    'extremal_pair',
    'gibbs_distribution',
    'max_entropy_distribution',
    'shifted_max_entropy_distribution',
]
