"""
Gibbs module for the entropy bounds toolkit.

Provides stable log-partition sums, the inverse-temperature solver, and
maximum entropies F_H(E).
"""

from .partition import (
    PartitionMoments,
    log_partition,
    log_sum_exp,
    mean_energy,
    partition_moments,
)
from .solver import (
    GibbsSolution,
    capped_energy,
    gibbs_entropy,
    solve_beta,
    solve_capped,
)

__all__ = [
    'PartitionMoments',
    'log_partition',
    'log_sum_exp',
    'mean_energy',
    'partition_moments',
    'GibbsSolution',
    'capped_energy',
    'gibbs_entropy',
    'solve_beta',
    'solve_capped',
]
