"""
Verify module for the entropy bounds toolkit.

Provides the Jacobi eigensolver, density matrices and their measures, the
brute-force maximum-entropy oracle, and the randomized sampling suites.
"""

from .linalg import (
    JacobiResult,
    as_hermitian,
    jacobi_eigenvalues,
)
from .oracle import delta_oracle
from .report import (
    TrialOutcome,
    VerificationReport,
    is_violation,
    summarize,
)
from .sampling import (
    PairCheck,
    condition_energy,
    continuity_check,
    fano_reduction,
    random_density_matrix,
    sample_verify_classical,
    sample_verify_fano,
    sample_verify_quantum,
    semicontinuity_check,
)
from .states import (
    DensityMatrix,
    MirskyCheck,
    PassiveEnergy,
    extremal_states,
    mirsky_passive_check,
    passive_energy_check,
    passive_state,
    trace_distance,
    von_neumann_entropy,
)

__all__ = [
    'JacobiResult',
    'as_hermitian',
    'jacobi_eigenvalues',
    'delta_oracle',
    'TrialOutcome',
    'VerificationReport',
    'is_violation',
    'summarize',
    'PairCheck',
    'condition_energy',
    'continuity_check',
    'fano_reduction',
    'random_density_matrix',
    'sample_verify_classical',
    'sample_verify_fano',
    'sample_verify_quantum',
    'semicontinuity_check',
    'DensityMatrix',
    'MirskyCheck',
    'PassiveEnergy',
    'extremal_states',
    'mirsky_passive_check',
    'passive_energy_check',
    'passive_state',
    'trace_distance',
    'von_neumann_entropy',
]
