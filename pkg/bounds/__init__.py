"""
Bounds module for the entropy bounds toolkit.

Provides the optimal energy-constrained bound kappa_E(eps), its ingredients,
the concave profile G_E and the oscillator closed forms.
"""

from .formulas import (
    Branch,
    BoundResult,
    binary_entropy,
    capacity_F,
    capacity_F_plus,
    continuity_bound,
    fano_bound,
    kappa,
    threshold_a,
)
from .profile import (
    argmax_G,
    g_profile,
    golden_section_max,
    identity_residual,
    profile_upper,
)
from .oscillator import (
    OscillatorReference,
    oscillator_g,
    oscillator_reference,
)

__all__ = [
    'Branch',
    'BoundResult',
    'binary_entropy',
    'capacity_F',
    'capacity_F_plus',
    'continuity_bound',
    'fano_bound',
    'kappa',
    'threshold_a',
    'argmax_G',
    'g_profile',
    'golden_section_max',
    'identity_residual',
    'profile_upper',
    'OscillatorReference',
    'oscillator_g',
    'oscillator_reference',
]
