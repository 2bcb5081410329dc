"""
Spectrum module for the entropy bounds toolkit.

Provides validated constraint spectra, the H -> H+ shift, certified truncation,
and JSON ingestion.
"""

from .levels import (
    AffineBoundedTail,
    LinearTail,
    PowerTail,
    Spectrum,
    shift_plus,
    validate,
)
from .truncation import (
    TruncationPlan,
    geometric_tails,
    plan_truncation,
)
from .loader import (
    load_spectrum,
    parse_generator,
    spectrum_from_dict,
)

__all__ = [
    'AffineBoundedTail',
    'LinearTail',
    'PowerTail',
    'Spectrum',
    'shift_plus',
    'validate',
    'TruncationPlan',
    'geometric_tails',
    'plan_truncation',
    'load_spectrum',
    'parse_generator',
    'spectrum_from_dict',
]
