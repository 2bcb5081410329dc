"""
Log-base handling.

All computation happens in nats; public results are converted on the way out.
"""

import math
from typing import Optional

from config import LOG_BASE
from errors import DomainError

BASES = ('nats', 'bits')


def resolve_base(base: Optional[str] = None) -> str:
    """Return a validated base name, falling back to the configured default."""
    name = (base or LOG_BASE).lower()
    if name not in BASES:
        raise DomainError(f"Unknown log base: {name!r} (expected one of {BASES})")
    return name


def from_nats(value: float, base: Optional[str] = None) -> float:
    if resolve_base(base) == 'bits':
        return value / math.log(2.0)
    return value


def to_nats(value: float, base: Optional[str] = None) -> float:
    if resolve_base(base) == 'bits':
        return value * math.log(2.0)
    return value
