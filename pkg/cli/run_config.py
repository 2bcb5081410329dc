"""
Run configuration and grid specs.

Grid syntax:
    0.25                 a single value
    start:stop:count     count linearly spaced values, endpoints included
    log:start:stop:count count log-spaced values, endpoints included
"""

import math
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np

from config import DEFAULT_SEED, DEFAULT_TOL, MAX_QUANTUM_DIM, ORACLE_CUTOFF, THREADS
from errors import InvalidGridSpec
from units import resolve_base

COMMANDS = ('bound', 'sweep', 'gibbs', 'witness', 'verify', 'oracle')
FORMATS = ('csv', 'json')


def _parse_number(text: str, spec: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise InvalidGridSpec(f"Invalid number {text!r} in grid spec {spec!r}") from None
    if not math.isfinite(value):
        raise InvalidGridSpec(f"Non-finite value in grid spec {spec!r}")
    return value


def parse_grid(spec: str) -> List[float]:
    """
    Expand a grid spec into a strictly increasing list of values.

    Raises:
        InvalidGridSpec: Malformed spec, non-positive count, or a grid that
            does not strictly increase.
    """
    spec = str(spec).strip()
    parts = spec.split(':')
    if len(parts) == 1:
        return [_parse_number(parts[0], spec)]

    log_spaced = parts[0] == 'log'
    if log_spaced:
        parts = parts[1:]
    if len(parts) != 3:
        raise InvalidGridSpec(f"Expected start:stop:count or log:start:stop:count, got {spec!r}")

    start, stop = _parse_number(parts[0], spec), _parse_number(parts[1], spec)
    try:
        count = int(parts[2])
    except ValueError:
        raise InvalidGridSpec(f"Count must be an integer in grid spec {spec!r}") from None
    if count < 1:
        raise InvalidGridSpec(f"Count must be positive in grid spec {spec!r}")
    if count == 1:
        return [start]
    if stop <= start:
        raise InvalidGridSpec(f"Grid must increase: {spec!r}")
    if log_spaced:
        if start <= 0:
            raise InvalidGridSpec(f"Log grid needs a positive start: {spec!r}")
        values = np.geomspace(start, stop, count)
    else:
        values = np.linspace(start, stop, count)
    values = values.tolist()
    if any(b <= a for a, b in zip(values, values[1:])):
        raise InvalidGridSpec(f"Grid {spec!r} does not strictly increase at double precision")
    return values


@dataclass
class RunConfig:
    """
    One CLI invocation.

    E and eps hold expanded grids; single-point commands use their first value.
    """
    command: str
    spectrum_path: Path
    E: Tuple[float, ...] = ()
    eps: Tuple[float, ...] = ()
    log_base: str = 'nats'
    tol: float = DEFAULT_TOL
    seed: int = DEFAULT_SEED
    output: Optional[Path] = None
    format: str = 'csv'
    trials: int = 1000
    dim: int = 8
    cutoff: int = ORACLE_CUTOFF
    threads: int = THREADS

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InvalidGridSpec(f"Unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise InvalidGridSpec(f"Unknown format {self.format!r}")
        self.log_base = resolve_base(self.log_base)
        self.E = tuple(self.E)
        self.eps = tuple(self.eps)
        if any(e <= 0 for e in self.E):
            raise InvalidGridSpec(f"Energies must be positive, got {self.E}")
        if any(not (0.0 <= x <= 1.0) for x in self.eps):
            raise InvalidGridSpec(f"eps values must lie in [0, 1], got {self.eps}")
        if not (0 < self.tol < 1):
            raise InvalidGridSpec(f"tol must lie in (0, 1), got {self.tol}")
        if self.trials < 0:
            raise InvalidGridSpec(f"trials must be nonnegative, got {self.trials}")
        if not (2 <= self.dim <= MAX_QUANTUM_DIM):
            raise InvalidGridSpec(f"dim must lie in [2, {MAX_QUANTUM_DIM}], got {self.dim}")
        if self.cutoff < 2:
            raise InvalidGridSpec(f"cutoff must be at least 2, got {self.cutoff}")
        if not (0 <= self.seed < 2 ** 64):
            raise InvalidGridSpec(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    def require(self, name: str) -> Tuple[float, ...]:
        """Grid `name` ('E' or 'eps'), or InvalidGridSpec when it was not given."""
        values = getattr(self, name)
        if not values:
            raise InvalidGridSpec(f"Command '{self.command}' needs --{name}")
        return values
