"""
Constraint spectra: validated, grounded, non-decreasing level sequences.

A spectrum is an explicit head of levels, optionally followed by a tail rule
that generates the remaining levels in closed form. Tail rules are indexed by
the raw position in the sorted input, so an index shift (H -> H+) only moves
the starting offset and never re-evaluates the rule.
"""

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Tuple, Union

import numpy as np

from config import GENERATOR_CHECK_WINDOW
from errors import (
    DegenerateSpectrum,
    EmptySpectrum,
    IncompatibleSupport,
    NonFiniteLevel,
    NonMonotoneGenerator,
    TooFewLevels,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearTail:
    """Levels slope * i + offset."""
    slope: float
    offset: float
    kind: str = field(default='linear', init=False)
    exact: bool = field(default=True, init=False)

    def levels(self, indices: np.ndarray) -> np.ndarray:
        return self.slope * np.asarray(indices, dtype=float) + self.offset

    def affine_bound(self, anchor: int) -> Tuple[float, float]:
        return self.slope, self.offset

    def check_parameters(self) -> None:
        if not (math.isfinite(self.slope) and math.isfinite(self.offset)):
            raise NonFiniteLevel(f"Linear tail has non-finite parameters: {self.slope}, {self.offset}")
        if self.slope <= 0:
            raise NonMonotoneGenerator(f"Linear tail slope must be positive, got {self.slope}")

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'slope': self.slope, 'offset': self.offset}


@dataclass(frozen=True)
class PowerTail:
    """Levels scale * i ** exponent with exponent >= 1.

    The affine lower bound is the tangent line at the anchor index, which lies
    below the curve everywhere on i >= 0 by convexity.
    """
    exponent: float
    scale: float
    kind: str = field(default='power', init=False)

    @property
    def exact(self) -> bool:
        return self.exponent == 1.0

    def levels(self, indices: np.ndarray) -> np.ndarray:
        return self.scale * np.power(np.asarray(indices, dtype=float), self.exponent)

    def affine_bound(self, anchor: int) -> Tuple[float, float]:
        j0 = float(max(anchor, 1))
        slope = self.scale * self.exponent * j0 ** (self.exponent - 1.0)
        offset = self.scale * j0 ** self.exponent * (1.0 - self.exponent)
        return slope, offset

    def check_parameters(self) -> None:
        if not (math.isfinite(self.exponent) and math.isfinite(self.scale)):
            raise NonFiniteLevel(f"Power tail has non-finite parameters: {self.exponent}, {self.scale}")
        if self.exponent < 1.0:
            raise NonMonotoneGenerator(f"Power tail exponent must be >= 1, got {self.exponent}")
        if self.scale <= 0:
            raise NonMonotoneGenerator(f"Power tail scale must be positive, got {self.scale}")

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'exponent': self.exponent, 'scale': self.scale}


@dataclass(frozen=True)
class AffineBoundedTail:
    """Arbitrary vectorized rule with a caller-supplied affine lower bound slope * i + offset."""
    rule: Callable[[np.ndarray], np.ndarray]
    slope: float
    offset: float
    kind: str = field(default='affine_bounded', init=False)
    exact: bool = field(default=False, init=False)

    def levels(self, indices: np.ndarray) -> np.ndarray:
        return np.asarray(self.rule(np.asarray(indices, dtype=float)), dtype=float)

    def affine_bound(self, anchor: int) -> Tuple[float, float]:
        return self.slope, self.offset

    def check_parameters(self) -> None:
        if not (math.isfinite(self.slope) and math.isfinite(self.offset)):
            raise NonFiniteLevel(f"Affine bound has non-finite parameters: {self.slope}, {self.offset}")
        if self.slope <= 0:
            raise NonMonotoneGenerator(f"Affine bound slope must be positive, got {self.slope}")

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'slope': self.slope, 'offset': self.offset}


TailRule = Union[LinearTail, PowerTail, AffineBoundedTail]


@dataclass(frozen=True)
class Spectrum:
    """
    Immutable constraint spectrum.

    Attributes:
        head: Explicit levels after grounding, in non-decreasing order.
        tail: Rule for the levels after the head, or None for a finite spectrum.
        shift: Amount subtracted from the raw input at ingestion.
        start: Raw index of head[0]; incremented by shift_plus.
        name: Optional label carried into CLI output.
    """
    head: Tuple[float, ...]
    tail: Optional[TailRule] = None
    shift: float = 0.0
    start: int = 0
    name: str = ''

    @property
    def is_finite(self) -> bool:
        return self.tail is None

    @property
    def size(self) -> Optional[int]:
        """Number of levels, or None for an infinite spectrum."""
        return len(self.head) if self.is_finite else None

    @property
    def tail_start(self) -> int:
        """Raw index of the first generated level."""
        return self.start + len(self.head)

    @property
    def tail_is_exact(self) -> bool:
        """True when the tail equals its affine bound, so tail sums have closed forms."""
        return self.tail is not None and self.tail.exact

    def levels(self, count: int) -> np.ndarray:
        """Return the first `count` levels as a float array."""
        if count < 0:
            raise IncompatibleSupport(f"Negative level count: {count}")
        if self.is_finite and count > len(self.head):
            raise IncompatibleSupport(
                f"Requested {count} levels from a finite spectrum with {len(self.head)}"
            )
        n_head = min(count, len(self.head))
        values = np.array(self.head[:n_head], dtype=float)
        if count > n_head:
            raw = np.arange(self.tail_start, self.start + count)
            values = np.concatenate([values, self.tail.levels(raw) - self.shift])
        return values

    def level(self, index: int) -> float:
        return float(self.levels(index + 1)[index])

    @property
    def minimum(self) -> float:
        return self.level(0)

    @property
    def gap(self) -> float:
        """h_1, the level just above the bottom one (zero when the bottom is degenerate)."""
        if self.is_finite and len(self.head) < 2:
            raise TooFewLevels("Spectral gap needs at least 2 levels")
        return self.level(1)

    @property
    def maximum(self) -> float:
        if not self.is_finite:
            return math.inf
        return float(self.head[-1])

    @property
    def uniform_mean(self) -> float:
        """Mean level under the uniform distribution (beta = 0); infinite for infinite spectra."""
        if not self.is_finite:
            return math.inf
        return float(np.mean(self.head))

    @property
    def ground_multiplicity(self) -> int:
        """Number of levels equal to the bottom level."""
        bottom = self.minimum
        if self.is_finite:
            return int(np.count_nonzero(np.asarray(self.head) == bottom))
        count = 0
        window = len(self.head) + GENERATOR_CHECK_WINDOW
        values = self.levels(window)
        while values[count] == bottom:
            count += 1
            if count == len(values):
                window *= 2
                values = self.levels(window)
        return count

    def affine_bound(self, anchor: int) -> Tuple[float, float]:
        """
        Affine lower bound on the generated levels.

        Args:
            anchor: Relative index >= len(head) from which the bound must hold.

        Returns:
            (c, d) with level(k) >= c * k + d for every k >= anchor.
        """
        if self.tail is None:
            raise IncompatibleSupport("Finite spectra have no tail bound")
        if anchor < len(self.head):
            raise IncompatibleSupport(f"Anchor {anchor} lies inside the explicit head")
        c, d = self.tail.affine_bound(self.start + anchor)
        return c, c * self.start + d - self.shift

    def to_dict(self) -> dict:
        data = {'levels': [value + self.shift for value in self.head]}
        if self.tail is not None and self.tail.kind != 'affine_bounded':
            data['generator'] = self.tail.to_dict()
        if self.name:
            data['name'] = self.name
        return data


def _check_generator(tail: TailRule, first_index: int, head_max: float) -> None:
    tail.check_parameters()
    indices = np.arange(first_index, first_index + GENERATOR_CHECK_WINDOW, dtype=float)
    values = tail.levels(indices)
    if not np.all(np.isfinite(values)):
        raise NonFiniteLevel("Tail generator produced non-finite levels")
    if values[0] < head_max:
        raise NonMonotoneGenerator(
            f"Tail starts at {values[0]} below the largest explicit level {head_max}"
        )
    if np.any(np.diff(values) < 0):
        raise NonMonotoneGenerator("Tail generator is not non-decreasing")
    c, d = tail.affine_bound(first_index)
    slack = 1e-12 * np.maximum(1.0, np.abs(values))
    if np.any(values < c * indices + d - slack):
        raise NonMonotoneGenerator("Tail generator falls below its affine lower bound")


def validate(raw_levels, generator: Optional[TailRule] = None, name: str = '') -> Spectrum:
    """
    Validate raw levels (and an optional tail rule) into a grounded Spectrum.

    The minimum is subtracted and recorded as the shift, and the explicit levels
    are sorted. A generator must continue the head from above, be non-decreasing,
    and dominate an affine function with positive slope.

    Args:
        raw_levels: Sequence of level values.
        generator: Optional tail rule for an infinite spectrum.
        name: Optional label.

    Returns:
        Validated Spectrum.
    """
    try:
        values = np.asarray(list(raw_levels), dtype=float).ravel()
    except OverflowError as e:
        raise NonFiniteLevel(f"Level does not fit in a double: {e}") from e
    if values.size == 0:
        raise EmptySpectrum("Spectrum has no levels")
    if not np.all(np.isfinite(values)):
        raise NonFiniteLevel(f"Spectrum contains non-finite levels: {values[~np.isfinite(values)].tolist()}")

    values = np.sort(values)
    shift = float(values[0])

    if generator is None:
        if values[-1] == values[0]:
            raise DegenerateSpectrum("Finite spectrum has no positive level after grounding")
    else:
        _check_generator(generator, len(values), float(values[-1]))

    grounded = tuple(float(v - shift) for v in values)
    spectrum = Spectrum(head=grounded, tail=generator, shift=shift, start=0, name=name)
    logger.debug(
        f"Validated spectrum {name or '<unnamed>'}: {len(grounded)} explicit levels, "
        f"tail={generator.kind if generator else None}, shift={shift}"
    )
    return spectrum


def shift_plus(s: Spectrum) -> Spectrum:
    """Drop the bottom level (H -> H+). The result is not re-grounded."""
    if s.is_finite and len(s.head) < 2:
        raise TooFewLevels("shift_plus needs at least 2 levels")
    label = f"{s.name}+" if s.name else ''
    return replace(s, head=s.head[1:], start=s.start + 1, name=label)
