"""
Exception hierarchy for the entropy bounds toolkit.

Every error raised by the library derives from EntropyBoundsError so callers
(and the CLI) can map failures to exit codes with a single except clause.
"""


class EntropyBoundsError(Exception):
    """Base class for all toolkit errors."""


# Validation errors: malformed inputs

class ValidationError(EntropyBoundsError):
    """Input data failed validation."""


class EmptySpectrum(ValidationError):
    pass


class NonFiniteLevel(ValidationError):
    pass


class NonMonotoneGenerator(ValidationError):
    """Tail generator cannot certify the Gibbs hypothesis."""


class TooFewLevels(ValidationError):
    pass


class DegenerateSpectrum(ValidationError):
    """Finite spectrum with no positive level after grounding."""


class IncompatibleSupport(ValidationError):
    pass


class NonHermitianInput(ValidationError):
    pass


class InvalidState(ValidationError):
    """Probability vector or density matrix violates its invariants."""


class DimensionTooLarge(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class InvalidGridSpec(ValidationError):
    pass


class SpectrumFileError(ValidationError):
    pass


# Domain errors: arguments outside a function's domain

class DomainError(EntropyBoundsError):
    """Argument outside the mathematical domain of the operation."""


class ArgumentBelowGap(DomainError):
    pass


class TargetEnergyUnattainable(DomainError):
    pass


# Numerical errors: certified failures, never approximations

class NumericalError(EntropyBoundsError):
    """A result could not be certified."""


class BetaTooSmall(NumericalError):
    pass


class NonConvergence(NumericalError):
    pass


class InternalGapViolation(NumericalError):
    pass


class TruncationLimitExceeded(NumericalError):
    pass
