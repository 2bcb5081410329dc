"""
Density matrices and the quantum measures used by the verification suites.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional, Tuple

import numpy as np
from scipy.special import entr

from config import DEFAULT_TOL, NEGATIVE_EIGEN_TOL, TRACE_TOL
from errors import DimensionMismatch, InvalidState
from extremal.distributions import Distribution
from extremal.witnesses import extremal_pair
from spectrum.levels import Spectrum
from units import from_nats

from .linalg import as_hermitian, jacobi_eigenvalues

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """
    Unit-trace positive semidefinite Hermitian matrix.

    Attributes:
        entries: Read-only complex matrix.
        is_diagonal: Enables the diagonal fast path (no eigensolver).
    """
    entries: np.ndarray
    is_diagonal: bool = False

    def __post_init__(self):
        matrix = np.array(self.entries, dtype=complex)
        matrix.setflags(write=False)
        object.__setattr__(self, 'entries', matrix)

    @classmethod
    def from_matrix(cls, m) -> 'DensityMatrix':
        """Validate Hermiticity, unit trace and positivity."""
        matrix = as_hermitian(m)
        trace = np.trace(matrix).real
        if abs(trace - 1.0) > TRACE_TOL * max(1, matrix.shape[0]):
            raise InvalidState(f"Trace is {trace}, not 1")
        off_diagonal = matrix - np.diag(np.diag(matrix))
        is_diagonal = not np.any(off_diagonal)
        state = cls(matrix, is_diagonal=is_diagonal)
        if state.eigenvalues[-1] < -NEGATIVE_EIGEN_TOL:
            raise InvalidState(f"Matrix has negative eigenvalue {state.eigenvalues[-1]}")
        return state

    @classmethod
    def diagonal(cls, probs) -> 'DensityMatrix':
        probs = np.asarray(probs, dtype=float)
        if np.any(probs < -NEGATIVE_EIGEN_TOL) or abs(probs.sum() - 1.0) > TRACE_TOL * max(1, probs.size):
            raise InvalidState("Diagonal entries must be a probability vector")
        return cls(np.diag(np.clip(probs, 0.0, None)), is_diagonal=True)

    @classmethod
    def from_distribution(cls, d: Distribution, dim: Optional[int] = None) -> 'DensityMatrix':
        return cls.diagonal(d.dense(dim))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def populations(self) -> np.ndarray:
        """Diagonal in the energy basis."""
        return np.diag(self.entries).real

    @cached_property
    def eigenvalues(self) -> np.ndarray:
        """Spectrum in non-increasing order."""
        if self.is_diagonal:
            return np.sort(self.populations)[::-1]
        return jacobi_eigenvalues(self.entries).eigenvalues

    def energy(self, levels: np.ndarray) -> float:
        """Tr(H rho) for H diagonal with the given levels."""
        return float(np.dot(levels[:self.dim], self.populations))


class MirskyCheck(NamedTuple):
    tv_sorted: float
    td: float


class PassiveEnergy(NamedTuple):
    passive: float
    actual: float


def _check_dims(rho: DensityMatrix, sigma: DensityMatrix) -> None:
    if rho.dim != sigma.dim:
        raise DimensionMismatch(f"Dimensions differ: {rho.dim} vs {sigma.dim}")


def von_neumann_entropy(rho: DensityMatrix, base: Optional[str] = None) -> float:
    """S(rho) = sum eta(lambda_i) with tiny negative eigenvalues clamped to 0."""
    eigenvalues = np.clip(rho.eigenvalues, 0.0, None)
    return from_nats(float(entr(eigenvalues).sum()), base)


def trace_distance(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Half the trace norm of rho - sigma."""
    _check_dims(rho, sigma)
    if rho.is_diagonal and sigma.is_diagonal:
        distance = 0.5 * np.abs(rho.populations - sigma.populations).sum()
    else:
        difference = jacobi_eigenvalues(rho.entries - sigma.entries).eigenvalues
        distance = 0.5 * np.abs(difference).sum()
    return float(min(1.0, max(0.0, distance)))


def mirsky_passive_check(rho: DensityMatrix, sigma: DensityMatrix) -> MirskyCheck:
    """TV distance of the sorted spectra next to the trace distance; tv_sorted <= td."""
    _check_dims(rho, sigma)
    tv_sorted = 0.5 * np.abs(rho.eigenvalues - sigma.eigenvalues).sum()
    return MirskyCheck(float(tv_sorted), trace_distance(rho, sigma))


def passive_state(rho: DensityMatrix) -> DensityMatrix:
    """rho with its sorted spectrum placed on increasing levels."""
    eigenvalues = np.clip(rho.eigenvalues, 0.0, None)
    return DensityMatrix.diagonal(eigenvalues / eigenvalues.sum())


def passive_energy_check(rho: DensityMatrix, levels: np.ndarray) -> PassiveEnergy:
    """(Tr H rho_passive, Tr H rho); the first never exceeds the second."""
    levels = np.asarray(levels, dtype=float)
    if len(levels) < rho.dim:
        raise DimensionMismatch(f"{len(levels)} levels for a {rho.dim}-dimensional state")
    return PassiveEnergy(passive_state(rho).energy(levels), rho.energy(levels))


def extremal_states(s: Spectrum, E: float, eps: float,
                    tol: float = DEFAULT_TOL) -> Tuple[DensityMatrix, DensityMatrix]:
    """Diagonal states built from extremal_pair, padded to a common dimension."""
    rho, sigma = extremal_pair(s, E, eps, tol)
    dim = max(rho.end, sigma.end, 2)
    return DensityMatrix.from_distribution(rho, dim), DensityMatrix.from_distribution(sigma, dim)
