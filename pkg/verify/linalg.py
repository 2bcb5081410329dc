"""
Dense Hermitian eigensolver by cyclic Jacobi rotations.

Each sweep visits every (p, q) pair once in round-robin order; the pairs of one
round are disjoint, so their complex rotations are applied together as column
and row updates on the whole matrix.
"""

import logging
from functools import lru_cache
from typing import List, NamedTuple, Tuple

import numpy as np

from config import HERMITIAN_TOL, JACOBI_MAX_SWEEPS, JACOBI_REL_TOL, MAX_JACOBI_DIM
from errors import DimensionTooLarge, NonConvergence, NonHermitianInput

logger = logging.getLogger(__name__)


class JacobiResult(NamedTuple):
    eigenvalues: np.ndarray      # non-increasing
    eigenvectors: np.ndarray     # columns, matching eigenvalues
    residual: float              # ||V^H M V - diag(eigenvalues)||_F
    sweeps: int


def as_hermitian(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Return m as a complex Hermitian array (symmetrized), or raise NonHermitianInput."""
    matrix = np.array(getattr(m, 'entries', m), dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise NonHermitianInput(f"Expected a square matrix, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise NonHermitianInput("Matrix has non-finite entries")
    scale = max(1.0, float(np.abs(matrix).max(initial=0.0)))
    asymmetry = float(np.abs(matrix - matrix.conj().T).max(initial=0.0))
    if asymmetry > tol * scale:
        raise NonHermitianInput(f"Matrix is not Hermitian (max |A - A^H| = {asymmetry:.3e})")
    return 0.5 * (matrix + matrix.conj().T)


@lru_cache(maxsize=None)
def round_robin_pairs(n: int) -> Tuple[Tuple[np.ndarray, np.ndarray], ...]:
    """Circle-method schedule: n - 1 (or n for odd n) rounds of disjoint (p, q) pairs."""
    m = n + (n % 2)
    players: List[int] = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for k in range(m // 2):
            i, j = players[k], players[m - 1 - k]
            if i < n and j < n:
                ps.append(min(i, j))
                qs.append(max(i, j))
        rounds.append((np.array(ps, dtype=int), np.array(qs, dtype=int)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _rotate(a: np.ndarray, v: np.ndarray, ps: np.ndarray, qs: np.ndarray) -> None:
    apq = a[ps, qs]
    r = np.abs(apq)
    keep = r > 0
    if not np.any(keep):
        return
    ps, qs, apq, r = ps[keep], qs[keep], apq[keep], r[keep]

    # U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q), apq = r e^{i phi}
    phase = apq / r
    theta = (a[qs, qs].real - a[ps, ps].real) / (2.0 * r)
    t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    u_qp = -s * np.conj(phase)
    u_qq = c * np.conj(phase)

    for target in (a, v):
        col_p = target[:, ps].copy()
        col_q = target[:, qs].copy()
        target[:, ps] = col_p * c + col_q * u_qp
        target[:, qs] = col_p * s + col_q * u_qq

    row_p = a[ps, :].copy()
    row_q = a[qs, :].copy()
    a[ps, :] = c[:, None] * row_p + np.conj(u_qp)[:, None] * row_q
    a[qs, :] = s[:, None] * row_p + np.conj(u_qq)[:, None] * row_q
    a[ps, qs] = 0.0
    a[qs, ps] = 0.0


def _off_diagonal_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def jacobi_eigenvalues(m, rel_tol: float = JACOBI_REL_TOL,
                       max_sweeps: int = JACOBI_MAX_SWEEPS) -> JacobiResult:
    """
    Eigen-decompose a Hermitian matrix.

    Args:
        m: Hermitian array or DensityMatrix.
        rel_tol: Stop when the off-diagonal Frobenius norm is below rel_tol * ||m||_F.
        max_sweeps: Sweep cap before NonConvergence.

    Returns:
        JacobiResult with eigenvalues in non-increasing order.
    """
    matrix = as_hermitian(m)
    n = matrix.shape[0]
    if n > MAX_JACOBI_DIM:
        raise DimensionTooLarge(f"Dimension {n} exceeds the Jacobi limit {MAX_JACOBI_DIM}")

    a = matrix.copy()
    v = np.eye(n, dtype=complex)
    target = rel_tol * float(np.linalg.norm(matrix))
    rounds = round_robin_pairs(n)

    sweeps = 0
    while _off_diagonal_norm(a) > target:
        if sweeps == max_sweeps:
            raise NonConvergence(f"Jacobi did not converge in {max_sweeps} sweeps (n={n})")
        for ps, qs in rounds:
            _rotate(a, v, ps, qs)
        sweeps += 1

    eigenvalues = np.diag(a).real.copy()
    order = np.argsort(-eigenvalues, kind='stable')
    eigenvalues = eigenvalues[order]
    v = v[:, order]
    residual = float(np.linalg.norm(v.conj().T @ matrix @ v - np.diag(eigenvalues)))
    logger.debug(f"Jacobi: n={n} sweeps={sweeps} residual={residual:.3e}")
    return JacobiResult(eigenvalues, v, residual, sweeps)
