"""
Randomized no-violation suites.

Each trial derives its own generator from (seed, trial index), so a report is
identical whatever order the worker threads finish in. A trial whose bound
cannot be certified is logged, counted as skipped and noted in the report;
it never aborts the batch.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, List, NamedTuple, Optional

import numpy as np

from bounds.formulas import kappa
from config import (
    DEFAULT_SEED,
    DEFAULT_TOL,
    MAX_CLASSICAL_SUPPORT,
    MAX_QUANTUM_DIM,
    THREADS,
    VERIFY_ATOL,
    VERIFY_RTOL,
)
from errors import DimensionMismatch, DimensionTooLarge, DomainError, EntropyBoundsError
from extremal.distributions import Distribution, JointDistribution
from extremal.measures import conditional_entropy, expected_f, shannon_entropy, tv_distance
from gibbs.solver import solve_capped
from spectrum.levels import Spectrum

from .linalg import jacobi_eigenvalues
from .report import TrialOutcome, VerificationReport, is_violation, summarize
from .states import DensityMatrix, extremal_states, trace_distance, von_neumann_entropy

logger = logging.getLogger(__name__)

QUANTUM_KINDS = ('gaussian', 'diagonal', 'perturbed', 'near_extremal')
CLASSICAL_KINDS = ('dirichlet', 'sparse', 'perturbed', 'near_ground')
FANO_SUPPORT = 8


class PairCheck(NamedTuple):
    bound: float
    achieved: float     # S(rho) - S(sigma), or its absolute value for continuity
    slack: float        # bound - achieved
    violated: bool


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, trial]))


def _check_trials(E: float, trials: int) -> None:
    if not (math.isfinite(E) and E > 0):
        raise DomainError(f"E must be positive and finite, got {E}")
    if trials < 0:
        raise DomainError(f"trials must be nonnegative, got {trials}")


def _distance(x: float) -> float:
    return min(1.0, max(0.0, x))


def semicontinuity_check(s: Spectrum, E: float, entropy_rho: float, entropy_sigma: float,
                         eps: float, tol: float = DEFAULT_TOL, atol: float = VERIFY_ATOL,
                         rtol: float = VERIFY_RTOL) -> PairCheck:
    """
    One-sided check S(rho) - S(sigma) <= kappa_E(eps), rho energy-constrained.

    Entropies are in nats; sigma is unconstrained, so the achieved difference
    may be arbitrarily negative.
    """
    bound = kappa(s, E, _distance(eps), tol, 'nats').value
    achieved = entropy_rho - entropy_sigma
    return PairCheck(bound, achieved, bound - achieved, is_violation(bound, achieved, atol, rtol))


def continuity_check(s: Spectrum, E: float, entropy_rho: float, entropy_sigma: float,
                     eps: float, tol: float = DEFAULT_TOL, atol: float = VERIFY_ATOL,
                     rtol: float = VERIFY_RTOL) -> PairCheck:
    """Two-sided check |S(rho) - S(sigma)| <= kappa_E(eps), both states energy-constrained."""
    bound = kappa(s, E, _distance(eps), tol, 'nats').value
    achieved = abs(entropy_rho - entropy_sigma)
    return PairCheck(bound, achieved, bound - achieved, is_violation(bound, achieved, atol, rtol))


def condition_energy(x: np.ndarray, levels: np.ndarray, E: float) -> np.ndarray:
    """
    Mix a probability vector or density matrix with the ground level at the
    minimal weight that brings its mean level down to E.

    Args:
        x: Probability vector, or square matrix with populations on the diagonal.
        levels: Grounded levels (levels[0] == 0), at least as many as x has entries.
        E: Energy bound.

    Returns:
        x itself when already within E, otherwise (1 - t) x + t |0><0|.
    """
    x = np.asarray(x)
    populations = np.diag(x).real if x.ndim == 2 else x
    energy = float(np.dot(levels[:len(populations)], populations))
    if energy <= E:
        return x
    t = 1.0 - E / energy
    mixed = (1.0 - t) * x
    if x.ndim == 2:
        mixed[0, 0] += t
    else:
        mixed[0] += t
    return mixed


def fano_reduction(j: JointDistribution) -> JointDistribution:
    """
    Swap p(0, m) and p(m, m) in every column m >= 1 where p(m, m) >= p(0, m).

    The result has the same joint entropy and the same Y marginal (hence the
    same H(X|Y)), an X marginal with no larger mean level, and
    1 - p_X'(0) <= P(X != Y).
    """
    table = np.array(j.probs)
    rows, columns = table.shape
    for m in range(1, min(rows, columns)):
        if table[m, m] >= table[0, m]:
            table[0, m], table[m, m] = table[m, m], table[0, m]
    return JointDistribution(table, certified_tail=j.certified_tail)


def random_density_matrix(rng: np.random.Generator, dim: int, rank: Optional[int] = None) -> np.ndarray:
    """
    Hermitian Gaussian draw projected to a unit-trace positive matrix.

    Negative eigenvalues are clamped to zero (the sign is flipped first when no
    eigenvalue is positive); with `rank` only the largest eigenvalues are kept.
    """
    gaussian = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    hermitian = 0.5 * (gaussian + gaussian.conj().T)
    result = jacobi_eigenvalues(hermitian)
    eigenvalues = result.eigenvalues
    if eigenvalues[0] <= 0:
        eigenvalues = -eigenvalues[::-1]
        vectors = result.eigenvectors[:, ::-1]
    else:
        vectors = result.eigenvectors
    eigenvalues = np.clip(eigenvalues, 0.0, None)
    if rank is not None:
        eigenvalues[rank:] = 0.0
    eigenvalues = eigenvalues / eigenvalues.sum()
    matrix = (vectors * eigenvalues) @ vectors.conj().T
    return 0.5 * (matrix + matrix.conj().T)


def _random_probabilities(rng: np.random.Generator, n: int) -> np.ndarray:
    concentration = math.exp(rng.uniform(math.log(0.05), math.log(5.0)))
    return rng.dirichlet(np.full(n, concentration))


def _run_trials(trial: Callable[[int], TrialOutcome], trials: int,
                max_workers: Optional[int]) -> List[TrialOutcome]:
    """Run trials concurrently; outcomes are stored by trial index."""
    outcomes: List[Optional[TrialOutcome]] = [None] * trials
    if trials == 0:
        return []

    def guarded(index: int) -> TrialOutcome:
        try:
            return trial(index)
        except EntropyBoundsError as e:
            logger.warning(f"Trial {index} skipped: {e}")
            return TrialOutcome(None, False, f"trial {index} skipped: {e}")

    workers = max(1, min(max_workers or THREADS, trials))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        future_to_index = {executor.submit(guarded, i): i for i in range(trials)}
        for future in as_completed(future_to_index):
            outcomes[future_to_index[future]] = future.result()
    return outcomes


def _outcome(trial: int, kind: str, checks: List[PairCheck]) -> TrialOutcome:
    worst = min(checks, key=lambda c: c.slack)
    violated = any(c.violated for c in checks)
    note = None
    if violated:
        note = f"trial {trial} ({kind}): achieved {worst.achieved:.12g} exceeds bound {worst.bound:.12g}"
        logger.warning(note)
    return TrialOutcome(worst.slack, violated, note)


def _classical_support(s: Spectrum) -> int:
    return MAX_CLASSICAL_SUPPORT if s.size is None else min(MAX_CLASSICAL_SUPPORT, s.size)


def sample_verify_classical(s: Spectrum, E: float, trials: int, seed: int = DEFAULT_SEED,
                            tol: float = DEFAULT_TOL, max_workers: Optional[int] = None) -> VerificationReport:
    """
    Check H(p) - H(q) <= kappa_E(TV(p, q)) on random pairs with E f(p) <= E.

    When q also meets the constraint the two-sided continuity bound is checked
    as well. Draw kinds rotate through CLASSICAL_KINDS.

    Args:
        s: Grounded spectrum.
        E: Energy bound.
        trials: Number of random pairs.
        seed: Master seed; trial i uses the stream (seed, i).
        tol: Solver tolerance for kappa.
        max_workers: Thread count (defaults to config.THREADS).

    Returns:
        VerificationReport with slack statistics.
    """
    _check_trials(E, trials)
    n = _classical_support(s)
    levels = s.levels(n)

    def trial(index: int) -> TrialOutcome:
        rng = _trial_rng(seed, index)
        kind = CLASSICAL_KINDS[index % len(CLASSICAL_KINDS)]
        if kind == 'dirichlet':
            p, q = _random_probabilities(rng, n), _random_probabilities(rng, n)
        elif kind == 'sparse':
            p, q = _random_probabilities(rng, n), _random_probabilities(rng, n)
            p[rng.random(n) < 0.5] = 0.0
            p[rng.integers(n)] += 1.0
            p = p / p.sum()
        elif kind == 'perturbed':
            p = _random_probabilities(rng, n)
            t = rng.uniform(0.0, 0.2)
            q = (1.0 - t) * p + t * _random_probabilities(rng, n)
        else:
            eps = rng.uniform(0.0, 0.3)
            p = eps * _random_probabilities(rng, n)
            p[0] += 1.0 - eps
            q = np.zeros(n)
            q[0] = 1.0

        p = condition_energy(p, levels, E)
        if rng.random() < 0.5:
            q = condition_energy(q, levels, E)

        rho, sigma = Distribution.from_weights(p), Distribution.from_weights(q)
        eps = tv_distance(rho, sigma)
        h_rho, h_sigma = shannon_entropy(rho, 'nats'), shannon_entropy(sigma, 'nats')
        checks = [semicontinuity_check(s, E, h_rho, h_sigma, eps, tol)]
        if expected_f(sigma, s) <= E:
            checks.append(continuity_check(s, E, h_rho, h_sigma, eps, tol))
        return _outcome(index, kind, checks)

    logger.info(f"Classical sampling: {trials} trials, support {n}, E={E}, seed={seed}")
    report = summarize('classical', seed, _run_trials(trial, trials, max_workers))
    logger.info(f"Classical sampling done: {report.violations} violations, {report.skipped} skipped")
    return report


def _check_dim(s: Spectrum, dim: int) -> None:
    if dim > MAX_QUANTUM_DIM:
        raise DimensionTooLarge(f"dim {dim} exceeds the sampling limit {MAX_QUANTUM_DIM}")
    if dim < 2:
        raise DimensionMismatch(f"dim must be at least 2, got {dim}")
    if s.is_finite and dim > s.size:
        raise DimensionMismatch(f"dim {dim} exceeds the {s.size} levels of the spectrum")


def _near_extremal(rng: np.random.Generator, s: Spectrum, E: float, dim: int, a: float,
                   tol: float) -> np.ndarray:
    """Extremal diagonal witness folded into dim levels (cut mass moved to the ground)."""
    eps = rng.uniform(1e-6, max(2e-6, min(1.0, 1.5 * a)))
    rho, _ = extremal_states(s, E, eps, tol)
    populations = rho.populations[:dim].copy()
    populations[0] += max(0.0, 1.0 - populations.sum())
    return np.diag(populations).astype(complex)


def sample_verify_quantum(s: Spectrum, E: float, dim: int, trials: int, seed: int = DEFAULT_SEED,
                          tol: float = DEFAULT_TOL, max_workers: Optional[int] = None) -> VerificationReport:
    """
    Check S(rho) - S(sigma) <= kappa_E(T(rho, sigma)) on random states of dimension dim.

    The truncated Hamiltonian is diag(f(0), ..., f(dim - 1)) and rho is mixed
    toward the ground state until Tr H rho <= E. Draw kinds rotate through
    QUANTUM_KINDS. The diagonal extremal pair at eps = a_H(E) / 2 is evaluated
    once more at full length and its slack stored in extremal_slack.
    """
    _check_trials(E, trials)
    _check_dim(s, dim)
    levels = s.levels(dim)
    a = solve_capped(s, E, tol).threshold

    def trial(index: int) -> TrialOutcome:
        rng = _trial_rng(seed, index)
        kind = QUANTUM_KINDS[index % len(QUANTUM_KINDS)]
        if kind == 'gaussian':
            rho = random_density_matrix(rng, dim, rank=int(rng.integers(1, dim + 1)))
            sigma = random_density_matrix(rng, dim)
        elif kind == 'diagonal':
            rho = np.diag(_random_probabilities(rng, dim)).astype(complex)
            sigma = np.diag(_random_probabilities(rng, dim)).astype(complex)
        elif kind == 'perturbed':
            rho = random_density_matrix(rng, dim)
            t = rng.uniform(0.0, 0.1) if rng.random() < 0.75 else 0.0
            sigma = (1.0 - t) * rho + t * random_density_matrix(rng, dim)
        else:
            rho = _near_extremal(rng, s, E, dim, a, tol)
            sigma = np.zeros((dim, dim), dtype=complex)
            sigma[0, 0] = 1.0
            t = rng.uniform(0.0, 0.05)
            sigma = (1.0 - t) * sigma + t * random_density_matrix(rng, dim)

        rho = condition_energy(rho, levels, E)
        diagonal = kind in ('diagonal', 'near_extremal') and not np.any(sigma - np.diag(np.diag(sigma)))
        rho_state = DensityMatrix(rho, is_diagonal=kind in ('diagonal', 'near_extremal'))
        sigma_state = DensityMatrix(sigma, is_diagonal=diagonal)

        eps = trace_distance(rho_state, sigma_state)
        s_rho = von_neumann_entropy(rho_state, 'nats')
        s_sigma = von_neumann_entropy(sigma_state, 'nats')
        checks = [semicontinuity_check(s, E, s_rho, s_sigma, eps, tol)]
        if sigma_state.energy(levels) <= E:
            checks.append(continuity_check(s, E, s_rho, s_sigma, eps, tol))
        return _outcome(index, kind, checks)

    logger.info(f"Quantum sampling: {trials} trials, dim {dim}, E={E}, seed={seed}")
    report = summarize('quantum', seed, _run_trials(trial, trials, max_workers))

    eps = 0.5 * a
    rho, sigma = extremal_states(s, E, eps, tol)
    check = semicontinuity_check(s, E, von_neumann_entropy(rho, 'nats'),
                                 von_neumann_entropy(sigma, 'nats'), trace_distance(rho, sigma), tol)
    report.extremal_slack = check.slack
    if check.violated:
        report.violations += 1
        report.notes.append(f"extremal pair at eps={eps:.6g} exceeds the bound by {-check.slack:.3e}")
    logger.info(f"Quantum sampling done: {report.violations} violations, {report.skipped} skipped, "
                f"extremal slack {check.slack:.3e}")
    return report


def sample_verify_fano(s: Spectrum, E: float, trials: int, seed: int = DEFAULT_SEED,
                       tol: float = DEFAULT_TOL, max_workers: Optional[int] = None) -> VerificationReport:
    """
    Check H(X|Y) <= kappa_E(P(X != Y)) on random joint tables with E f(X) <= E.

    Each table also passes through fano_reduction; a reduced table that raises
    the mean level, changes H(X|Y) or moves more than P(X != Y) off the ground
    symbol is reported as a violation too.
    """
    _check_trials(E, trials)
    n = FANO_SUPPORT if s.size is None else min(FANO_SUPPORT, s.size)
    levels = s.levels(n)

    def trial(index: int) -> TrialOutcome:
        rng = _trial_rng(seed, index)
        table = rng.dirichlet(np.full(n * n, 0.3)).reshape(n, n)
        if rng.random() < 0.5:
            # mostly correct guesses
            table = 0.3 * table + 0.7 * np.diag(rng.dirichlet(np.ones(n)))
        energy = float(np.dot(levels, table.sum(axis=1)))
        if energy > E:
            t = 1.0 - E / energy
            table = (1.0 - t) * table
            table[0, 0] += t
        joint = JointDistribution.from_weights(table)

        error = joint.error_probability()
        h_cond = conditional_entropy(joint, 'nats')
        bound = kappa(s, E, _distance(error), tol, 'nats').value
        violated = is_violation(bound, h_cond)
        note = None

        reduced = fano_reduction(joint)
        x_marginal, _ = joint.marginals()
        reduced_marginal, _ = reduced.marginals()
        eps_reduced = 1.0 - reduced_marginal.probs[0]
        if (expected_f(reduced_marginal, s) > expected_f(x_marginal, s) + VERIFY_ATOL
                or eps_reduced > error + VERIFY_ATOL
                or abs(conditional_entropy(reduced, 'nats') - h_cond) > VERIFY_ATOL):
            violated = True
            note = f"trial {index}: reduction broke its guarantees"
        elif violated:
            note = f"trial {index}: H(X|Y)={h_cond:.12g} exceeds bound {bound:.12g}"
        if note:
            logger.warning(note)
        return TrialOutcome(bound - h_cond, violated, note)

    logger.info(f"Fano sampling: {trials} trials, support {n}, E={E}, seed={seed}")
    report = summarize('fano', seed, _run_trials(trial, trials, max_workers))
    logger.info(f"Fano sampling done: {report.violations} violations")
    return report
