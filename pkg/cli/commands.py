"""
Command implementations and the run() dispatcher.

Each command returns (artifact, exit_code); run() emits the artifact and maps
errors to exit codes with a one-line diagnostic on stderr.
"""

import itertools
import logging
import sys
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, Dict, List, Tuple, Union

import pandas as pd

from bounds.formulas import kappa
from bounds.profile import identity_residual
from config import EXIT_ERROR, EXIT_OK, EXIT_VIOLATION, GIBBS_COLUMNS, SWEEP_COLUMNS, WITNESS_COLUMNS
from errors import EntropyBoundsError
from extremal.measures import (
    expected_f,
    expected_f_error,
    shannon_entropy,
    shannon_entropy_error,
    tv_distance,
    tv_distance_error,
)
from extremal.witnesses import extremal_pair
from gibbs.solver import solve_beta
from spectrum.levels import Spectrum
from spectrum.loader import load_spectrum
from units import from_nats
from verify.oracle import delta_oracle
from verify.sampling import sample_verify_classical, sample_verify_fano, sample_verify_quantum

from .output import emit
from .run_config import RunConfig

logger = logging.getLogger(__name__)

Artifact = Union[pd.DataFrame, dict]

IDENTITY_TOL = 1e-8
ORACLE_MATCH_TOL = 1e-4     # nats


def _bound_row(s: Spectrum, E: float, eps: float, config: RunConfig) -> dict:
    return kappa(s, E, eps, config.tol, config.log_base).to_dict()


def cmd_bound(s: Spectrum, config: RunConfig) -> Tuple[Artifact, int]:
    E, eps = config.require('E')[0], config.require('eps')[0]
    row = _bound_row(s, E, eps, config)
    logger.info(f"kappa={row['kappa']:.10g} {config.log_base} ({row['branch']}, a={row['a']:.10g})")
    return pd.DataFrame([row], columns=SWEEP_COLUMNS), EXIT_OK


def cmd_sweep(s: Spectrum, config: RunConfig) -> Tuple[Artifact, int]:
    """Rows are computed concurrently and emitted sorted by (E, eps)."""
    grid = list(itertools.product(config.require('E'), config.require('eps')))
    rows: List[dict] = [None] * len(grid)
    logger.info(f"Sweeping {len(grid)} points with {config.threads} threads")

    with ThreadPoolExecutor(max_workers=max(1, config.threads)) as executor:
        future_to_index = {
            executor.submit(_bound_row, s, E, eps, config): i
            for i, (E, eps) in enumerate(grid)
        }
        for future in as_completed(future_to_index):
            rows[future_to_index[future]] = future.result()

    frame = pd.DataFrame(rows, columns=SWEEP_COLUMNS)
    return frame.sort_values(['E', 'epsilon'], kind='stable').reset_index(drop=True), EXIT_OK


def cmd_gibbs(s: Spectrum, config: RunConfig) -> Tuple[Artifact, int]:
    rows = []
    for E in config.require('E'):
        solution = solve_beta(s, E, config.tol, config.log_base)
        if solution.beta_nonpositive:
            logger.warning(f"E={E} lies at or above the uniform mean: beta={solution.beta:.6g}")
        rows.append({
            'E': E,
            'beta': solution.beta,
            'log_Z': solution.log_Z,
            'Z': solution.partition,
            'F': solution.entropy,
            'mean_energy': solution.mean_energy,
            'residual': solution.residual,
            'log_base': config.log_base,
        })
    return pd.DataFrame(rows, columns=GIBBS_COLUMNS), EXIT_OK


def _witness_summary(s: Spectrum, E: float, eps: float, config: RunConfig) -> dict:
    rho, sigma = extremal_pair(s, E, eps, config.tol)
    bound = kappa(s, E, eps, config.tol, config.log_base)
    base = config.log_base
    return {
        'E': E,
        'epsilon': eps,
        'kappa': bound.value,
        'branch': bound.branch.value,
        'entropy_rho': shannon_entropy(rho, base),
        'entropy_rho_error': shannon_entropy_error(rho, base),
        'entropy_sigma': shannon_entropy(sigma, base),
        'tv_distance': tv_distance(rho, sigma),
        'tv_distance_error': tv_distance_error(rho, sigma),
        'energy_rho': expected_f(rho, s),
        'energy_rho_error': expected_f_error(rho),
        'log_base': base,
        'rho': rho.to_list(),
        'sigma': sigma.to_list(),
    }


def cmd_witness(s: Spectrum, config: RunConfig) -> Tuple[Artifact, int]:
    E, eps = config.require('E')[0], config.require('eps')[0]
    summary = _witness_summary(s, E, eps, config)
    logger.info(f"Witness: H(rho)={summary['entropy_rho']:.10g} TV={summary['tv_distance']:.10g} "
                f"E[f]={summary['energy_rho']:.10g} kappa={summary['kappa']:.10g}")
    if config.format == 'json':
        return summary, EXIT_OK

    rho, sigma = extremal_pair(s, E, eps, config.tol)
    frames = []
    for label, distribution in (('rho', rho), ('sigma', sigma)):
        frame = distribution.to_frame()
        frame.insert(0, 'distribution', label)
        frames.append(frame)
    return pd.concat(frames, ignore_index=True)[WITNESS_COLUMNS], EXIT_OK


def _oracle_point(s: Spectrum, E: float, eps: float, config: RunConfig) -> dict:
    delta = delta_oracle(s, E, eps, config.cutoff, config.tol, config.seed, base='nats')
    bound = kappa(s, E, eps, config.tol, 'nats')
    difference = abs(delta - bound.value)
    return {
        'E': E,
        'epsilon': eps,
        'delta': from_nats(delta, config.log_base),
        'kappa': from_nats(bound.value, config.log_base),
        'difference_nats': difference,
        'cutoff': config.cutoff,
        'log_base': config.log_base,
        'matches': difference < ORACLE_MATCH_TOL,
    }


def cmd_oracle(s: Spectrum, config: RunConfig) -> Tuple[Artifact, int]:
    E, eps = config.require('E')[0], config.require('eps')[0]
    row = _oracle_point(s, E, eps, config)
    logger.info(f"Oracle: delta={row['delta']:.10g} kappa={row['kappa']:.10g}")
    return pd.DataFrame([row]), EXIT_OK


def cmd_verify(s: Spectrum, config: RunConfig) -> Tuple[Artifact, int]:
    """Sampling suites, one oracle point at eps = a/2 and the optimality identity at E."""
    E = config.require('E')[0]
    dim = config.dim if s.size is None else min(config.dim, s.size)

    reports = [
        sample_verify_classical(s, E, config.trials, config.seed, config.tol, config.threads),
        sample_verify_quantum(s, E, dim, max(1, config.trials // 5), config.seed, config.tol,
                              config.threads),
        sample_verify_fano(s, E, config.trials, config.seed, config.tol, config.threads),
    ]
    eps = config.eps[0] if config.eps else 0.5 * kappa(s, E, 0.0, config.tol).threshold_a
    oracle = _oracle_point(s, E, eps, config)
    residual = identity_residual(s, E, config.tol, 'nats')

    passed = all(r.passed for r in reports) and oracle['matches'] and residual < IDENTITY_TOL
    document = {
        'spectrum': s.name,
        'E': E,
        'seed': config.seed,
        'reports': [r.to_dict() for r in reports],
        'oracle': oracle,
        'identity_residual': residual,
        'violations': sum(r.violations for r in reports),
        'passed': passed,
    }
    if not passed:
        logger.error(f"Verification failed for '{s.name}' at E={E}")
    return document, EXIT_OK if passed else EXIT_VIOLATION


COMMANDS: Dict[str, Callable[[Spectrum, RunConfig], Tuple[Artifact, int]]] = {
    'bound': cmd_bound,
    'sweep': cmd_sweep,
    'gibbs': cmd_gibbs,
    'witness': cmd_witness,
    'verify': cmd_verify,
    'oracle': cmd_oracle,
}


def run(config: RunConfig) -> int:
    """
    Execute one command and emit its artifact.

    Returns:
        EXIT_OK, EXIT_ERROR on validation/domain/IO errors, or EXIT_VIOLATION
        when a verification suite fails.
    """
    try:
        spectrum = load_spectrum(config.spectrum_path)
        artifact, code = COMMANDS[config.command](spectrum, config)
        emit(artifact, config.format, config.output)
        return code
    except (EntropyBoundsError, OSError, ValueError, ArithmeticError) as e:
        sys.stderr.write(f"error: {type(e).__name__}: {str(e).splitlines()[0] if str(e) else ''}\n")
        return EXIT_ERROR
