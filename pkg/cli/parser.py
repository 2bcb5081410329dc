"""
Argument parsing for the entropy bounds command line.
"""

import argparse
from pathlib import Path
from typing import List, Optional

from config import DEFAULT_SEED, DEFAULT_TOL, LOG_BASE, ORACLE_CUTOFF, THREADS

from .run_config import COMMANDS, FORMATS, RunConfig, parse_grid

COMMAND_HELP = {
    'bound': "Evaluate kappa_E(eps) at one point",
    'sweep': "Evaluate kappa over an (E, eps) grid",
    'gibbs': "Solve the Gibbs state for each E in a grid",
    'witness': "Export the extremal distributions and their achieved quantities",
    'verify': "Run the sampling, oracle and identity suites",
    'oracle': "Run the brute-force maximum-entropy oracle at one point",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='entropy_bounds',
        description="Optimal energy-constrained entropy continuity bounds",
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    for command in COMMANDS:
        sub = subparsers.add_parser(command, help=COMMAND_HELP[command])
        sub.add_argument('--spectrum', required=True, type=Path,
                         help="Spectrum JSON file")
        sub.add_argument('--E', dest='E', default=None,
                         help="Energy bound: a number, start:stop:count or log:start:stop:count")
        sub.add_argument('--eps', default=None,
                         help="Distance in [0, 1]: a number or grid spec")
        sub.add_argument('--bits', action='store_true',
                         help="Report entropies in bits instead of nats")
        sub.add_argument('--tol', type=float, default=DEFAULT_TOL,
                         help=f"Solver tolerance (default: {DEFAULT_TOL})")
        sub.add_argument('--seed', type=int, default=DEFAULT_SEED,
                         help=f"Random seed (default: {DEFAULT_SEED})")
        sub.add_argument('--output', type=Path, default=None,
                         help="Output file (default: stdout)")
        sub.add_argument('--format', choices=FORMATS, default='json' if command == 'verify' else 'csv',
                         help="Output format")
        if command == 'verify':
            sub.add_argument('--trials', type=int, default=1000,
                             help="Classical and Fano trials; quantum runs a fifth of them")
            sub.add_argument('--dim', type=int, default=8,
                             help="Dimension of the sampled density matrices")
        if command in ('verify', 'oracle'):
            sub.add_argument('--cutoff', type=int, default=ORACLE_CUTOFF,
                             help=f"Oracle support size (default: {ORACLE_CUTOFF})")
        if command in ('sweep', 'verify'):
            sub.add_argument('--threads', type=int, default=THREADS,
                             help=f"Worker threads (default: {THREADS})")
    return parser


def parse_args(argv: Optional[List[str]] = None) -> RunConfig:
    """Parse argv into a validated RunConfig."""
    args = build_parser().parse_args(argv)
    return RunConfig(
        command=args.command,
        spectrum_path=args.spectrum,
        E=parse_grid(args.E) if args.E is not None else (),
        eps=parse_grid(args.eps) if args.eps is not None else (),
        log_base='bits' if args.bits else LOG_BASE,
        tol=args.tol,
        seed=args.seed,
        output=args.output,
        format=args.format,
        trials=getattr(args, 'trials', 1000),
        dim=getattr(args, 'dim', 8),
        cutoff=getattr(args, 'cutoff', ORACLE_CUTOFF),
        threads=getattr(args, 'threads', THREADS),
    )
