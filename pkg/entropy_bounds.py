#!/usr/bin/env python3
"""
Entropy bounds command line.

Usage:
  python entropy_bounds.py bound --spectrum data/oscillator.json --E 1 --eps 0.25
  python entropy_bounds.py sweep --spectrum data/oscillator.json --E log:0.01:100:5 --eps 0:1:11
  python entropy_bounds.py gibbs --spectrum data/power_law.json --E 0.5:5:10
  python entropy_bounds.py witness --spectrum data/three_level.json --E 1 --eps 0.2 --format json
  python entropy_bounds.py verify --spectrum data/two_level.json --E 0.3 --trials 1000 --seed 7
  python entropy_bounds.py oracle --spectrum data/oscillator.json --E 1 --eps 0.25

Environment variables:
  ENTROPY_BOUNDS_THREADS - worker threads for sweeps and sampling
  ENTROPY_BOUNDS_LOG_BASE - default log base, nats or bits
  ENTROPY_BOUNDS_LOG_LEVEL - logging level (default INFO)
"""

import logging
import os
import sys

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from cli import parse_args, run
from config import EXIT_ERROR, LOG_DATEFMT, LOG_FORMAT, LOG_LEVEL
from errors import EntropyBoundsError


def configure_logging(level: str = LOG_LEVEL) -> None:
    """Timestamped logs on stderr; stdout carries only the artifact."""
    logging.basicConfig(level=level, format=LOG_FORMAT, datefmt=LOG_DATEFMT, stream=sys.stderr)


def main():
    configure_logging()
    try:
        config = parse_args()
    except EntropyBoundsError as e:
        sys.stderr.write(f"error: {type(e).__name__}: {e}\n")
        sys.exit(EXIT_ERROR)
    sys.exit(run(config))


if __name__ == "__main__":
    main()
