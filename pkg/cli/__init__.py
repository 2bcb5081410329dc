"""
Command-line front end for the entropy bounds toolkit.
"""

from .commands import run
from .output import emit, render
from .parser import build_parser, parse_args
from .run_config import RunConfig, parse_grid

__all__ = [
    'run',
    'emit',
    'render',
    'build_parser',
    'parse_args',
    'RunConfig',
    'parse_grid',
]
