"""
Centralized configuration for the entropy bounds toolkit.

All tolerances, floors, caps, and environment settings should be defined here.
"""

import os
from pathlib import Path

# Base paths
ROOT_DIR = Path(__file__).parent
DATA_DIR = ROOT_DIR / 'data'

# Solver settings
DEFAULT_TOL = 1e-10
BETA_FLOOR = 1e-12              # smallest inverse temperature on infinite spectra
BRACKET_GROWTH = 4.0            # multiplicative bracket expansion factor
MAX_BRACKET_EXPANSIONS = 200
BISECTION_REL_WIDTH = 2.0 ** -60
MAX_BISECTION_STEPS = 2000
SUM_TOL_FACTOR = 0.1            # summation tol = solver tol * factor

# Truncation settings
MAX_CUTOFF = 5_000_000          # levels; larger plans are refused
MIN_CUTOFF = 16
GENERATOR_CHECK_WINDOW = 64     # tail indices checked at ingestion

# Bound settings
GAP_RTOL = 1e-9                 # relative slack when comparing to h_1
GOLDEN_XTOL = 1e-8              # maximizer location precision
GOLDEN_MAX_STEPS = 200

# Distribution settings
DISTRIBUTION_MASS_TOL = 1e-12
WITNESS_TAIL_TOL = 1e-12        # witnesses never carry more tail than this

# Linear algebra settings
MAX_JACOBI_DIM = 256
JACOBI_REL_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
NEGATIVE_EIGEN_TOL = 1e-10      # eigenvalues above -tol are clamped to zero

# Verification settings
MAX_QUANTUM_DIM = 64
VERIFY_ATOL = 1e-9
VERIFY_RTOL = 1e-9
DEFAULT_SEED = 42
MAX_CLASSICAL_SUPPORT = 32      # support size for random classical draws
ORACLE_CUTOFF = 200
ORACLE_RESTARTS = 10
ORACLE_MAX_ITER = 500
ORACLE_ARMIJO = 1e-4
ORACLE_MIN_STEP = 1e-12
DYKSTRA_MAX_CYCLES = 2000
DYKSTRA_TOL = 1e-15
METRIC_FLOOR = 1e-14            # smallest metric weight in the oracle projection

# Environment
LOG_BASE = os.environ.get('ENTROPY_BOUNDS_LOG_BASE', 'nats').lower()
LOG_LEVEL = os.environ.get('ENTROPY_BOUNDS_LOG_LEVEL', 'INFO').upper()
THREADS = int(os.environ.get('ENTROPY_BOUNDS_THREADS', str(os.cpu_count() or 1)))

# Logging (matches the timestamped log() helper of the batch scripts)
LOG_FORMAT = '[%(asctime)s] %(levelname)s %(name)s: %(message)s'
LOG_DATEFMT = '%Y-%m-%d %H:%M:%S'

# CLI output
SWEEP_COLUMNS = ['E', 'epsilon', 'kappa', 'branch', 'a', 'F', 'F_plus_arg', 'log_base']
GIBBS_COLUMNS = ['E', 'beta', 'log_Z', 'Z', 'F', 'mean_energy', 'residual', 'log_base']
WITNESS_COLUMNS = ['distribution', 'index', 'probability']

# Exit codes
EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2
