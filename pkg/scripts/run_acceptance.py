#!/usr/bin/env python3
"""
Acceptance run for the entropy bounds toolkit.
Times each criterion on the reference spectra and prints a summary.

Usage:
  python scripts/run_acceptance.py              # all criteria
  python scripts/run_acceptance.py --only 1 2   # selected criteria
  python scripts/run_acceptance.py --quick      # reduced sampling sizes
"""

import argparse
import math
import os
import sys
import time
from datetime import datetime

import numpy as np

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from bounds import (
    argmax_G,
    capacity_F_plus,
    identity_residual,
    kappa,
    oscillator_reference,
    threshold_a,
)
from config import DATA_DIR
from extremal import expected_f, extremal_pair, shannon_entropy, tv_distance
from gibbs import solve_beta
from spectrum import load_spectrum
from verify import (
    DensityMatrix,
    delta_oracle,
    mirsky_passive_check,
    passive_energy_check,
    random_density_matrix,
    sample_verify_classical,
    sample_verify_quantum,
)

SPECTRA = ('oscillator', 'two_level', 'three_level', 'power_law', 'degenerate_ground')


def log(message):
    """Print timestamped log message"""
    timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
    print(f"[{timestamp}] {message}")


def load_all():
    return {name: load_spectrum(DATA_DIR / f"{name}.json") for name in SPECTRA}


def energy_grid(s, count):
    """Energies below the uniform mean for finite spectra, log-spaced otherwise."""
    if s.is_finite:
        return np.linspace(0.05, 0.95, count) * s.uniform_mean
    return np.geomspace(0.05, 20.0, count)


def criterion_1(spectra, quick):
    s = spectra['oscillator']
    worst = 0.0
    for E in (0.01, 0.1, 1.0, 3.0, 10.0, 100.0):
        ref = oscillator_reference(E, base='nats')
        solution = solve_beta(s, E, base='nats')
        errors = [abs(solution.entropy - ref.g), abs(solution.partition - ref.Z),
                  abs(solution.threshold - ref.a)]
        if E >= 1.0:
            errors.append(abs(capacity_F_plus(s, E, base='nats') - ref.F_plus))
        worst = max(worst, *errors)
    return worst < 1e-8, f"max error {worst:.2e}"


def criterion_2(spectra, quick):
    worst = max(identity_residual(s, E, base='nats')
                for s in spectra.values() for E in energy_grid(s, 20))
    return worst < 1e-8, f"max residual {worst:.2e}"


def criterion_3(spectra, quick):
    worst = max(abs(argmax_G(s, E) - threshold_a(s, E, capped=True))
                for s in spectra.values() for E in energy_grid(s, 20))
    return worst < 1e-6, f"max |argmax - a| {worst:.2e}"


def criterion_4(spectra, quick):
    worst_gap, worst_constraint = 0.0, 0.0
    for s in spectra.values():
        for E in energy_grid(s, 10):
            for eps in np.linspace(0.05, 0.95, 10):
                rho, sigma = extremal_pair(s, E, eps)
                bound = kappa(s, E, eps, base='nats').value
                achieved = shannon_entropy(rho, 'nats') - shannon_entropy(sigma, 'nats')
                worst_gap = max(worst_gap, abs(bound - achieved))
                worst_constraint = max(worst_constraint, tv_distance(rho, sigma) - eps,
                                       expected_f(rho, s) - E)
    passed = worst_gap < 1e-7 and worst_constraint < 1e-8
    return passed, f"max |kappa - achieved| {worst_gap:.2e}, constraint excess {worst_constraint:.2e}"


def criterion_5(spectra, quick):
    worst = 0.0
    names = ('two_level',) if quick else ('oscillator', 'two_level')
    for name in names:
        s = spectra[name]
        energies = energy_grid(s, 6) if s.is_finite else np.geomspace(0.1, 3.0, 6)
        for E in energies:
            for eps in np.linspace(0.1, 0.9, 6):
                difference = abs(delta_oracle(s, E, eps, base='nats') - kappa(s, E, eps, base='nats').value)
                worst = max(worst, difference)
    return worst < 1e-4, f"max |oracle - kappa| {worst:.2e} nats"


def criterion_6(spectra, quick):
    classical_trials, quantum_trials = (1000, 200) if quick else (10_000, 2000)
    reports = [
        sample_verify_classical(spectra['oscillator'], 1.0, classical_trials, seed=42),
        sample_verify_classical(spectra['two_level'], 0.3, classical_trials, seed=42),
        sample_verify_quantum(spectra['oscillator'], 1.0, 16, quantum_trials, seed=1),
    ]
    violations = sum(r.violations for r in reports)
    return violations == 0, f"{violations} violations over {sum(r.trials for r in reports)} trials"


def criterion_7(spectra, quick):
    rng = np.random.default_rng(7)
    worst, worst_equality = math.inf, 0.0
    for name, s in spectra.items():
        h1 = s.gap
        if h1 <= 0:
            continue
        for E in rng.uniform(0.0, h1, 50):
            if E <= 0:
                continue
            a = threshold_a(s, E, capped=True)
            worst = min(worst, E / h1 - a)
            if name == 'two_level':
                worst_equality = max(worst_equality, abs(E / h1 - a))
    return worst >= -1e-10 and worst_equality < 1e-9, f"min residual {worst:.2e}, two-level gap {worst_equality:.2e}"


def criterion_8(spectra, quick):
    worst_jump = 0.0
    for s in spectra.values():
        for E in energy_grid(s, 5):
            a = threshold_a(s, E, capped=True)
            if a >= 1.0 - 1e-6:
                continue
            below = kappa(s, E, a, base='nats').value
            above = kappa(s, E, min(1.0, a * (1.0 + 1e-9)), base='nats').value
            worst_jump = max(worst_jump, abs(above - below))

    s = spectra['oscillator']
    decay = [kappa(s, 1.0, 2.0 ** -k, base='nats').value for k in range(1, 31)]
    monotone = all(b < a for a, b in zip(decay, decay[1:])) and decay[-1] < 1e-7

    rng = np.random.default_rng(3)
    pairs = 1000 if quick else 10_000
    levels = np.arange(4, dtype=float)
    inequality_failures = 0
    for _ in range(pairs):
        rho = DensityMatrix(random_density_matrix(rng, 4))
        sigma = DensityMatrix(random_density_matrix(rng, 4))
        mirsky = mirsky_passive_check(rho, sigma)
        energy = passive_energy_check(rho, levels)
        if mirsky.tv_sorted > mirsky.td + 1e-10 or energy.passive > energy.actual + 1e-10:
            inequality_failures += 1

    passed = worst_jump < 1e-6 and monotone and inequality_failures == 0
    return passed, (f"branch jump {worst_jump:.2e}, decay {'ok' if monotone else 'broken'}, "
                    f"{inequality_failures} inequality failures")


CRITERIA = {
    1: ("Oscillator regression", criterion_1),
    2: ("Optimality identity", criterion_2),
    3: ("Maximizer coincidence", criterion_3),
    4: ("Witness tightness", criterion_4),
    5: ("Oracle equivalence", criterion_5),
    6: ("No-violation sampling", criterion_6),
    7: ("Gap inequality", criterion_7),
    8: ("Structural checks", criterion_8),
}


def main():
    parser = argparse.ArgumentParser(description="Run the acceptance criteria")
    parser.add_argument("--only", type=int, nargs="+", choices=sorted(CRITERIA),
                        help="Criteria to run (default: all)")
    parser.add_argument("--quick", action="store_true",
                        help="Reduced sampling and oracle sizes")
    args = parser.parse_args()

    spectra = load_all()
    failures = 0
    for number in args.only or sorted(CRITERIA):
        title, check = CRITERIA[number]
        log(f"Criterion {number}: {title}...")
        start = time.perf_counter()
        try:
            passed, detail = check(spectra, args.quick)
        except Exception as e:
            passed, detail = False, f"raised {type(e).__name__}: {e}"
        elapsed = time.perf_counter() - start
        failures += not passed
        log(f"  {'PASS' if passed else 'FAIL'} in {elapsed:.1f}s - {detail}")

    if failures:
        log(f"ERROR: {failures} criteria failed")
        sys.exit(1)
    log("All criteria passed")


if __name__ == "__main__":
    main()
