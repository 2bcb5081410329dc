import math

import pytest
from scipy.special import entr, xlogy

from config import DATA_DIR
from spectrum import load_spectrum

LN2 = math.log(2.0)


def h(x: float) -> float:
    """Binary entropy in nats."""
    return float(entr(x) + entr(1.0 - x))


def g(E: float) -> float:
    """Oscillator capacity (E + 1) ln(E + 1) - E ln E."""
    return float(xlogy(E + 1.0, E + 1.0) - xlogy(E, E))


@pytest.fixture(scope='session')
def oscillator():
    return load_spectrum(DATA_DIR / 'oscillator.json')


@pytest.fixture(scope='session')
def two_level():
    return load_spectrum(DATA_DIR / 'two_level.json')


@pytest.fixture(scope='session')
def three_level():
    return load_spectrum(DATA_DIR / 'three_level.json')


@pytest.fixture(scope='session')
def power_law():
    return load_spectrum(DATA_DIR / 'power_law.json')


@pytest.fixture(scope='session')
def degenerate_ground():
    return load_spectrum(DATA_DIR / 'degenerate_ground.json')


@pytest.fixture(scope='session')
def all_spectra(oscillator, two_level, three_level, power_law, degenerate_ground):
    return {
        'oscillator': oscillator,
        'two_level': two_level,
        'three_level': three_level,
        'power_law': power_law,
        'degenerate_ground': degenerate_ground,
    }
