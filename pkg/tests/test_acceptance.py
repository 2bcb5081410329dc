import importlib.util

import pytest

from config import ROOT_DIR


def load_acceptance():
    path = ROOT_DIR / 'scripts' / 'run_acceptance.py'
    spec = importlib.util.spec_from_file_location('run_acceptance', path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


acceptance = load_acceptance()


@pytest.fixture(scope='module')
def reference_spectra():
    return acceptance.load_all()


@pytest.mark.slow
@pytest.mark.parametrize('number', sorted(acceptance.CRITERIA))
def test_criterion(reference_spectra, number):
    title, check = acceptance.CRITERIA[number]
    passed, detail = check(reference_spectra, True)
    assert passed, f"{title}: {detail}"


def test_energy_grid_stays_below_uniform_mean(reference_spectra):
    s = reference_spectra['three_level']
    grid = acceptance.energy_grid(s, 7)
    assert grid.max() < s.uniform_mean
    assert len(grid) == 7
