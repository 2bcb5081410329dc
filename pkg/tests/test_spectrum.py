import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from errors import (
    BetaTooSmall,
    DegenerateSpectrum,
    EmptySpectrum,
    IncompatibleSupport,
    NonFiniteLevel,
    NonMonotoneGenerator,
    SpectrumFileError,
    TooFewLevels,
)
from spectrum import (
    AffineBoundedTail,
    LinearTail,
    PowerTail,
    geometric_tails,
    load_spectrum,
    plan_truncation,
    shift_plus,
    spectrum_from_dict,
    validate,
)


class TestValidate:
    def test_oscillator(self, oscillator):
        assert not oscillator.is_finite
        assert oscillator.ground_multiplicity == 1
        np.testing.assert_array_equal(oscillator.levels(8), np.arange(8.0))
        assert oscillator.gap == 1.0

    def test_minimum_is_subtracted(self):
        s = validate([7, 5, 5])
        assert s.head == (0.0, 0.0, 2.0)
        assert s.shift == 5.0
        assert s.ground_multiplicity == 2

    def test_two_level(self, two_level):
        assert two_level.size == 2
        assert two_level.gap == 1.0
        assert two_level.uniform_mean == 0.5

    def test_empty(self):
        with pytest.raises(EmptySpectrum):
            validate([])

    def test_non_finite(self):
        with pytest.raises(NonFiniteLevel):
            validate([0.0, math.inf])
        with pytest.raises(NonFiniteLevel):
            validate([0.0, math.nan, 1.0])

    def test_level_too_large_for_double(self):
        with pytest.raises(NonFiniteLevel):
            validate([0, 10 ** 400])

    def test_degenerate_finite(self):
        with pytest.raises(DegenerateSpectrum):
            validate([3.0, 3.0])

    def test_generator_must_continue_upward(self):
        with pytest.raises(NonMonotoneGenerator):
            validate([0, 10], LinearTail(slope=1.0, offset=0.0))

    def test_generator_slope_positive(self):
        with pytest.raises(NonMonotoneGenerator):
            validate([0, 1], LinearTail(slope=0.0, offset=5.0))

    def test_power_exponent_below_one(self):
        with pytest.raises(NonMonotoneGenerator):
            validate([0, 1], PowerTail(exponent=0.5, scale=1.0))

    def test_affine_bounded_tail_below_bound(self):
        tail = AffineBoundedTail(rule=lambda i: np.sqrt(i) + 10.0, slope=1.0, offset=0.0)
        with pytest.raises(NonMonotoneGenerator):
            validate([0, 1], tail)

    def test_affine_bounded_tail(self):
        tail = AffineBoundedTail(rule=lambda i: 2.0 * i + np.sin(i) ** 2, slope=2.0, offset=0.0)
        s = validate([0, 1], tail)
        assert s.level(5) == pytest.approx(10.0 + math.sin(5.0) ** 2)

    def test_finite_levels_past_end(self, two_level):
        with pytest.raises(IncompatibleSupport):
            two_level.levels(3)

    @given(st.lists(st.floats(-1e6, 1e6), min_size=2, max_size=20))
    @settings(max_examples=100, deadline=None)
    def test_grounded_and_sorted(self, raw):
        if max(raw) == min(raw):
            return
        s = validate(raw)
        assert s.head[0] == 0.0
        assert all(b >= a for a, b in zip(s.head, s.head[1:]))


class TestShiftPlus:
    def test_oscillator(self, oscillator):
        np.testing.assert_array_equal(shift_plus(oscillator).levels(5), np.arange(1.0, 6.0))

    def test_not_regrounded(self, two_level):
        shifted = shift_plus(two_level)
        assert shifted.head == (1.0,)
        assert shifted.minimum == 1.0

    def test_degenerate_ground(self):
        assert shift_plus(validate([0, 0, 2])).head == (0.0, 2.0)

    def test_twice_starts_at_level_two(self, oscillator, power_law):
        twice = shift_plus(shift_plus(oscillator))
        np.testing.assert_array_equal(twice.levels(5), np.arange(2.0, 7.0))
        assert twice.minimum == 2.0
        assert twice.start == 2
        assert twice.ground_multiplicity == 1
        np.testing.assert_allclose(shift_plus(shift_plus(power_law)).levels(4), [4.0, 9.0, 16.0, 25.0])

    def test_too_few_levels(self, two_level):
        with pytest.raises(TooFewLevels):
            shift_plus(shift_plus(two_level))

    def test_tail_follows_shift(self, power_law):
        shifted = shift_plus(power_law)
        np.testing.assert_allclose(shifted.levels(6), [1.0, 4.0, 9.0, 16.0, 25.0, 36.0])


class TestTruncation:
    def test_oscillator_ln2(self, oscillator):
        plan = plan_truncation(oscillator, math.log(2.0), 1e-12)
        assert 41 <= plan.cutoff_index <= 50
        assert plan.partition_tail < 1e-12
        assert plan.energy_tail < 1e-12

    def test_partition_tail_matches_direct_sum(self, oscillator):
        beta = math.log(2.0)
        plan = plan_truncation(oscillator, beta, 1e-12)
        direct = np.exp(-beta * np.arange(plan.cutoff_index, plan.cutoff_index + 2000)).sum()
        assert direct <= plan.partition_tail * (1 + 1e-12)

    def test_cold_oscillator(self, oscillator):
        assert plan_truncation(oscillator, 10.0, 1e-12).cutoff_index <= 4

    def test_finite(self, two_level):
        plan = plan_truncation(two_level, 3.7, 1e-12)
        assert plan.cutoff_index == 2
        assert plan.tail_bound == 0.0

    def test_beta_floor(self, oscillator):
        with pytest.raises(BetaTooSmall):
            plan_truncation(oscillator, 1e-13)

    def test_power_tail_certified(self, power_law):
        beta = 0.05
        plan = plan_truncation(power_law, beta, 1e-12)
        n = plan.cutoff_index
        direct = np.exp(-beta * np.arange(n, n + 200) ** 2.0).sum()
        assert direct <= plan.partition_tail * (1 + 1e-12) + 1e-300

    def test_energy_tail_needs_decreasing_region(self, oscillator):
        # l(cutoff) = 4 < 1 / beta = 10
        partition_tail, energy_tail = geometric_tails(oscillator, 0.1, 4)
        assert math.isfinite(partition_tail)
        assert energy_tail == math.inf

    @pytest.mark.parametrize('name', ['oscillator', 'power_law'])
    @given(beta=st.floats(0.05, 5.0), exponent=st.floats(-14.0, -6.0))
    @settings(max_examples=50, deadline=None)
    def test_tails_bound_direct_sums(self, all_spectra, name, beta, exponent):
        s = all_spectra[name]
        plan = plan_truncation(s, beta, 10.0 ** exponent)
        n = plan.cutoff_index
        levels = s.levels(10 * n)[n:]
        weights = np.exp(-beta * levels)
        assert weights.sum() <= plan.partition_tail * (1 + 1e-9) + 1e-300
        assert np.dot(levels, weights) <= plan.energy_tail * (1 + 1e-9) + 1e-300

    @given(st.floats(0.01, 20.0))
    @settings(max_examples=50, deadline=None)
    def test_cutoff_shrinks_as_beta_grows(self, beta):
        s = validate([0, 1], LinearTail(1.0, 0.0))
        assert plan_truncation(s, 2 * beta).cutoff_index <= plan_truncation(s, beta).cutoff_index


class TestLoader:
    def test_round_trip_dict(self, power_law):
        again = spectrum_from_dict(power_law.to_dict())
        np.testing.assert_array_equal(again.levels(10), power_law.levels(10))

    def test_name_defaults_to_stem(self, tmp_path):
        path = tmp_path / 'ladder.json'
        path.write_text(json.dumps({'levels': [0, 2, 4]}))
        assert load_spectrum(path).name == 'ladder'

    def test_invalid_json(self, tmp_path):
        path = tmp_path / 'broken.json'
        path.write_text('{"levels": [0, 1')
        with pytest.raises(SpectrumFileError):
            load_spectrum(path)

    @pytest.mark.parametrize('document', [
        [0, 1],
        {'levels': 'nope'},
        {'levels': [0, True]},
        {'levels': [0, 1], 'generator': {'kind': 'cubic'}},
        {'levels': [0, 1], 'generator': {'kind': 'linear', 'slope': 'x', 'offset': 0}},
        {'levels': [0, 1], 'name': 7},
        {'levels': [0, 1], 'generator': {'kind': 'linear', 'slope': 10 ** 400, 'offset': 0}},
    ])
    def test_malformed_documents(self, document):
        with pytest.raises(SpectrumFileError):
            spectrum_from_dict(document)
