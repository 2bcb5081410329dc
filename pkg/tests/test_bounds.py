import math

import pytest
from hypothesis import given, settings, strategies as st

from bounds import (
    Branch,
    argmax_G,
    binary_entropy,
    capacity_F,
    capacity_F_plus,
    continuity_bound,
    fano_bound,
    g_profile,
    golden_section_max,
    identity_residual,
    kappa,
    oscillator_g,
    oscillator_reference,
    threshold_a,
)
from conftest import LN2, g, h
from errors import ArgumentBelowGap, DomainError
from spectrum import LinearTail, validate


class TestBinaryEntropy:
    @pytest.mark.parametrize('eps, expected', [
        (0.0, 0.0),
        (1.0, 0.0),
        (0.5, LN2),
        (0.25, 0.25 * math.log(4.0) + 0.75 * math.log(4.0 / 3.0)),
    ])
    def test_values(self, eps, expected):
        assert binary_entropy(eps, 'nats') == pytest.approx(expected, abs=1e-15)

    def test_quarter_numeric(self):
        assert binary_entropy(0.25, 'nats') == pytest.approx(0.5623351, abs=1e-7)

    def test_domain(self):
        with pytest.raises(DomainError):
            binary_entropy(1.5)

    def test_bits(self):
        assert binary_entropy(0.5, 'bits') == pytest.approx(1.0)


class TestThreshold:
    @pytest.mark.parametrize('E, expected', [(1.0, 0.5), (3.0, 0.75), (0.01, 0.01 / 1.01)])
    def test_oscillator(self, oscillator, E, expected):
        assert threshold_a(oscillator, E) == pytest.approx(expected, abs=1e-9)

    def test_two_level_equals_energy(self, two_level):
        assert threshold_a(two_level, 0.3) == pytest.approx(0.3, abs=1e-9)

    @given(st.floats(0.01, 0.99))
    @settings(max_examples=50, deadline=None)
    def test_gap_inequality(self, fraction):
        s = validate([0, 1, 5])
        E = fraction * s.gap
        assert threshold_a(s, E) <= E / s.gap + 1e-10


class TestCapacities:
    def test_F_is_gibbs_entropy(self, oscillator):
        assert capacity_F(oscillator, 1.0, base='nats') == pytest.approx(2 * LN2, abs=1e-9)

    @pytest.mark.parametrize('E', [2.0, 4.0, 10.0])
    def test_F_plus_oscillator(self, oscillator, E):
        assert capacity_F_plus(oscillator, E, base='nats') == pytest.approx(E * h(1.0 / E), abs=1e-9)

    def test_F_plus_four_numeric(self, oscillator):
        assert capacity_F_plus(oscillator, 4.0, base='nats') == pytest.approx(2.2493406, abs=1e-7)

    def test_F_plus_at_gap(self, oscillator):
        assert capacity_F_plus(oscillator, 1.0) == 0.0

    def test_F_plus_at_degenerate_gap(self):
        s = validate([0, 1, 1, 4])
        assert capacity_F_plus(s, 1.0, base='nats') == pytest.approx(LN2)

    def test_F_plus_just_above_gap(self, oscillator):
        assert capacity_F_plus(oscillator, 1.001, base='nats') == pytest.approx(g(1e-3), abs=1e-9)

    def test_uncapped_default_on_finite_spectrum(self, three_level):
        assert threshold_a(three_level, 3.0) > threshold_a(three_level, 3.0, capped=True)
        assert threshold_a(three_level, 3.0, capped=True) == pytest.approx(2.0 / 3.0)
        assert kappa(three_level, 3.0, 0.5).threshold_a == pytest.approx(2.0 / 3.0)

    def test_F_plus_below_gap(self, oscillator):
        with pytest.raises(ArgumentBelowGap):
            capacity_F_plus(oscillator, 0.5)


class TestKappa:
    def test_sub_threshold(self, oscillator):
        result = kappa(oscillator, 1.0, 0.25, base='nats')
        assert result.branch is Branch.SUB_THRESHOLD
        assert result.value == pytest.approx(2 * h(0.25), abs=1e-9)
        assert result.value == pytest.approx(1.1246703, abs=1e-7)
        assert result.threshold_a == pytest.approx(0.5, abs=1e-9)
        assert result.f_plus_argument == pytest.approx(4.0)

    def test_saturated(self, oscillator):
        result = kappa(oscillator, 1.0, 0.9, base='nats')
        assert result.branch is Branch.SATURATED
        assert result.value == pytest.approx(2 * LN2, abs=1e-9)
        assert result.f_plus_argument is None

    def test_zero_distance(self, all_spectra):
        for s in all_spectra.values():
            assert kappa(s, 0.4, 0.0).value == 0.0

    def test_boundary_tie_is_sub_threshold(self, oscillator):
        a = threshold_a(oscillator, 3.0)
        result = kappa(oscillator, 3.0, a, base='nats')
        assert result.branch is Branch.SUB_THRESHOLD
        assert result.value == pytest.approx(g(3.0), abs=1e-8)

    def test_finite_spectrum_above_uniform_mean(self, three_level):
        result = kappa(three_level, 3.0, 0.9, base='nats')
        assert result.branch is Branch.SATURATED
        assert result.value == pytest.approx(math.log(3.0))

    def test_bits_rows_carry_base(self, oscillator):
        row = kappa(oscillator, 1.0, 0.25, base='bits').to_dict()
        assert row['log_base'] == 'bits'
        assert row['kappa'] == pytest.approx(2 * h(0.25) / LN2, abs=1e-9)
        assert row['branch'] == 'SubThreshold'

    def test_domain(self, oscillator):
        with pytest.raises(DomainError):
            kappa(oscillator, 1.0, 1.2)
        with pytest.raises(DomainError):
            kappa(oscillator, -1.0, 0.2)

    def test_aliases(self):
        assert fano_bound is kappa
        assert continuity_bound is kappa

    def test_vanishes_along_dyadic_grid(self, oscillator):
        values = [kappa(oscillator, 1.0, 2.0 ** -k).value for k in range(1, 31)]
        assert all(b < a for a, b in zip(values, values[1:]))
        assert values[-1] < 1e-7

    def test_continuous_at_threshold(self, all_spectra):
        for s in all_spectra.values():
            E = 0.4
            a = threshold_a(s, E, capped=True)
            below = kappa(s, E, a).value
            above = kappa(s, E, a * (1 + 1e-9)).value
            assert above == pytest.approx(below, abs=1e-6)

    @given(st.floats(0.05, 20.0), st.floats(1e-6, 1.0), st.floats(1e-6, 1.0))
    @settings(max_examples=60, deadline=None)
    def test_non_decreasing_in_eps(self, E, x, y):
        s = validate([0, 1], LinearTail(1.0, 0.0))
        lo, hi = sorted((x, y))
        assert kappa(s, E, lo).value <= kappa(s, E, hi).value + 1e-9

    @given(st.floats(1e-3, 20.0), st.floats(1e-3, 20.0), st.floats(1e-6, 1.0))
    @settings(max_examples=60, deadline=None)
    def test_non_decreasing_in_energy(self, x, y, eps):
        s = validate([0, 1], LinearTail(1.0, 0.0))
        lo, hi = sorted((x, y))
        assert kappa(s, lo, eps).value <= kappa(s, hi, eps).value + 1e-9

    @given(st.floats(0.05, 1.95), st.floats(0.05, 1.95), st.floats(1e-6, 1.0))
    @settings(max_examples=40, deadline=None)
    def test_non_decreasing_in_energy_finite(self, x, y, eps):
        s = validate([0, 1, 5])
        lo, hi = sorted((x, y))
        assert kappa(s, lo, eps).value <= kappa(s, hi, eps).value + 1e-9

    @given(st.floats(0.05, 20.0), st.floats(0.001, 1.0))
    @settings(max_examples=60, deadline=None)
    def test_matches_oscillator_closed_form(self, E, eps):
        s = validate([0, 1], LinearTail(1.0, 0.0))
        reference = oscillator_reference(E, eps, base='nats')
        assert kappa(s, E, eps, base='nats').value == pytest.approx(reference.kappa, abs=1e-8)


class TestProfile:
    def test_identity_point(self, oscillator):
        assert g_profile(oscillator, 1.0, 0.5, base='nats') == pytest.approx(2 * LN2, abs=1e-9)

    def test_quarter(self, oscillator):
        assert g_profile(oscillator, 1.0, 0.25, base='nats') == pytest.approx(1.1246703, abs=1e-7)

    def test_two_level_point_mass(self, two_level):
        assert g_profile(two_level, 0.3, 0.3, base='nats') == pytest.approx(h(0.3), abs=1e-9)

    def test_domain(self, oscillator):
        with pytest.raises(DomainError):
            g_profile(oscillator, 0.5, 0.75)
        with pytest.raises(DomainError):
            g_profile(oscillator, 0.5, 0.0)

    @pytest.mark.parametrize('E, expected', [(1.0, 0.5), (3.0, 0.75)])
    def test_argmax_oscillator(self, oscillator, E, expected):
        assert argmax_G(oscillator, E) == pytest.approx(expected, abs=1e-6)

    def test_argmax_two_level(self, two_level):
        assert argmax_G(two_level, 0.3) == pytest.approx(0.3, abs=1e-6)

    @pytest.mark.parametrize('E', [1.0, 7.0])
    def test_identity_oscillator(self, oscillator, E):
        assert identity_residual(oscillator, E, base='nats') < 1e-9

    def test_identity_power_law(self, power_law):
        assert identity_residual(power_law, 2.0, base='nats') < 1e-8

    def test_identity_all_spectra(self, all_spectra):
        for s in all_spectra.values():
            for E in (0.1, 0.4, 0.9):
                assert identity_residual(s, E, base='nats') < 1e-8

    def test_golden_section(self):
        location = golden_section_max(lambda x: -(x - 0.3) ** 2, 0.0, 1.0)
        assert location == pytest.approx(0.3, abs=1e-7)


class TestOscillatorReference:
    def test_unit_energy(self):
        ref = oscillator_reference(1.0, base='nats')
        assert ref.g == pytest.approx(2 * LN2)
        assert ref.Z == 2.0
        assert ref.a == 0.5
        assert ref.kappa is None

    def test_boundary_tie(self):
        assert oscillator_reference(3.0, 0.75, base='nats').kappa == pytest.approx(oscillator_g(3.0))

    def test_quarter(self):
        assert oscillator_reference(1.0, 0.25, base='nats').kappa == pytest.approx(2 * h(0.25))

    def test_domain(self):
        with pytest.raises(DomainError):
            oscillator_reference(0.0)
