import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bounds import kappa
from conftest import LN2, g, h
from errors import DomainError, IncompatibleSupport, InvalidState
from extremal import (
    Distribution,
    JointDistribution,
    conditional_entropy,
    expected_f,
    expected_f_error,
    extremal_joint,
    extremal_pair,
    max_entropy_distribution,
    shannon_entropy,
    shannon_entropy_error,
    shifted_max_entropy_distribution,
    tv_distance,
    tv_distance_error,
)


class TestDistribution:
    def test_from_weights_normalizes(self):
        d = Distribution.from_weights([1, 3])
        np.testing.assert_allclose(d.probs, [0.25, 0.75])

    def test_rejects_bad_mass(self):
        with pytest.raises(InvalidState):
            Distribution(np.array([0.5, 0.6]))
        with pytest.raises(InvalidState):
            Distribution.from_weights([1.0, -0.5])
        with pytest.raises(InvalidState):
            Distribution.from_weights([])

    def test_rejects_large_tail(self):
        with pytest.raises(InvalidState):
            Distribution.from_weights([1.0], certified_tail=1e-6)

    def test_read_only(self):
        d = Distribution.from_weights([1, 1])
        with pytest.raises(ValueError):
            d.probs[0] = 1.0

    def test_offset_support(self):
        d = Distribution.from_weights([1, 1], support_offset=2)
        np.testing.assert_array_equal(d.support, [2, 3])
        np.testing.assert_allclose(d.dense(), [0, 0, 0.5, 0.5])
        assert d.to_list() == [0.0, 0.0, 0.5, 0.5]

    def test_frame(self):
        frame = Distribution.from_weights([3, 1]).to_frame()
        assert list(frame.columns) == ['index', 'probability']
        assert frame['probability'].tolist() == [0.75, 0.25]

    def test_joint_marginals(self):
        j = JointDistribution.from_weights([[0.1, 0.2], [0.3, 0.4]])
        p_x, p_y = j.marginals()
        np.testing.assert_allclose(p_x.probs, [0.3, 0.7])
        np.testing.assert_allclose(p_y.probs, [0.4, 0.6])
        assert j.error_probability() == pytest.approx(0.5)


class TestMeasures:
    def test_entropy(self):
        assert shannon_entropy(Distribution.point_mass(3)) == 0.0
        assert shannon_entropy(Distribution.from_weights([1, 1]), 'nats') == pytest.approx(LN2)
        assert shannon_entropy(Distribution.from_weights([1, 1]), 'bits') == pytest.approx(1.0)

    def test_conditional_entropy(self):
        assert conditional_entropy(JointDistribution.from_weights([[1.0]])) == 0.0
        uniform = JointDistribution.from_weights(np.full((2, 2), 0.25))
        assert conditional_entropy(uniform, 'nats') == pytest.approx(LN2)

    def test_conditional_entropy_of_copy_is_zero(self):
        assert conditional_entropy(JointDistribution.from_weights(np.diag([0.2, 0.3, 0.5]))) == pytest.approx(0.0)

    def test_tv(self):
        d = Distribution.from_weights([1, 2, 3])
        assert tv_distance(d, d) == 0.0
        assert tv_distance(Distribution.point_mass(0), Distribution.point_mass(1)) == 1.0

    def test_expected_f(self, oscillator, two_level):
        assert expected_f(Distribution.point_mass(0), oscillator) == 0.0
        assert expected_f(Distribution.from_weights([1, 1], support_offset=2), oscillator) == 2.5
        with pytest.raises(IncompatibleSupport):
            expected_f(Distribution.from_weights([1, 1, 1]), two_level)

    def test_error_bars(self):
        d = Distribution.from_weights([1, 1], certified_tail=1e-13, tail_energy=2e-12)
        assert shannon_entropy_error(d, 'nats') == pytest.approx(-1e-13 * math.log(1e-13))
        assert tv_distance_error(d, Distribution.point_mass(0)) == pytest.approx(5e-14)
        assert expected_f_error(d) == 2e-12

    @given(st.lists(st.floats(0.0, 1.0, allow_subnormal=False), min_size=1, max_size=30),
           st.lists(st.floats(0.0, 1.0, allow_subnormal=False), min_size=1, max_size=30))
    @settings(max_examples=100, deadline=None)
    def test_tv_bounded_and_symmetric(self, a, b):
        if sum(a) <= 0 or sum(b) <= 0:
            return
        p, q = Distribution.from_weights(a), Distribution.from_weights(b)
        distance = tv_distance(p, q)
        assert 0.0 <= distance <= 1.0 + 1e-12
        assert distance == pytest.approx(tv_distance(q, p))


class TestWitnesses:
    def test_max_entropy_oscillator(self, oscillator):
        d = max_entropy_distribution(oscillator, 1.0)
        np.testing.assert_allclose(d.probs[:5], 0.5 ** np.arange(1, 6), rtol=1e-9)
        assert shannon_entropy(d, 'nats') == pytest.approx(2 * LN2, abs=1e-9)
        assert expected_f(d, oscillator) == pytest.approx(1.0, abs=1e-9)
        assert d.certified_tail <= 1e-12

    def test_max_entropy_two_level(self, two_level):
        np.testing.assert_allclose(max_entropy_distribution(two_level, 0.25).probs, [0.75, 0.25], atol=1e-9)

    def test_max_entropy_low_energy(self, oscillator):
        assert max_entropy_distribution(oscillator, 0.01).probs[0] == pytest.approx(1 / 1.01, abs=1e-9)

    def test_shifted_at_gap_is_point_mass(self, oscillator):
        d = shifted_max_entropy_distribution(oscillator, 1.0)
        assert d.support_offset == 1
        np.testing.assert_array_equal(d.probs, [1.0])

    def test_pair_sub_threshold(self, oscillator):
        rho, sigma = extremal_pair(oscillator, 1.0, 0.25)
        gap = shannon_entropy(rho, 'nats') - shannon_entropy(sigma, 'nats')
        assert gap == pytest.approx(2 * h(0.25), abs=1e-9)
        assert tv_distance(rho, sigma) == pytest.approx(0.25, abs=1e-12)
        assert expected_f(rho, oscillator) == pytest.approx(1.0, abs=1e-9)

    def test_pair_saturated(self, oscillator):
        rho, sigma = extremal_pair(oscillator, 1.0, 0.9)
        assert shannon_entropy(rho, 'nats') == pytest.approx(g(1.0), abs=1e-9)
        assert tv_distance(rho, sigma) == pytest.approx(0.5, abs=1e-9)

    def test_pair_zero_distance(self, power_law):
        rho, sigma = extremal_pair(power_law, 2.0, 0.0)
        assert tv_distance(rho, sigma) == 0.0
        assert shannon_entropy(rho) == 0.0

    def test_pair_energy(self, oscillator):
        rho, _ = extremal_pair(oscillator, 2.0, 0.5)
        assert expected_f(rho, oscillator) == pytest.approx(2.0, abs=1e-9)

    def test_pair_domain(self, oscillator):
        with pytest.raises(DomainError):
            extremal_pair(oscillator, 1.0, -0.1)

    @pytest.mark.parametrize('name', ['oscillator', 'two_level', 'three_level', 'power_law', 'degenerate_ground'])
    def test_pair_attains_bound(self, all_spectra, name):
        s = all_spectra[name]
        for E in (0.2, 0.45):
            for eps in (0.05, 0.2, 0.5, 0.95):
                rho, sigma = extremal_pair(s, E, eps)
                achieved = shannon_entropy(rho, 'nats') - shannon_entropy(sigma, 'nats')
                assert achieved == pytest.approx(kappa(s, E, eps, base='nats').value, abs=1e-7)
                assert tv_distance(rho, sigma) <= eps + 1e-8
                assert expected_f(rho, s) <= E + 1e-8

    def test_joint_sub_threshold(self, oscillator):
        j = extremal_joint(oscillator, 1.0, 0.25)
        assert conditional_entropy(j, 'nats') == pytest.approx(1.1246703, abs=1e-7)
        assert j.error_probability() == pytest.approx(0.25, abs=1e-12)

    def test_joint_full_distance(self, oscillator):
        j = extremal_joint(oscillator, 1.0, 1.0)
        assert j.error_probability() == pytest.approx(0.5, abs=1e-9)
        assert conditional_entropy(j, 'nats') == pytest.approx(g(1.0), abs=1e-9)

    def test_joint_small_distance(self, oscillator):
        j = extremal_joint(oscillator, 1.0, 1e-3)
        assert j.probs[0, 0] == pytest.approx(1.0 - 1e-3, abs=1e-12)
        assert conditional_entropy(j, 'nats') == pytest.approx(
            kappa(oscillator, 1.0, 1e-3, base='nats').value, abs=1e-8)
