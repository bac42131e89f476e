"""Exact and Monte Carlo oracle layer.

The two exact oracles (DP over counts, full outcome enumeration) are
deliberately independent codepaths; several tests here pin them against
each other and against hand arithmetic.
"""

import math

import numpy as np
import pytest

from subgauss import (
    CapExceededError,
    DependenceError,
    DistributionTable,
    DomainError,
    WeightedIndicatorSum,
    exact_sum_log_mgf,
    exact_tail,
    exhaustive_outcome_table,
    exhaustive_weighted_tail,
    log_mgf_values,
    monte_carlo_tail,
    poisson_binomial_table,
    sum_log_mgf_curve,
    tail_curve,
    wilson_interval,
)

WILSON_UPPER_0_100 = 0.062220687715822974  # z = 2.5758293035489004


class TestDistributionTable:
    def test_rejects_unsorted_support(self):
        with pytest.raises(DomainError):
            DistributionTable(np.array([1.0, 0.0]), np.array([0.5, 0.5]))

    def test_rejects_mass_not_one(self):
        with pytest.raises(DomainError):
            DistributionTable(np.array([-0.5, 0.5]), np.array([0.3, 0.3]))

    def test_rejects_noncentered(self):
        with pytest.raises(DomainError):
            DistributionTable(np.array([0.0, 1.0]), np.array([0.5, 0.5]))

    def test_arrays_read_only(self):
        t = poisson_binomial_table([0.5, 0.5])
        with pytest.raises(ValueError):
            t.masses[0] = 1.0


class TestPoissonBinomialDp:
    def test_fair_four_coins_binomial_exact(self):
        # C(4,k)/16 and half-integer support, all exactly representable
        t = poisson_binomial_table([0.5] * 4)
        assert np.array_equal(t.support, np.array([-2.0, -1.0, 0.0, 1.0, 2.0]))
        assert np.array_equal(
            t.masses, np.array([1.0, 4.0, 6.0, 4.0, 1.0]) / 16.0
        )

    def test_two_mixed_probs_hand_arithmetic(self):
        t = poisson_binomial_table([0.2, 0.5])
        assert t.masses == pytest.approx([0.4, 0.5, 0.1], rel=1e-15)
        assert t.support == pytest.approx([-0.7, 0.3, 1.3], rel=1e-15)

    def test_single_term(self):
        t = poisson_binomial_table([0.3])
        assert t.support == pytest.approx([-0.3, 0.7], rel=1e-15)
        assert t.masses == pytest.approx([0.7, 0.3], rel=1e-15)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            poisson_binomial_table([0.5] * 7, cap=6)

    def test_large_n_mass_conserved(self):
        t = poisson_binomial_table(np.linspace(0.01, 0.99, 2000))
        assert abs(t.total_mass() - 1.0) < 1e-12
        assert abs(t.mean()) < 1e-10


class TestExactTail:
    def test_strict_vs_weak_at_atom(self):
        t = poisson_binomial_table([0.5] * 4)
        # P(S > 1) = 1/16, P(S >= 1) = 5/16
        assert exact_tail(t, 1.0, side="upper", strict=True) == 1.0 / 16.0
        assert exact_tail(t, 1.0, side="upper", strict=False) == 5.0 / 16.0

    def test_lower_side_is_negated_threshold(self):
        t = poisson_binomial_table([0.5] * 4)
        # P(S < -1) = 1/16
        assert exact_tail(t, 1.0, side="lower") == 1.0 / 16.0

    def test_max_both(self):
        t = exhaustive_outcome_table(WeightedIndicatorSum([1.0, 2.0], [0.1, 0.3]))
        x = 0.5
        up = exact_tail(t, x, side="upper")
        lo = exact_tail(t, x, side="lower")
        assert exact_tail(t, x, side="max_both") == max(up, lo)

    def test_rejects_nan(self):
        t = poisson_binomial_table([0.5])
        with pytest.raises(DomainError):
            exact_tail(t, math.nan)

    def test_rejects_unknown_side(self):
        t = poisson_binomial_table([0.5])
        with pytest.raises(DomainError):
            exact_tail(t, 0.0, side="both")

    def test_beyond_support_is_zero(self):
        t = poisson_binomial_table([0.5] * 4)
        assert exact_tail(t, 99.0, side="max_both") == 0.0

    def test_curve_matches_pointwise(self):
        t = poisson_binomial_table(np.linspace(0.1, 0.9, 30))
        xs = np.linspace(0.0, 10.0, 101)
        for side in ("upper", "lower", "max_both"):
            curve = tail_curve(t, xs, side=side)
            for x, c in zip(xs, curve):
                assert abs(c - exact_tail(t, float(x), side=side)) < 5e-15

    def test_curve_weak_inequality(self):
        t = poisson_binomial_table([0.5] * 4)
        got = tail_curve(t, np.array([1.0]), side="upper", strict=False)
        assert got[0] == 5.0 / 16.0


class TestEnumeration:
    def test_matches_dp_for_unit_coeffs(self):
        ps = [0.12, 0.5, 0.77, 0.3]
        t_dp = poisson_binomial_table(ps)
        t_en = exhaustive_outcome_table(WeightedIndicatorSum([1.0] * 4, ps))
        assert np.array_equal(t_dp.support, t_en.support)
        assert np.max(np.abs(t_dp.masses - t_en.masses)) < 1e-15

    def test_weighted_two_terms_hand_arithmetic(self):
        # S = 2 eta(0.5) - eta(0.5): four equally likely values
        s = WeightedIndicatorSum([2.0, -1.0], [0.5, 0.5])
        t = exhaustive_outcome_table(s)
        assert t.support == pytest.approx([-1.5, -0.5, 0.5, 1.5], rel=1e-15)
        assert t.masses == pytest.approx([0.25] * 4, rel=1e-15)

    def test_merges_coinciding_outcomes(self):
        # +-1 coin flips: S in {-2, 0, 2} with the middle atom doubled
        s = WeightedIndicatorSum([2.0, 2.0], [0.5, 0.5])
        t = exhaustive_outcome_table(s)
        assert t.n_atoms == 3
        assert t.masses == pytest.approx([0.25, 0.5, 0.25], rel=1e-15)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            exhaustive_outcome_table(WeightedIndicatorSum.iid(21, 0.5))

    def test_requires_independence(self):
        s = WeightedIndicatorSum([1.0, 1.0], [0.5, 0.5], independent=False)
        with pytest.raises(DependenceError):
            exhaustive_outcome_table(s)

    def test_weighted_tail_shortcut(self):
        s = WeightedIndicatorSum([1.5, -0.5, 1.0], [0.2, 0.6, 0.4])
        t = exhaustive_outcome_table(s)
        for x in (0.0, 0.3, 1.1):
            assert exhaustive_weighted_tail(s, x) == exact_tail(t, x)


class TestWilson:
    def test_frozen_upper_at_zero_successes(self):
        lo, hi = wilson_interval(0, 100)
        assert lo == 0.0
        assert math.isclose(hi, WILSON_UPPER_0_100, rel_tol=1e-14)

    def test_boundary_counts(self):
        assert wilson_interval(100, 100)[1] == 1.0

    def test_symmetric_at_half(self):
        lo, hi = wilson_interval(50, 100)
        assert lo == pytest.approx(1.0 - hi, abs=1e-15)

    def test_rejects_bad_counts(self):
        with pytest.raises(DomainError):
            wilson_interval(5, 4)
        with pytest.raises(DomainError):
            wilson_interval(-1, 4)


class TestMonteCarlo:
    def test_bit_reproducible(self):
        s = WeightedIndicatorSum.iid(6, 0.3)
        a = monte_carlo_tail(s, 0.8, 150_000, seed=42)
        b = monte_carlo_tail(s, 0.8, 150_000, seed=42)
        assert a == b

    def test_seed_changes_estimate(self):
        s = WeightedIndicatorSum.iid(6, 0.3)
        a = monte_carlo_tail(s, 0.8, 10_000, seed=1)
        b = monte_carlo_tail(s, 0.8, 10_000, seed=2)
        assert a.point != b.point

    def test_covers_exact_value(self):
        s = WeightedIndicatorSum([1.0, -2.0, 0.5, 1.0], [0.2, 0.4, 0.6, 0.8])
        exact = exhaustive_weighted_tail(s, 0.9)
        est = monte_carlo_tail(s, 0.9, 200_000, seed=0)
        assert est.covers(exact)
        assert est.n_samples == 200_000

    def test_side_selection(self):
        s = WeightedIndicatorSum.iid(5, 0.1)
        up = monte_carlo_tail(s, 0.8, 50_000, seed=3, side="upper")
        mx = monte_carlo_tail(s, 0.8, 50_000, seed=3, side="max_both")
        assert mx.point >= up.point

    def test_requires_independence(self):
        s = WeightedIndicatorSum([1.0, 1.0], [0.5, 0.5], independent=False)
        with pytest.raises(DependenceError):
            monte_carlo_tail(s, 0.5, 1000, seed=0)

    def test_validates_sample_count_and_seed(self):
        s = WeightedIndicatorSum.iid(2, 0.5)
        with pytest.raises(DomainError):
            monte_carlo_tail(s, 0.5, 99, seed=0)
        with pytest.raises(DomainError):
            monte_carlo_tail(s, 0.5, 1000, seed=-1)


class TestSumLogMgf:
    def test_matches_per_term_sum(self):
        s = WeightedIndicatorSum([1.5, -0.5, 1.0], [0.2, 0.6, 0.4])
        lam = 1.7
        expected = math.fsum(
            float(log_mgf_values(p, c * lam)) for c, p in zip(s.coeffs, s.p_values)
        )
        assert float(exact_sum_log_mgf(s, lam)) == pytest.approx(expected, rel=1e-15)

    def test_iid_grouping_matches_explicit(self):
        # grouped path must agree with term-by-term to the last ulp scale
        s = WeightedIndicatorSum.iid(1000, 0.3)
        lam = 0.9
        got = float(exact_sum_log_mgf(s, lam))
        assert got == pytest.approx(1000.0 * float(log_mgf_values(0.3, lam)), rel=1e-15)

    def test_requires_independence(self):
        s = WeightedIndicatorSum([1.0, 1.0], [0.5, 0.5], independent=False)
        with pytest.raises(DependenceError):
            exact_sum_log_mgf(s, 1.0)

    def test_curve_scaling(self):
        # curve of S/sqrt(n) at t equals curve of S at t/sqrt(n)
        s = WeightedIndicatorSum.iid(4, 0.3)
        c_scaled = sum_log_mgf_curve(s, scale=0.5)
        c_plain = sum_log_mgf_curve(s)
        assert c_scaled.at(2.0) == pytest.approx(c_plain.at(1.0), rel=1e-15)

    def test_curve_variance_declared(self):
        s = WeightedIndicatorSum([2.0, 1.0], [0.3, 0.5])
        c = sum_log_mgf_curve(s)
        assert c.variance == pytest.approx(4 * 0.21 + 0.25, rel=1e-15)

    def test_curve_vanishes_at_zero(self):
        s = WeightedIndicatorSum.iid(50, 0.2)
        assert sum_log_mgf_curve(s).at(0.0) == 0.0
