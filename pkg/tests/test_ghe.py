import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurstlab import (
    DegenerateSeriesError,
    GeneratorSpec,
    InsufficientDataError,
    InvalidParameterError,
    StructureFunction,
    derived_seed,
    estimate_ghe,
    exp_weights,
    generate,
    ghe_from_structure,
    multifractality_width,
    structure_function,
)


def fbm(n, hurst, seed):
    return generate(GeneratorSpec(kind="fbm", length=n, seed=seed, hurst=hurst))


def walk(n, seed):
    return generate(GeneratorSpec(kind="gaussian_walk", length=n, seed=seed))


class TestStructureFunction:
    def test_four_point_window_by_hand(self):
        sf = structure_function(np.array([0.0, 1.0, 1.0, 2.0]), q=1.0, tau_max=2)
        # increments at lag 1: |1|, |0|, |1| -> mean 2/3; magnitudes mean 1
        assert sf.values[0] == pytest.approx(2.0 / 3.0, abs=1e-15)

    def test_linear_drift_scales_ballistically(self):
        x = 0.37 * np.arange(200, dtype=float)
        est = estimate_ghe(x, q=1.0)
        assert est.h == pytest.approx(1.0, abs=1e-9)
        assert est.sigma < 1e-9

    def test_constant_window_is_degenerate(self):
        with pytest.raises(DegenerateSeriesError):
            structure_function(np.full(100, 5.0), q=1.0, tau_max=10)

    def test_window_too_short(self):
        with pytest.raises(InsufficientDataError):
            structure_function(np.arange(10.0), q=1.0, tau_max=9)

    def test_bad_parameters(self):
        x = np.arange(50.0)
        with pytest.raises(InvalidParameterError):
            structure_function(x, q=0.0, tau_max=5)
        with pytest.raises(InvalidParameterError):
            structure_function(x, q=1.0, tau_max=1)
        wv = exp_weights(49, 10.0)
        with pytest.raises(InvalidParameterError):
            structure_function(x, q=1.0, tau_max=5, weights=wv)

    def test_numerator_scales_like_gain_to_the_q(self):
        x = walk(400, seed=3).values
        for q in (1.0, 1.5):
            base = structure_function(x, q=q, tau_max=19, normalized=False)
            scaled = structure_function(-2.5 * x + 7.0, q=q, tau_max=19, normalized=False)
            assert np.allclose(scaled.values, 2.5**q * base.values, rtol=1e-12, atol=0)


class TestGheEstimate:
    def test_injected_exact_scaling_recovers_the_exponent(self):
        lags = np.arange(1, 20)
        sf = StructureFunction(q=1.0, lags=lags, values=lags**0.5, weighted=False)
        est = ghe_from_structure(sf)
        assert est.h == pytest.approx(0.5, abs=1e-12)
        assert est.sigma <= 1e-12
        assert len(est.per_tau_max) == 15

    def test_h_is_the_mean_of_the_per_tau_max_fits(self):
        est = estimate_ghe(walk(600, seed=5).values, q=1.5)
        assert est.h == pytest.approx(np.mean(est.per_tau_max), abs=1e-12)
        assert est.sigma == pytest.approx(np.std(est.per_tau_max), abs=1e-12)

    def test_gaussian_walk_ensemble_mean_is_one_half(self):
        hs = [estimate_ghe(walk(4096, derived_seed(101, i)).values).h for i in range(100)]
        assert np.mean(hs) == pytest.approx(0.5, abs=0.01)

    def test_fbm_ensemble_mean_tracks_the_target(self):
        hs = [
            estimate_ghe(fbm(4096, 0.7, derived_seed(202, i)).values).h
            for i in range(20)
        ]
        assert np.mean(hs) == pytest.approx(0.7, abs=0.03)

    def test_fbm_ordering_across_targets(self):
        means = []
        for j, hurst in enumerate((0.3, 0.5, 0.7)):
            hs = [
                estimate_ghe(fbm(2048, hurst, derived_seed(300 + j, i)).values).h
                for i in range(10)
            ]
            means.append(np.mean(hs))
        assert means[0] < means[1] < means[2]

    def test_time_reversal_shifts_h_less_than_sigma(self):
        deltas, sigmas = [], []
        for i in range(20):
            x = fbm(1024, 0.6, derived_seed(404, i)).values
            fwd = estimate_ghe(x)
            rev = estimate_ghe(x[::-1])
            deltas.append(abs(fwd.h - rev.h))
            sigmas.append(fwd.sigma)
        assert np.mean(deltas) < np.mean(sigmas)

    def test_huge_theta_matches_unweighted(self):
        x = fbm(750, 0.6, seed=7).values
        plain = estimate_ghe(x)
        heavy = estimate_ghe(x, weights=exp_weights(750, 1e6 * 750.0))
        assert abs(heavy.h - plain.h) <= 1e-6
        uniform = estimate_ghe(x, weights=exp_weights(750, math.inf))
        assert abs(uniform.h - plain.h) <= 1e-12

    def test_slope_is_shift_invariant_without_normalization(self):
        x = walk(500, seed=11).values
        a = estimate_ghe(x, normalized=False)
        b = estimate_ghe(3.0 * x - 40.0, normalized=False)
        assert b.h == pytest.approx(a.h, abs=1e-9)

    def test_normalized_fit_is_nearly_affine_invariant(self):
        x = fbm(1000, 0.6, seed=13).values
        a = estimate_ghe(x)
        b = estimate_ghe(2.0 * x + 1.0)
        assert b.h == pytest.approx(a.h, abs=1e-3)

    def test_vanishing_lags_are_excluded_not_fatal(self):
        # a two-state oscillation has zero increments at every even lag
        x = np.tile([0.0, 1.0], 30)
        est = estimate_ghe(x, tau_max_range=(5, 6, 7))
        assert set(est.excluded_lags) == {2, 4, 6}
        assert math.isfinite(est.h)

    def test_too_few_usable_lags_is_degenerate(self):
        x = np.tile([0.0, 1.0], 30)
        with pytest.raises(DegenerateSeriesError):
            estimate_ghe(x, tau_max_range=(3, 4))

    def test_tau_max_below_three_lags_is_invalid(self):
        x = walk(100, seed=2).values
        with pytest.raises(InvalidParameterError):
            estimate_ghe(x, tau_max_range=(2,))
        with pytest.raises(InvalidParameterError):
            estimate_ghe(x, tau_max_range=())

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**32), q=st.sampled_from([1.0, 1.5, 2.0]))
    def test_summary_invariants_hold_on_random_walks(self, seed, q):
        est = estimate_ghe(walk(256, seed).values, q=q, tau_max_range=range(5, 12))
        assert est.sigma >= 0
        assert abs(est.h - np.mean(est.per_tau_max)) <= 1e-12
        assert len(est.per_tau_max) == 7


class TestMultifractalityWidth:
    def test_exact_uniscaling_has_zero_width(self):
        lags = np.arange(1, 20)
        widths = []
        for q in (1.0, 1.5):
            sf = StructureFunction(q=q, lags=lags, values=lags ** (q * 0.5), weighted=False)
            widths.append(ghe_from_structure(sf).h)
        assert widths[0] - widths[1] == pytest.approx(0.0, abs=1e-12)

    def test_fbm_width_is_small(self):
        vals = [
            multifractality_width(fbm(4096, 0.6, derived_seed(505, i)).values)
            for i in range(10)
        ]
        assert abs(np.mean(vals)) < 0.03

    def test_levy_walk_width_is_large(self):
        vals = []
        for i in range(10):
            s = generate(
                GeneratorSpec(kind="levy_walk", length=4096, seed=derived_seed(606, i), alpha=1.5)
            )
            vals.append(multifractality_width(s.values, q1=1.0, q2=3.0))
        assert np.mean(vals) > 0.1

    def test_equal_orders_are_rejected(self):
        with pytest.raises(InvalidParameterError):
            multifractality_width(walk(300, 1).values, q1=1.0, q2=1.0)
