import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from windassess import (
    DegenerateDataError,
    DomainError,
    InsufficientDataError,
    WeibullModel,
    arithmetic_mean,
    fit_mle,
    log_likelihood,
    validate_fit,
)
from windassess.estimation import SolverOptions, clean_speeds, validate_means


def _fd_gradient(speeds, k, c):
    hk, hc = 1e-6 * k, 1e-6 * c
    dk = (log_likelihood(WeibullModel(k + hk, c), speeds) - log_likelihood(WeibullModel(k - hk, c), speeds)) / (2 * hk)
    dc = (log_likelihood(WeibullModel(k, c + hc), speeds) - log_likelihood(WeibullModel(k, c - hc), speeds)) / (2 * hc)
    return dk / len(speeds), dc / len(speeds)


class TestLogLikelihood:
    def test_unit_exponential(self):
        assert log_likelihood(WeibullModel(1, 1), [1.0]) == pytest.approx(-1.0, rel=1e-15)

    def test_two_copies_at_scale(self):
        expected = 2 * math.log((2 / 6) * math.exp(-1))
        assert log_likelihood(WeibullModel(2, 6), [6.0, 6.0]) == pytest.approx(expected, rel=1e-14)
        assert expected == pytest.approx(-4.1972, abs=1e-4)

    def test_matches_sum_of_log_pdf(self):
        m = WeibullModel(2.3, 5.1)
        x = m.sample(1000, seed=3)
        assert log_likelihood(m, x) == pytest.approx(np.log(m.pdf(x)).sum(), rel=1e-12)

    def test_true_parameters_preferred(self):
        x = WeibullModel(2.0, 6.0).sample(100_000, seed=9)
        assert log_likelihood(WeibullModel(2.0, 6.0), x) > log_likelihood(WeibullModel(2.1, 6.0), x)

    @pytest.mark.parametrize("bad", [[0.0, 1.0], [-1.0], [1.0, math.nan]])
    def test_nonpositive_rejected(self, bad):
        with pytest.raises(DomainError):
            log_likelihood(WeibullModel(2, 6), bad)

    def test_empty_rejected(self):
        with pytest.raises(InsufficientDataError):
            log_likelihood(WeibullModel(2, 6), [])


class TestFit:
    def test_thumrait_recovery(self):
        x = WeibullModel(2.16538, 6.38352).sample(500_000, seed=1)
        fit = fit_mle(x)
        assert fit.model.k == pytest.approx(2.16538, rel=0.01)
        assert fit.model.c == pytest.approx(6.38352, rel=0.005)
        assert fit.n_used == 500_000 and fit.n_dropped == 0
        assert math.isfinite(fit.log_likelihood)

    def test_duqm_exceedance(self):
        fit = fit_mle(WeibullModel(1.88304, 4.97057).sample(500_000, seed=2))
        assert fit.model.sf(6.0) == pytest.approx(0.2404, abs=0.005)

    def test_identical_speeds_degenerate(self):
        with pytest.raises(DegenerateDataError):
            fit_mle([4.2] * 50)

    @pytest.mark.parametrize("data", [[], [3.0], [0.0, 0.0, 5.0], [math.nan, -1.0, 2.0]])
    def test_insufficient(self, data):
        with pytest.raises(InsufficientDataError):
            fit_mle(data)

    def test_calms_dropped_and_counted(self):
        x = list(WeibullModel(2, 6).sample(1000, seed=4)) + [0.0, 0.0, -1.0, math.nan]
        fit = fit_mle(x)
        assert fit.n_used == 1000 and fit.n_dropped == 4
        assert fit.calm_fraction == pytest.approx(4 / 1004)

    def test_stationarity_conditions(self):
        x = WeibullModel(2.7, 4.2).sample(50_000, seed=5)
        fit = fit_mle(x)
        k, c = fit.model.k, fit.model.c
        S = np.sum(x**k)
        resid = np.sum(x**k * np.log(x)) / S - 1 / k - np.mean(np.log(x))
        assert abs(resid) < 1e-10
        assert c == pytest.approx((S / x.size) ** (1 / k), rel=1e-12)
        gk, gc = _fd_gradient(x, k, c)
        assert abs(gk) < 1e-4 and abs(gc) < 1e-4

    def test_perturbations_lower_likelihood(self):
        x = WeibullModel(2.0, 7.0).sample(20_000, seed=6)
        fit = fit_mle(x)
        best = fit.log_likelihood
        for dk in (-0.01, 0.0, 0.01):
            for dc in (-0.01, 0.0, 0.01):
                if dk == dc == 0.0:
                    continue
                assert log_likelihood(WeibullModel(fit.model.k + dk, fit.model.c + dc), x) < best

    def test_c_profile_exact(self):
        x = WeibullModel(2.4, 5.0).sample(5_000, seed=8)
        for k in (1.5, 2.4, 3.3):
            c_hat = np.mean(x**k) ** (1 / k)
            ll = log_likelihood(WeibullModel(k, c_hat), x)
            for f in (0.999, 1.001):
                assert log_likelihood(WeibullModel(k, c_hat * f), x) < ll

    @settings(max_examples=25, deadline=None)
    @given(st.floats(0.01, 1000.0))
    def test_scale_equivariance(self, lam):
        x = WeibullModel(2.2, 5.5).sample(2_000, seed=10)
        a = fit_mle(x)
        b = fit_mle(lam * x)
        assert b.model.k == pytest.approx(a.model.k, rel=1e-6)
        assert b.model.c == pytest.approx(lam * a.model.c, rel=1e-6)

    def test_consistency_median_error_shrinks(self):
        truth = WeibullModel(2.3, 6.0)
        medians = []
        for n in (10**3, 10**4, 10**5, 10**6):
            errs = [abs(fit_mle(truth.sample(n, seed=100 + s)).model.k - truth.k) for s in range(5)]
            medians.append(np.median(errs))
        assert all(b < a for a, b in zip(medians, medians[1:]))

    def test_extreme_shapes(self):
        for k in (0.6, 12.0):
            fit = fit_mle(WeibullModel(k, 3.0).sample(50_000, seed=13))
            assert fit.model.k == pytest.approx(k, rel=0.03)

    def test_iteration_budget(self):
        fit = fit_mle(WeibullModel(2, 6).sample(10_000, seed=14))
        assert 0 < fit.iterations <= SolverOptions().max_iter


class TestMeans:
    def test_simple(self):
        assert arithmetic_mean([1, 2, 3]) == 2.0
        assert arithmetic_mean([5, 5]) == 5.0

    def test_empty(self):
        with pytest.raises(InsufficientDataError):
            arithmetic_mean([])

    def test_majis_large_sample(self):
        x = WeibullModel(3.51997, 2.95436).sample(10**6, seed=3)
        assert arithmetic_mean(x) == pytest.approx(2.65898, rel=0.01)

    def test_validate_thumrait(self):
        v = validate_means(5.65326, 5.62417, 0.02)
        assert v.passed and v.gap == pytest.approx(0.00517, abs=2e-5)

    def test_validate_seeb(self):
        v = validate_means(2.82395, 2.83633, 0.02)
        assert v.passed and v.gap == pytest.approx(0.00437, abs=2e-5)

    def test_validate_equal(self):
        v = validate_means(3.0, 3.0, 0.0)
        assert v.passed and v.gap == 0.0

    def test_validate_fails_beyond_threshold(self):
        assert not validate_means(3.0, 2.0, 0.02).passed

    def test_validate_fit(self):
        fit = fit_mle(WeibullModel(2.5, 5).sample(100_000, seed=15))
        v = validate_fit(fit)
        assert v.passed and v.gap == pytest.approx(fit.mean_gap)


def test_clean_speeds():
    kept, dropped = clean_speeds([1.0, 0.0, None, -2.0, 3.0, float("inf")])
    assert kept.tolist() == [1.0, 3.0] and dropped == 4
