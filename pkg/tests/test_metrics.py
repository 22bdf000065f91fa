import math

import numpy as np
import pytest
from scipy import integrate

from windassess import (
    DomainError,
    PowerCurve,
    WeibullModel,
    exceedance_probability,
    instantaneous_power_density,
    naep,
    site_metrics,
    wind_power_density,
)
from windassess.metrics import wind_power_density_quad


class TestInstantaneous:
    def test_values(self):
        assert instantaneous_power_density(0.0, 1.225) == 0.0
        assert instantaneous_power_density(10.0, 1.225) == pytest.approx(612.5)
        assert instantaneous_power_density(6.0, 1.225) == pytest.approx(132.3)

    @pytest.mark.parametrize("v,rho", [(-1, 1.225), (5, 0), (5, -1)])
    def test_domain(self, v, rho):
        with pytest.raises(DomainError):
            instantaneous_power_density(v, rho)


class TestWpd:
    @pytest.mark.parametrize(
        "k,c,expected,tol",
        [(2.16538, 6.38352, 196.048, 0.05), (3.51997, 2.95436, 14.9461, 0.01), (1.88304, 4.97057, 106.985, 0.05)],
    )
    def test_published(self, k, c, expected, tol):
        assert wind_power_density(WeibullModel(k, c), 1.225) == pytest.approx(expected, abs=tol)

    def test_against_quadrature(self):
        rng = np.random.default_rng(21)
        for k, c in zip(rng.uniform(1.2, 4, 30), rng.uniform(1, 10, 30)):
            m = WeibullModel(k, c)
            hi = m.quantile(1 - 1e-12)
            q, _ = integrate.quad(lambda v: 0.5 * 1.225 * v**3 * m.pdf(v), 0, hi, epsabs=0, epsrel=1e-12, limit=200)
            assert wind_power_density(m, 1.225) == pytest.approx(q, rel=1e-6)
            assert wind_power_density_quad(m) == pytest.approx(q, rel=1e-9)

    def test_bad_density(self):
        with pytest.raises(DomainError):
            wind_power_density(WeibullModel(2, 6), 0.0)


class TestExceedance:
    def test_thumrait(self, thumrait):
        assert exceedance_probability(thumrait, 6.0) == pytest.approx(0.4171, abs=5e-4)

    def test_origin(self, thumrait):
        assert exceedance_probability(thumrait, 0.0) == 1.0

    def test_majis(self):
        assert exceedance_probability(WeibullModel(3.51997, 2.95436), 6.0) == pytest.approx(5.519e-6, abs=5e-7)

    def test_negative(self, thumrait):
        with pytest.raises(DomainError):
            exceedance_probability(thumrait, -1.0)


class TestNaep:
    def test_thumrait(self, thumrait, curve):
        assert naep(thumrait, curve) == pytest.approx(1.72687, rel=0.02)

    def test_duqm(self, duqm, curve):
        assert naep(duqm, curve) == pytest.approx(0.92686, rel=0.02)

    def test_zero_curve(self, thumrait):
        flat = PowerCurve(points=((0, 0), (3.5, 0), (13.5, 0), (25, 0)), rated_power=0.0)
        assert naep(thumrait, flat) == 0.0

    def test_against_dense_trapezoid(self, thumrait, curve):
        v = np.linspace(3.5, 25.0, 2_000_001)
        y = thumrait.pdf(v) * curve.power_tabular(v)
        ref = np.trapezoid(y, v) * 8760 / 1e6
        assert naep(thumrait, curve) == pytest.approx(ref, rel=1e-8)

    def test_polynomial_evaluator(self, thumrait, curve):
        v = np.linspace(3.5, 25.0, 2_000_001)
        ref = np.trapezoid(thumrait.pdf(v) * curve.power_polynomial(v), v) * 8760 / 1e6
        assert naep(thumrait, curve, evaluator="polynomial") == pytest.approx(ref, rel=1e-6)

    def test_linear_in_tau(self, thumrait, curve):
        assert naep(thumrait, curve, tau_hours=17520) == pytest.approx(2 * naep(thumrait, curve), rel=1e-14)

    def test_monotone_in_scale(self, curve):
        vals = [naep(WeibullModel(2.2, c), curve) for c in np.linspace(1, 10, 46)]
        assert all(b >= a for a, b in zip(vals, vals[1:]))

    def test_bound(self, curve):
        rng = np.random.default_rng(22)
        for k, c in zip(rng.uniform(1.2, 4, 20), rng.uniform(1, 12, 20)):
            m = WeibullModel(k, c)
            assert naep(m, curve) <= 8.76 * (m.cdf(25.0) - m.cdf(3.5)) + 1e-12
            assert naep(m, curve) <= 8.76

    @pytest.mark.parametrize("k,c,seed", [(2.16538, 6.38352, 31), (1.88304, 4.97057, 32), (2.41716, 5.52679, 33)])
    def test_monte_carlo(self, curve, k, c, seed):
        m = WeibullModel(k, c)
        x = m.sample(10**6, seed=seed)
        mc = curve.power_tabular(x).mean() * 8760 / 1e6
        assert mc == pytest.approx(naep(m, curve), rel=0.005)

    def test_unknown_evaluator(self, thumrait, curve):
        with pytest.raises(DomainError):
            naep(thumrait, curve, evaluator="spline")


class TestSiteMetrics:
    def test_thumrait(self, thumrait, curve):
        m = site_metrics(thumrait, curve, 1.225, 8760)
        assert m.wpd == pytest.approx(196.048, abs=0.05)
        assert m.p_exceed_6 == pytest.approx(0.4171, abs=5e-4)
        assert m.naep == pytest.approx(1.72687, rel=0.02)
        assert m.air_density == 1.225 and m.hours_per_year == 8760

    def test_seeb(self, curve):
        m = site_metrics(WeibullModel(3.10993, 3.15723), curve)
        assert m.wpd == pytest.approx(18.9981, abs=0.01)
        assert m.p_exceed == pytest.approx(0.0006328, abs=1e-5)
        assert m.naep == pytest.approx(0.062554, rel=0.02)

    def test_majis(self, curve):
        assert site_metrics(WeibullModel(3.51997, 2.95436), curve).naep == pytest.approx(0.0280523, rel=0.02)

    def test_fields_sane(self, thumrait, curve):
        m = site_metrics(thumrait, curve)
        assert all(math.isfinite(x) and x >= 0 for x in (m.wpd, m.p_exceed, m.naep))
        assert 0 <= m.p_exceed <= 1 and m.naep <= 8.76
        assert m.capacity_factor == pytest.approx(m.naep / 8.76)
