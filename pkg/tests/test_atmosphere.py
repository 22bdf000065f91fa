import numpy as np
import pytest

from windassess import DomainError, air_density, correct_metrics, density_ratio, pressure_ratio
from windassess.metrics import SiteMetrics
from windassess.published import CORRECTED, METRICS
from windassess.stations import builtin_registry


def test_sea_level():
    assert air_density(0) == 1.225
    assert density_ratio(0) == 1.0


@pytest.mark.parametrize("h,rho", [(467, 1.1710), (1755, 1.0315)])
def test_published_densities(h, rho):
    assert air_density(h) == pytest.approx(rho, abs=5e-4)


@pytest.mark.parametrize("h,ratio", [(467, 1.1710 / 1.225), (1755, 1.0315 / 1.225)])
def test_ratio_examples(h, ratio):
    assert density_ratio(h) == pytest.approx(ratio, abs=5e-4)


@pytest.mark.parametrize("h", [-1, 11000.5, float("nan")])
def test_domain(h):
    with pytest.raises(DomainError):
        air_density(h)


def test_strictly_decreasing():
    rho = air_density(np.linspace(0, 11000, 11001))
    assert np.all(np.diff(rho) < 0)


def test_ratio_consistency():
    h = np.linspace(0, 11000, 101)
    np.testing.assert_array_equal(density_ratio(h) * 1.225, air_density(h))


def test_small_altitude_bound():
    h = np.linspace(0, 499.999, 1000)
    assert np.all(1 - density_ratio(h) < 0.05)


def test_published_ratio_columns():
    # WPD'/WPD follows the density ratio; the printed sigma follows the pressure ratio
    reg = builtin_registry()
    for key, (rho, sigma, wpd_c, _) in CORRECTED.items():
        h = reg[key].altitude
        assert wpd_c / METRICS[key][0] == pytest.approx(density_ratio(h), abs=5e-4)
        assert sigma == pytest.approx(pressure_ratio(h), abs=5e-4)


def _metrics(wpd, naep):
    return SiteMetrics(wpd=wpd, p_exceed=0.1, naep=naep, air_density=1.225, hours_per_year=8760)


def test_correct_thumrait():
    c = correct_metrics(_metrics(196.048, 1.72687), 467)
    assert c.wpd_corrected == pytest.approx(187.408, abs=0.2)
    assert c.naep_corrected == pytest.approx(1.650765, rel=0.02)


def test_correct_saiq():
    c = correct_metrics(_metrics(33.3375, 0.203271), 1755)
    assert c.wpd_corrected == pytest.approx(28.0719, abs=0.05)
    assert c.naep_corrected == pytest.approx(0.171165, rel=0.02)


def test_correct_sea_level_identity():
    m = _metrics(50.0, 0.5)
    c = correct_metrics(m, 0)
    assert c.wpd_corrected == 50.0 and c.naep_corrected == 0.5


def test_corrected_invariants():
    for h in (0, 100, 467, 3000, 11000):
        m = _metrics(123.4, 1.1)
        c = correct_metrics(m, h)
        assert 0 < c.sigma_density <= 1
        assert c.wpd_corrected == pytest.approx(c.sigma_density * m.wpd, rel=1e-9)
        assert c.naep_corrected == pytest.approx(c.sigma_density * m.naep, rel=1e-9)
