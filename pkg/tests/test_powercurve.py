import numpy as np
import pytest

from windassess import DomainError, PowerCurve, SchemaError, load_curve_csv, standard_curve
from windassess.powercurve import STANDARD_POINTS


@pytest.fixture(scope="module")
def curve():
    return standard_curve()


class TestTabular:
    def test_cut_in(self, curve):
        assert curve.power_tabular(3.5) == 0.0

    def test_rated(self, curve):
        assert curve.power_tabular(13.5) == 1000.0

    def test_midpoint(self, curve):
        assert curve.power_tabular(10.25) == pytest.approx((719.33 + 807.33) / 2, abs=1e-12)
        assert curve.power_tabular(10.25) == pytest.approx(763.33, abs=1e-9)

    def test_exact_at_nodes(self, curve):
        v, p = zip(*STANDARD_POINTS)
        np.testing.assert_array_equal(curve.power_tabular(np.array(v)), np.array(p))

    def test_monotone(self, curve):
        v = np.arange(0, 25.0001, 0.001)
        assert np.all(np.diff(curve.power_tabular(v)) >= 0)

    def test_negative_speed(self, curve):
        with pytest.raises(DomainError):
            curve.power_tabular(-1.0)


class TestPolynomial:
    def test_quoted_value_at_11(self, curve):
        assert curve.power_polynomial(11.0) == pytest.approx(882.80, abs=0.01)

    def test_zero_at_cut_in(self, curve):
        assert curve.power_polynomial(3.5) == 0.0

    def test_plateau(self, curve):
        assert curve.power_polynomial(20.0) == 1000.0

    def test_below_cut_in(self, curve):
        assert curve.power_polynomial(2.0) == 0.0

    def test_negative_speed(self, curve):
        with pytest.raises(DomainError):
            curve.power_polynomial(-0.5)

    def test_clamped_to_band(self, curve):
        v = np.arange(3.5, 13.5, 0.001)
        raw = curve.power_polynomial(v, clamp=False)
        assert raw.max() > 1000.0  # the sixth-order fit overshoots just below rated speed
        clamped = curve.power_polynomial(v)
        assert clamped.min() >= 0.0 and clamped.max() <= 1000.0


class TestBothEvaluators:
    @pytest.mark.parametrize("ev", ["power_tabular", "power_polynomial"])
    def test_bounds_on_grid(self, curve, ev):
        p = getattr(curve, ev)(np.arange(0, 25.0001, 0.001))
        assert p.min() >= 0.0 and p.max() <= 1000.0

    @pytest.mark.parametrize("ev", ["power_tabular", "power_polynomial"])
    def test_plateau_and_shutdown(self, curve, ev):
        f = getattr(curve, ev)
        assert np.all(f(np.linspace(13.5, 25.0, 500)) == 1000.0)
        assert np.all(f(np.array([25.0001, 30.0, 100.0])) == 0.0)

    def test_agree_within_12_kw(self, curve):
        v = np.arange(3.5, 13.5, 0.001)
        assert np.max(np.abs(curve.power_tabular(v) - curve.power_polynomial(v))) < 12.0


class TestFitErrors:
    def test_values(self, curve):
        e = curve.fit_errors()
        assert e.mad == pytest.approx(3.39, abs=0.05)
        assert e.rmse == pytest.approx(4.51, abs=0.05)
        assert e.max_abs_dev == pytest.approx(11.87, abs=0.05)
        assert e.argmax_speed == 11.0

    def test_manual_recomputation(self, curve):
        a = curve.poly_coeffs
        devs = []
        for v, p in STANDARD_POINTS:
            if 3.5 <= v < 13.5:
                fit = sum(a[n] * (v - 3.5) ** (n + 1) for n in range(6))
            else:
                fit = 0.0 if v < 3.5 else 1000.0
            devs.append(fit - p)
        devs = np.array(devs)
        e = curve.fit_errors()
        assert e.mad == pytest.approx(np.abs(devs).sum() / 23, rel=1e-12)
        assert e.rmse == pytest.approx(np.sqrt((devs**2).sum() / 23), rel=1e-12)


class TestValidation:
    def test_points_must_start_at_origin(self):
        with pytest.raises(DomainError):
            PowerCurve(points=STANDARD_POINTS[1:])

    def test_decreasing_power_rejected(self):
        pts = list(STANDARD_POINTS)
        pts[5] = (5.5, 10.0)
        with pytest.raises(DomainError):
            PowerCurve(points=tuple(pts))

    def test_no_polynomial(self):
        c = PowerCurve(points=STANDARD_POINTS)
        with pytest.raises(DomainError):
            c.power_polynomial(5.0)


class TestCsv:
    def test_roundtrip(self, tmp_path):
        path = tmp_path / "curve.csv"
        path.write_text("speed_mps,power_kw\n" + "".join(f"{v},{p}\n" for v, p in STANDARD_POINTS))
        c = load_curve_csv(path)
        assert c.points == standard_curve().points
        assert (c.cut_in, c.rated_speed, c.cut_out, c.rated_power) == (3.5, 13.5, 25.0, 1000.0)

    def test_bad_header(self, tmp_path):
        path = tmp_path / "curve.csv"
        path.write_text("v,p\n0,0\n")
        with pytest.raises(SchemaError):
            load_curve_csv(path)

    def test_invariants_enforced(self, tmp_path):
        path = tmp_path / "curve.csv"
        path.write_text("speed_mps,power_kw\n0,0\n3,0\n10,500\n12,400\n25,500\n")
        with pytest.raises(DomainError):
            load_curve_csv(path)
