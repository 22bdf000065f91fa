"""Standardized 1 MWp wind-turbine power curve.

The curve is defined by 23 tabulated (speed, power) points with cut-in at
3.5 m/s, rated power reached at 13.5 m/s and shutdown above 25 m/s. A
sixth-order polynomial in ``v - 3.5`` approximates the rising branch.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DomainError, SchemaError

__all__ = [
    "PowerCurve",
    "FitErrors",
    "STANDARD_POINTS",
    "STANDARD_POLY_COEFFS",
    "standard_curve",
    "load_curve_csv",
]

STANDARD_POINTS = (
    (0.0, 0.0),
    (3.5, 0.0),
    (4.0, 24.0),
    (4.5, 44.0),
    (5.0, 69.33),
    (5.5, 100.0),
    (6.0, 136.67),
    (6.5, 179.33),
    (7.0, 229.33),
    (7.5, 285.33),
    (8.0, 352.0),
    (8.5, 429.33),
    (9.0, 516.0),
    (9.5, 617.67),
    (10.0, 719.33),
    (10.5, 807.33),
    (11.0, 894.67),
    (11.5, 934.0),
    (12.0, 973.33),
    (12.5, 984.67),
    (13.0, 996.0),
    (13.5, 1000.0),
    (25.0, 1000.0),
)

# a1..a6 multiplying (v - 3.5)**n
STANDARD_POLY_COEFFS = (11.629989, 51.785673, -26.361878, 6.651802, -0.696387, 0.025188)


@dataclass(frozen=True)
class FitErrors:
    mad: float
    rmse: float
    max_abs_dev: float
    argmax_speed: float


@dataclass(frozen=True)
class PowerCurve:
    """Turbine power curve (speeds in m/s, power in kW).

    ``points`` are interpolated linearly. ``poly_coeffs`` (optional) give
    the polynomial form of the branch between ``cut_in`` and
    ``rated_speed``; a user curve loaded from CSV usually has none.
    """

    points: tuple
    cut_in: float = 3.5
    rated_speed: float = 13.5
    cut_out: float = 25.0
    rated_power: float = 1000.0
    poly_coeffs: tuple = ()

    def __post_init__(self):
        pts = tuple((float(v), float(p)) for v, p in self.points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "poly_coeffs", tuple(float(a) for a in self.poly_coeffs))
        self._check()

    def _check(self):
        speeds = self.speeds
        power = self.powers
        if len(speeds) < 2:
            raise DomainError("a power curve needs at least two points")
        if speeds[0] != 0.0 or power[0] != 0.0:
            raise DomainError("first point must be (0, 0)")
        if np.any(np.diff(speeds) <= 0):
            raise DomainError("curve speeds must be strictly increasing")
        if np.any(np.diff(power) < 0):
            raise DomainError("tabulated power must be nondecreasing in speed")
        if np.any(power < 0) or np.any(power > self.rated_power):
            raise DomainError("tabulated power must lie in [0, rated_power]")
        if np.any(power[speeds <= self.cut_in] != 0):
            raise DomainError("power must be 0 at or below cut-in")
        if not (0 <= self.cut_in < self.rated_speed <= self.cut_out):
            raise DomainError("need 0 <= cut_in < rated_speed <= cut_out")
        for v_req in (self.rated_speed, self.cut_out):
            hit = np.nonzero(speeds == v_req)[0]
            if hit.size == 0 or power[hit[0]] != self.rated_power:
                raise DomainError(f"curve must reach rated power at {v_req} m/s")
        if speeds[-1] != self.cut_out:
            raise DomainError("last tabulated point must be at cut-out")

    @property
    def speeds(self):
        return np.array([p[0] for p in self.points])

    @property
    def powers(self):
        return np.array([p[1] for p in self.points])

    @property
    def has_polynomial(self):
        return bool(self.poly_coeffs)

    def power_tabular(self, v):
        """Power (kW) by linear interpolation of the tabulated points; 0 above cut-out."""
        v = np.asarray(v, dtype=float)
        if np.any(v < 0) or np.any(np.isnan(v)):
            raise DomainError("power curve requires v >= 0")
        out = np.interp(v, self.speeds, self.powers)
        out = np.where(v > self.cut_out, 0.0, out)
        return float(out) if out.ndim == 0 else out

    def power_polynomial(self, v, clamp=True):
        """Power (kW) from the polynomial branch, rated plateau, and shutdown above cut-out.

        The polynomial is clipped into ``[0, rated_power]`` unless ``clamp``
        is false.
        """
        if not self.has_polynomial:
            raise DomainError("this curve has no polynomial coefficients")
        v = np.asarray(v, dtype=float)
        if np.any(v < 0) or np.any(np.isnan(v)):
            raise DomainError("power curve requires v >= 0")
        u = v - self.cut_in
        poly = np.zeros_like(u)
        for a in reversed(self.poly_coeffs):
            poly = (poly + a) * u
        if clamp:
            poly = np.clip(poly, 0.0, self.rated_power)
        out = np.select(
            [v < self.cut_in, v < self.rated_speed, v <= self.cut_out],
            [0.0, poly, self.rated_power],
            default=0.0,
        )
        return float(out) if out.ndim == 0 else out

    def power(self, v, evaluator="tabular"):
        if evaluator == "tabular":
            return self.power_tabular(v)
        if evaluator == "polynomial":
            return self.power_polynomial(v)
        raise DomainError(f"unknown evaluator {evaluator!r}")

    def fit_errors(self):
        """Deviations of the polynomial form from the tabulated points.

        MAD and RMSE are averaged over all tabulated points, including the
        zero-power and plateau points where the deviation is exactly 0.
        """
        speeds = self.speeds
        dev = self.power_polynomial(speeds, clamp=False) - self.powers
        absdev = np.abs(dev)
        j = int(np.argmax(absdev))
        return FitErrors(
            mad=float(absdev.mean()),
            rmse=float(math.sqrt(np.mean(dev**2))),
            max_abs_dev=float(absdev[j]),
            argmax_speed=float(speeds[j]),
        )

    def kinks(self):
        """Interior speeds where the tabular curve's slope changes."""
        s = self.speeds
        return tuple(float(x) for x in s[(s > self.cut_in) & (s < self.cut_out)])


def standard_curve():
    """The built-in 23-point 1 MWp curve with its polynomial fit."""
    return PowerCurve(points=STANDARD_POINTS, poly_coeffs=STANDARD_POLY_COEFFS)


def load_curve_csv(path, cut_in=None, rated_speed=None, cut_out=None):
    """Read a two-column ``speed_mps,power_kw`` CSV into a :class:`PowerCurve`.

    Missing cut-in/rated/cut-out speeds are inferred from the table: the
    last zero-power speed, the first speed at maximum power, and the last
    speed. Rated power is the table maximum.
    """
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        header = [h.strip() for h in next(reader, [])]
        if header != ["speed_mps", "power_kw"]:
            raise SchemaError(
                f"{path}: expected header 'speed_mps,power_kw', got {','.join(header)!r}"
            )
        pts = []
        for lineno, row in enumerate(reader, start=2):
            if not row or not "".join(row).strip():
                continue
            try:
                pts.append((float(row[0]), float(row[1])))
            except (ValueError, IndexError) as exc:
                raise SchemaError(f"{path}:{lineno}: bad row {row!r}") from exc
    if not pts:
        raise SchemaError(f"{path}: no data rows")
    speeds = [p[0] for p in pts]
    powers = [p[1] for p in pts]
    rated = max(powers)
    if cut_in is None:
        cut_in = max(v for v, p in pts if p == 0.0)
    if rated_speed is None:
        rated_speed = speeds[powers.index(rated)]
    if cut_out is None:
        cut_out = speeds[-1]
    return PowerCurve(
        points=tuple(pts),
        cut_in=cut_in,
        rated_speed=rated_speed,
        cut_out=cut_out,
        rated_power=rated,
    )
