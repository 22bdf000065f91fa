"""ISA troposphere density and altitude correction of site metrics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "IsaConstants",
    "ISA",
    "CorrectedMetrics",
    "air_density",
    "density_ratio",
    "pressure_ratio",
    "correct_metrics",
]


@dataclass(frozen=True)
class IsaConstants:
    rho0: float = 1.225  # kg/m^3
    T0: float = 288.15  # K
    lapse_rate: float = 0.0065  # K/m
    pressure_exponent: float = 5.2559  # g / (R L)
    density_exponent: float = 4.2559  # g / (R L) - 1
    ceiling: float = 11000.0  # m, top of the troposphere


ISA = IsaConstants()


@dataclass(frozen=True)
class CorrectedMetrics:
    altitude: float
    rho: float
    sigma_density: float
    sigma_pressure: float  # diagnostic only
    wpd_corrected: float
    naep_corrected: float


def _temperature_ratio(altitude, isa):
    h = np.asarray(altitude, dtype=float)
    if np.any(~((h >= 0) & (h <= isa.ceiling))):
        raise DomainError(f"altitude must lie in [0, {isa.ceiling:g}] m")
    return 1.0 - isa.lapse_rate * h / isa.T0


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


def air_density(altitude, isa=ISA):
    """Air density (kg/m^3) at ``altitude`` metres above sea level."""
    return _out(isa.rho0 * _temperature_ratio(altitude, isa) ** isa.density_exponent)


def density_ratio(altitude, isa=ISA):
    return _out(_temperature_ratio(altitude, isa) ** isa.density_exponent)


def pressure_ratio(altitude, isa=ISA):
    """p(h)/p0. Not used for any correction; exposed for cross-checks against printed ratios."""
    return _out(_temperature_ratio(altitude, isa) ** isa.pressure_exponent)


def correct_metrics(metrics, altitude, isa=ISA):
    """Scale WPD and NAEP to the air density at ``altitude``.

    WPD is rescaled from the density it was computed with. NAEP is taken
    as valid at sea-level density and multiplied by rho(h)/rho0; the power
    curve itself is not reshaped.
    """
    rho = air_density(altitude, isa)
    sigma = density_ratio(altitude, isa)
    return CorrectedMetrics(
        altitude=float(altitude),
        rho=rho,
        sigma_density=sigma,
        sigma_pressure=pressure_ratio(altitude, isa),
        wpd_corrected=metrics.wpd * (rho / metrics.air_density),
        naep_corrected=metrics.naep * sigma,
    )
