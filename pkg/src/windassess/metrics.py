"""Wind-energy performance metrics for a fitted Weibull model."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .errors import AccuracyError, DomainError

__all__ = [
    "RHO_SEA_LEVEL",
    "HOURS_PER_YEAR",
    "SiteMetrics",
    "instantaneous_power_density",
    "wind_power_density",
    "wind_power_density_quad",
    "exceedance_probability",
    "naep",
    "site_metrics",
]

RHO_SEA_LEVEL = 1.225  # kg/m^3
HOURS_PER_YEAR = 8760.0  # 365-day year
DEFAULT_THRESHOLD = 6.0  # m/s

_KWH_PER_GWH = 1e6


@dataclass(frozen=True)
class SiteMetrics:
    wpd: float  # W/m^2
    p_exceed: float  # probability of exceeding ``threshold``
    naep: float  # GWh/MWp/year
    air_density: float  # kg/m^3
    hours_per_year: float
    threshold: float = DEFAULT_THRESHOLD
    evaluator: str = "tabular"

    @property
    def p_exceed_6(self):
        return self.p_exceed

    @property
    def capacity_factor(self):
        return self.naep * _KWH_PER_GWH / (1000.0 * self.hours_per_year)


def _check_rho(rho):
    if not (np.isfinite(rho) and rho > 0):
        raise DomainError(f"air density must be > 0, got {rho!r}")


def instantaneous_power_density(v, rho=RHO_SEA_LEVEL):
    """Kinetic power flux 0.5*rho*v**3 in W/m^2."""
    _check_rho(rho)
    v = np.asarray(v, dtype=float)
    if np.any(v < 0) or np.any(np.isnan(v)):
        raise DomainError("speed must be >= 0")
    out = 0.5 * rho * v**3
    return float(out) if out.ndim == 0 else out


def wind_power_density(model, rho=RHO_SEA_LEVEL):
    """Expected power flux over the Weibull distribution, 0.5*rho*c^3*Gamma(1+3/k)."""
    _check_rho(rho)
    return 0.5 * rho * model.raw_moment(3)


def wind_power_density_quad(model, rho=RHO_SEA_LEVEL, tail=1e-12):
    """Same quantity as :func:`wind_power_density` by direct quadrature."""
    _check_rho(rho)
    v_hi = model.upper_speed(tail)
    val, _ = integrate.quad(
        lambda v: 0.5 * rho * v**3 * model.pdf(v), 0.0, v_hi, epsabs=0.0, epsrel=1e-12, limit=200
    )
    return val


def exceedance_probability(model, v_threshold=DEFAULT_THRESHOLD):
    """P(V > v_threshold) = exp(-(v/c)^k)."""
    if not v_threshold >= 0:
        raise DomainError("threshold must be >= 0")
    return model.sf(v_threshold)


def naep(
    model,
    curve,
    evaluator="tabular",
    tau_hours=HOURS_PER_YEAR,
    epsabs=1e-9,
    max_error_gwh=1e-6,
):
    """Normalized annual energy production in GWh per MWp per year.

    The integrand f(v)*P(v) is integrated between cut-in and the rated
    speed with adaptive Gauss-Kronrod quadrature, one smooth segment at a
    time (segments end at the tabulated nodes for the linear evaluator).
    The rated plateau up to cut-out is added in closed form.
    """
    if curve.rated_power == 0.0:
        return 0.0
    if evaluator == "tabular":
        nodes = [curve.cut_in, *[s for s in curve.kinks() if s < curve.rated_speed], curve.rated_speed]
    elif evaluator == "polynomial":
        nodes = [curve.cut_in, curve.rated_speed]
    else:
        raise DomainError(f"unknown evaluator {evaluator!r}")

    def integrand(v):
        return model.pdf(v) * curve.power(v, evaluator)

    total = 0.0
    err = 0.0
    for a, b in zip(nodes[:-1], nodes[1:]):
        val, abserr = integrate.quad(integrand, a, b, epsabs=epsabs, epsrel=1e-12, limit=200)
        total += val
        err += abserr
    total += curve.rated_power * (model.cdf(curve.cut_out) - model.cdf(curve.rated_speed))

    scale = tau_hours / _KWH_PER_GWH * (1000.0 / curve.rated_power)
    if err * scale > max_error_gwh:
        raise AccuracyError(
            f"NAEP quadrature error {err * scale:.3g} GWh exceeds {max_error_gwh:g}",
            estimate=total * scale,
            error_estimate=err * scale,
        )
    return total * scale


def site_metrics(
    model,
    curve,
    rho=RHO_SEA_LEVEL,
    tau_hours=HOURS_PER_YEAR,
    threshold=DEFAULT_THRESHOLD,
    evaluator="tabular",
):
    """WPD at ``rho``, exceedance of ``threshold`` and NAEP for the curve as given."""
    return SiteMetrics(
        wpd=wind_power_density(model, rho),
        p_exceed=exceedance_probability(model, threshold),
        naep=naep(model, curve, evaluator=evaluator, tau_hours=tau_hours),
        air_density=rho,
        hours_per_year=tau_hours,
        threshold=threshold,
        evaluator=evaluator,
    )
