"""Two-parameter Weibull wind-speed distribution.

All speeds are in m/s. Density, distribution and quantile functions accept
scalars or array-likes and return a float for scalar input, an ndarray
otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InsufficientDataError
from .special import gamma_fn

__all__ = ["WeibullModel", "CharacteristicSpeeds", "MS_TO_KMH", "to_kmh"]

MS_TO_KMH = 3.6


def to_kmh(speed):
    """Convert m/s to km/h for display."""
    return speed * MS_TO_KMH


def _unwrap(arr):
    return float(arr) if np.ndim(arr) == 0 else arr


@dataclass(frozen=True)
class CharacteristicSpeeds:
    """Mode, median, mean and energy-optimum speed of a Weibull model (m/s)."""

    mode: float
    median: float
    mean: float
    max_energy: float

    def as_tuple(self):
        return (self.mode, self.median, self.mean, self.max_energy)


@dataclass(frozen=True)
class WeibullModel:
    """Weibull distribution with shape ``k`` (dimensionless) and scale ``c`` (m/s).

    Examples
    --------
    >>> m = WeibullModel(k=2.0, c=6.0)
    >>> round(m.cdf(6.0), 7)
    0.6321206
    """

    k: float
    c: float

    def __post_init__(self):
        k, c = float(self.k), float(self.c)
        if not (math.isfinite(k) and k > 0):
            raise DomainError(f"shape k must be finite and > 0, got {self.k!r}")
        if not (math.isfinite(c) and c > 0):
            raise DomainError(f"scale c must be finite and > 0, got {self.c!r}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "c", c)

    def pdf(self, v):
        """Probability density f(v) in s/m.

        At ``v = 0`` the density is 0 for k > 1 and 1/c for k = 1. For
        k < 1 it is unbounded there, which raises :class:`DomainError`.
        """
        v = np.asarray(v, dtype=float)
        if np.any(v < 0) or np.any(np.isnan(v)):
            raise DomainError("pdf requires v >= 0")
        if self.k < 1.0 and np.any(v == 0):
            raise DomainError("pdf is unbounded at v = 0 when k < 1")
        x = v / self.c
        with np.errstate(divide="ignore", invalid="ignore"):
            if self.k == 1.0:
                body = np.ones_like(x)
            else:
                body = np.power(x, self.k - 1.0)
            out = (self.k / self.c) * body * np.exp(-np.power(x, self.k))
        return _unwrap(out)

    def cdf(self, v):
        """Cumulative probability F(v) = 1 - exp(-(v/c)^k)."""
        v = np.asarray(v, dtype=float)
        if np.any(v < 0) or np.any(np.isnan(v)):
            raise DomainError("cdf requires v >= 0")
        return _unwrap(-np.expm1(-np.power(v / self.c, self.k)))

    def sf(self, v):
        """Survival function 1 - F(v), computed without cancellation."""
        v = np.asarray(v, dtype=float)
        if np.any(v < 0) or np.any(np.isnan(v)):
            raise DomainError("sf requires v >= 0")
        return _unwrap(np.exp(-np.power(v / self.c, self.k)))

    def quantile(self, p):
        """Inverse CDF: the speed below which a fraction ``p`` of winds fall."""
        p = np.asarray(p, dtype=float)
        if np.any(~((p >= 0) & (p < 1))):
            raise DomainError("quantile requires 0 <= p < 1")
        return _unwrap(self.c * np.power(-np.log1p(-p), 1.0 / self.k))

    def characteristic_speeds(self):
        k, c = self.k, self.c
        mode = 0.0 if k <= 1.0 else c * (1.0 - 1.0 / k) ** (1.0 / k)
        return CharacteristicSpeeds(
            mode=mode,
            median=c * math.log(2.0) ** (1.0 / k),
            mean=c * gamma_fn(1.0 + 1.0 / k),
            max_energy=c * (1.0 + 2.0 / k) ** (1.0 / k),
        )

    @property
    def mean(self):
        return self.c * gamma_fn(1.0 + 1.0 / self.k)

    def raw_moment(self, order):
        """E[v^order] = c^order * Gamma(1 + order/k)."""
        return self.c**order * gamma_fn(1.0 + order / self.k)

    def sample(self, n, seed=None, rng=None):
        """Draw ``n`` speeds by inverse-CDF transform of uniforms on [0, 1).

        The generator is NumPy's PCG64 (``numpy.random.default_rng``), so a
        fixed ``seed`` gives the same draw on every platform and NumPy 2.x
        release. Pass ``rng`` to share a generator across calls.
        """
        n = int(n)
        if n < 1:
            raise InsufficientDataError("sample requires n >= 1")
        if rng is None:
            rng = np.random.default_rng(seed)
        return self.quantile(rng.random(n))

    def upper_speed(self, tail=1e-12):
        """Speed beyond which only ``tail`` probability mass remains."""
        return self.quantile(1.0 - tail)
