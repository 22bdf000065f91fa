"""Maximum-likelihood fitting of Weibull parameters to observed speeds.

The two-parameter problem is reduced to a scalar equation in the shape
``k``: for fixed ``k`` the likelihood is maximized by
``c(k) = (mean(v**k)) ** (1/k)``, and substituting back gives the
stationarity condition

    g(k) = sum(v**k * ln v) / sum(v**k) - 1/k - mean(ln v) = 0.

``g`` is strictly increasing (its derivative is a weighted variance of
``ln v`` plus ``1/k**2``), so the root is unique and a bracketed Newton
iteration finds it reliably.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateDataError, DomainError, InsufficientDataError
from .rootfind import safeguarded_newton
from .weibull import WeibullModel

__all__ = [
    "SolverOptions",
    "FitResult",
    "ValidationVerdict",
    "clean_speeds",
    "log_likelihood",
    "fit_mle",
    "arithmetic_mean",
    "validate_fit",
    "validate_means",
]


@dataclass(frozen=True)
class SolverOptions:
    xtol: float = 1e-10
    ftol: float = 1e-12
    max_iter: int = 200
    bracket: tuple = (0.1, 50.0)
    widened_bracket: tuple = (0.01, 500.0)
    k_clamp: tuple = (0.5, 20.0)


@dataclass(frozen=True)
class FitResult:
    model: WeibullModel
    n_used: int
    n_dropped: int
    log_likelihood: float
    distribution_mean: float
    arithmetic_mean: float
    iterations: int

    @property
    def mean_gap(self):
        """Relative gap between the fitted distribution's mean and the sample mean."""
        return abs(self.distribution_mean - self.arithmetic_mean) / self.arithmetic_mean

    @property
    def calm_fraction(self):
        total = self.n_used + self.n_dropped
        return self.n_dropped / total if total else 0.0


@dataclass(frozen=True)
class ValidationVerdict:
    passed: bool
    gap: float
    threshold: float
    details: dict = field(default_factory=dict)


def clean_speeds(speeds):
    """Split raw speeds into the strictly positive finite ones and a drop count."""
    arr = np.asarray(speeds, dtype=float).ravel()
    keep = np.isfinite(arr) & (arr > 0)
    return arr[keep], int(arr.size - keep.sum())


def log_likelihood(model, speeds):
    """Sum of log-densities of ``speeds`` under ``model``."""
    v = np.asarray(speeds, dtype=float).ravel()
    if v.size == 0:
        raise InsufficientDataError("log_likelihood needs at least one speed")
    if np.any(~(v > 0)):
        raise DomainError("log_likelihood requires all speeds > 0; filter calms first")
    k, c = model.k, model.c
    z = np.log(v / c)
    return float(v.size * math.log(k / c) + (k - 1.0) * z.sum() - np.exp(k * z).sum())


def _profile_residual(x):
    """Residual g(k) and g'(k) on centred log-speeds ``x``."""

    def fun(k):
        t = k * x
        w = np.exp(t - t.max())
        s = w.sum()
        m1 = (w * x).sum() / s
        m2 = (w * x * x).sum() / s
        return m1 - 1.0 / k, (m2 - m1 * m1) + 1.0 / (k * k)

    return fun


def _moment_start(v, clamp):
    s = v.std(ddof=1)
    k0 = (s / v.mean()) ** -1.086 if s > 0 else clamp[1]
    return min(max(k0, clamp[0]), clamp[1])


def fit_mle(speeds, options=None):
    """Fit a :class:`WeibullModel` to raw speeds by maximum likelihood.

    Non-finite and non-positive entries (calms, missing values) are dropped
    and counted in ``n_dropped``.

    Raises
    ------
    InsufficientDataError
        Fewer than two usable speeds.
    DegenerateDataError
        All usable speeds are identical, so the shape diverges.
    ConvergenceError
        The root finder exhausted ``options.max_iter``.
    """
    opts = options or SolverOptions()
    v, n_dropped = clean_speeds(speeds)
    if v.size < 2:
        raise InsufficientDataError(f"need at least 2 positive speeds, got {v.size}")
    logv = np.log(v)
    mean_log = logv.mean()
    x = logv - mean_log
    if np.ptp(x) == 0.0:
        raise DegenerateDataError("all speeds are identical; shape parameter is unbounded")

    fun = _profile_residual(x)
    lo, hi = opts.bracket
    if fun(lo)[0] > 0 or fun(hi)[0] < 0:
        lo, hi = opts.widened_bracket
        if fun(lo)[0] > 0 or fun(hi)[0] < 0:
            raise DegenerateDataError(
                f"shape parameter outside the search range [{lo}, {hi}]"
            )
    k0 = _moment_start(v, opts.k_clamp)
    k, iterations = safeguarded_newton(
        fun, k0, lo, hi, xtol=opts.xtol, ftol=opts.ftol, max_iter=opts.max_iter
    )
    t = k * x
    tmax = t.max()
    c = math.exp(mean_log + (tmax + math.log(np.exp(t - tmax).mean())) / k)
    model = WeibullModel(k, c)
    return FitResult(
        model=model,
        n_used=int(v.size),
        n_dropped=n_dropped,
        log_likelihood=log_likelihood(model, v),
        distribution_mean=model.mean,
        arithmetic_mean=float(v.mean()),
        iterations=iterations,
    )


def arithmetic_mean(speeds):
    v = np.asarray(speeds, dtype=float).ravel()
    if v.size == 0:
        raise InsufficientDataError("arithmetic_mean of an empty list")
    return float(v.mean())


def validate_means(distribution_mean, arithmetic_mean, threshold=0.02):
    """Compare a modelled mean with the observed one; pass when the relative gap <= threshold."""
    if arithmetic_mean == 0:
        gap = 0.0 if distribution_mean == 0 else math.inf
    else:
        gap = abs(distribution_mean - arithmetic_mean) / abs(arithmetic_mean)
    return ValidationVerdict(
        passed=gap <= threshold,
        gap=gap,
        threshold=threshold,
        details={"distribution_mean": distribution_mean, "arithmetic_mean": arithmetic_mean},
    )


def validate_fit(fit, threshold=0.02):
    return validate_means(fit.distribution_mean, fit.arithmetic_mean, threshold)
