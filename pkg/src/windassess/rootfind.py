"""Safeguarded Newton iteration for monotone scalar equations."""

import math

from .errors import ConvergenceError, DomainError


def safeguarded_newton(fun, x0, lo, hi, xtol=1e-10, ftol=1e-12, max_iter=200):
    """Find a root of ``fun`` inside the bracket ``[lo, hi]``.

    ``fun(x)`` must return ``(f, df)``. The bracket endpoints must give
    values of opposite sign. Newton steps that leave the current bracket,
    or fail to halve the residual, are replaced by bisection, so the
    iteration always converges for a continuous ``f``.

    Convergence needs ``|dx| <= xtol * |x|`` and ``|f| <= ftol``. A step at
    the resolution of a double is also accepted, since no further progress
    is possible there.

    Returns ``(root, iterations)``.
    """
    f_lo, _ = fun(lo)
    f_hi, _ = fun(hi)
    if f_lo == 0.0:
        return lo, 0
    if f_hi == 0.0:
        return hi, 0
    if math.copysign(1.0, f_lo) == math.copysign(1.0, f_hi):
        raise DomainError(f"root not bracketed: f({lo})={f_lo}, f({hi})={f_hi}")
    increasing = f_hi > 0

    x = min(max(x0, lo), hi)
    dx_old = hi - lo
    dx = dx_old
    f, df = fun(x)
    for it in range(1, max_iter + 1):
        if f == 0.0:
            return x, it - 1
        if (f > 0) == increasing:
            hi = x
        else:
            lo = x
        newton_ok = (
            df != 0.0
            and math.isfinite(df)
            and lo < x - f / df < hi
            and abs(2.0 * f) <= abs(dx_old * df)
        )
        dx_old = dx
        if newton_ok:
            dx = -f / df
            x_new = x + dx
        else:
            x_new = 0.5 * (lo + hi)
            dx = x_new - x
        x = x_new
        f, df = fun(x)
        if abs(dx) <= xtol * abs(x) and abs(f) <= ftol:
            return x, it
        if abs(dx) <= 4.0 * math.ulp(x) or hi - lo <= 4.0 * math.ulp(x):
            return x, it
    raise ConvergenceError(
        f"safeguarded Newton did not converge in {max_iter} iterations", last_iterate=x
    )
