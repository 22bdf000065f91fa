"""Gamma function via the Lanczos approximation (g=7, 9 terms)."""

import math

from .errors import DomainError

_G = 7.0
_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def gamma_fn(x):
    """Euler gamma function for real ``x > 0``.

    Relative error stays below 1e-12 on (0, 30]. Arguments below 0.5 go
    through the reflection formula.
    """
    x = float(x)
    if not x > 0.0 or math.isinf(x):
        raise DomainError(f"gamma_fn requires a finite x > 0, got {x!r}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma_fn(1.0 - x))
    z = x - 1.0
    acc = _COEFFS[0]
    for i in range(1, len(_COEFFS)):
        acc += _COEFFS[i] / (z + i)
    t = z + _G + 0.5
    # exp(log) form keeps t**(z+0.5) from overflowing before the exp(-t) factor
    return _SQRT_2PI * math.exp((z + 0.5) * math.log(t) - t) * acc
