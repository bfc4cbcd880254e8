"""Dilogarithm and logarithmic integral."""

from __future__ import annotations

import math

from scipy.special import expi

from ..errors import DomainViolation

PI2_OVER_6 = math.pi * math.pi / 6.0


def dilog(x: float) -> float:
    """Li2(x) = sum_{k>=1} x^k / k^2 for x in [0, 1].

    Power series on [0, 1/2]; the reflection
    Li2(x) + Li2(1-x) = pi^2/6 - ln(x) ln(1-x) handles (1/2, 1].
    """
    if not 0.0 <= x <= 1.0:
        raise DomainViolation(f"dilog argument must lie in [0, 1], got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return PI2_OVER_6
    if x > 0.5:
        return PI2_OVER_6 - math.log(x) * math.log1p(-x) - dilog(1.0 - x)
    total = 0.0
    term = x
    k = 1
    while True:
        inc = term / (k * k)
        total += inc
        if inc < 1e-17:
            return total
        k += 1
        term *= x


def logint(x: float) -> float:
    """Logarithmic integral li(x) = pv int_0^x dt/ln t, here for x in (0, 1)
    where the integral is proper; li(x) = Ei(ln x)."""
    if not 0.0 < x < 1.0:
        raise DomainViolation(f"logint argument must lie in (0, 1), got {x}")
    return float(expi(math.log(x)))
