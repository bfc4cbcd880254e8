"""Length bounds for the longest induced path / hole.

The master quantity is the integral of u alpha'(u) / D(alpha(u)) over
u in (0, rho_pi), where D is partial_s ghat at 1 (or the geometric sum of
its powers for the m-neighborhood variant). Under the alpha-decreasing
parametrization used here the raw integral is negative; callers receive the
positive length and can ask for the signed value.

Closed forms: for d-regular laws the integral reduces to a one-dimensional
quadrature in x; for Poisson laws the antiderivative is elementary up to a
logarithmic integral. The latter disagrees with replacing li by the
dilogarithm, which would exceed the giant-component fraction; the li form
matches the master integral to full quadrature accuracy.
"""

from __future__ import annotations

import math
import warnings

from scipy.integrate import IntegrationWarning, quad

from ..degseq import DegreeDistribution
from ..errors import DomainViolation, NumericalError, SubcriticalError
from .fixedpoint import _alpha_prime_at_x, x_of_rho
from .pgf import GenFn, bisect
from .special import logint

EULER_GAMMA = 0.57721566490153286


def _quad(func, a, b, epsabs=1e-12, epsrel=1e-10, limit=300):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        val, err = quad(func, a, b, epsabs=epsabs, epsrel=epsrel, limit=limit)
    if err > max(5e-8, 5e-8 * abs(val)):
        raise NumericalError(f"quadrature error estimate {err:.2e} too large")
    return val


def signed_length_integral(f: GenFn, m: int = 1, epsabs: float = 1e-12,
                           epsrel: float = 1e-10) -> float:
    """int_0^{rho_pi} u alpha'(u) / sum_{j=1}^m (ds_ghat(alpha(u),1))^j du,
    exactly as parametrized (negative for supercritical laws)."""
    if m < 1:
        raise DomainViolation(f"need m >= 1, got {m}")
    f.require_supercritical()
    rho_pi = f.survival_root()
    mu = f.mean

    def integrand(u: float) -> float:
        x = x_of_rho(f, u)
        ap = _alpha_prime_at_x(f, u, x)
        g1 = f.deriv2(x) / mu
        den = sum(g1 ** j for j in range(1, m + 1))
        return u * ap / den

    return _quad(integrand, 0.0, rho_pi, epsabs=epsabs, epsrel=epsrel)


def signed_length_integral_alpha_form(f: GenFn, m: int = 1) -> float:
    """Same integral after substituting u -> alpha: no alpha' appears, so
    this is an independent numerical route used for cross-validation."""
    if m < 1:
        raise DomainViolation(f"need m >= 1, got {m}")
    f.require_supercritical()
    mu = f.mean
    xc = f.x_crit()

    def rho_of_x(x: float) -> float:
        fp = f.deriv(x)

        def residual(r: float) -> float:
            return (1.0 - r) * fp - f.deriv(x - r * fp / mu)

        if residual(1e-14) <= 0:
            return 0.0
        if residual(1.0) >= 0:
            return 1.0
        return bisect(residual, 1e-14, 1.0)

    def integrand(x: float) -> float:
        g1 = f.deriv2(x) / mu
        den = sum(g1 ** j for j in range(1, m + 1))
        return rho_of_x(x) * f.deriv(x) / den

    return -_quad(integrand, xc, 1.0)


def bound_m(f: GenFn, m: int, epsabs: float = 1e-12, epsrel: float = 1e-10) -> float:
    """Asymptotic length fraction of the longest m-separated induced path
    the ball-by-ball exploration reaches: |m * signed integral|."""
    return abs(m * signed_length_integral(f, m, epsabs=epsabs, epsrel=epsrel))


def bound_main(f: GenFn, epsabs: float = 1e-12, epsrel: float = 1e-10) -> float:
    """Length fraction of the longest induced path found by the exploration."""
    return bound_m(f, 1, epsabs=epsabs, epsrel=epsrel)


def bound_regular(d: int) -> float:
    """Closed form for d-regular graphs, d >= 3:
    d/(2(d-1)) * (1 - int_0^1 ((1 - x^{1/(d-1)})/(1 - x))^{2/(d-2)} dx)."""
    if d < 3:
        raise DomainViolation(f"regular closed form needs d >= 3, got {d}")
    inner = 1.0 / (d - 1)
    expo = 2.0 / (d - 2)
    limit_at_1 = (d - 1.0) ** (-expo)

    def integrand(x: float) -> float:
        if x <= 0.0:
            return 1.0
        if 1.0 - x < 1e-12:
            return limit_at_1
        return ((1.0 - x ** inner) / (1.0 - x)) ** expo

    val = _quad(integrand, 0.0, 1.0, epsabs=1e-12, epsrel=1e-11)
    return d / (2.0 * (d - 1.0)) * (1.0 - val)


def bound_er(c: float) -> float:
    """Closed form for Erdos-Renyi graphs with mean degree c > 1.

    With rho_c the survival fixed point (1 - rho_c = exp(-c rho_c)):

        rho_c / (-ln(1-rho_c)) * (gamma + ln(-ln(1-rho_c)) - rho_c - li(1-rho_c))

    which agrees with the master integral for Poisson(c) to quadrature
    accuracy (the fixed point makes the prefactor equal 1/c).
    """
    if c <= 1.0:
        raise SubcriticalError(f"Erdos-Renyi bound needs c > 1, got {c}")
    f = GenFn.from_distribution(DegreeDistribution.poisson(c))
    rho_c = f.survival_root()
    neg_log = -math.log1p(-rho_c)
    bracket = EULER_GAMMA + math.log(neg_log) - rho_c - logint(1.0 - rho_c)
    return rho_c / neg_log * bracket
