"""Fixed points and the implicit explored-fraction curve alpha(rho).

Internally the curve is parametrized by x = f^{-1}(1 - alpha); solving the
implicit equation in x avoids nesting the inverse of f inside every
residual evaluation. With a = x and b = f'(x)/f'(1):

    g(alpha, s)    = f(x - (1-s) b) / (1 - alpha)
    ghat(alpha, s) = f'(x - (1-s) b) / f'(x)

and the defining relation of the curve is ghat(alpha(rho), 1-rho) = 1-rho.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import DomainViolation
from .pgf import GenFn, SizeBiasedGenFn, bisect, solve_rho

__all__ = [
    "solve_rho",
    "xi",
    "alpha_c",
    "x_of_rho",
    "solve_alpha_of_rho",
    "alpha_prime",
    "g_alpha",
    "ghat_alpha",
    "ds_ghat_alpha",
    "da_ghat_alpha",
    "ds_ghat_at_one",
    "g_alpha_coefficients",
    "AlphaCurve",
    "alpha_curve",
]


def xi(f: GenFn, rho: float) -> float:
    """Giant-component fraction 1 - f(1 - rho)."""
    if not 0.0 <= rho <= 1.0:
        raise DomainViolation(f"rho must lie in [0, 1], got {rho}")
    return f.one_minus_value_at_one_minus(rho)


def alpha_c(f: GenFn) -> float:
    """Smallest alpha > 0 with f''(f^{-1}(1 - alpha)) / f'(1) = 1."""
    return 1.0 - f.value(f.x_crit())


def _check_alpha(f: GenFn, alpha: float) -> None:
    if not -1e-12 <= alpha <= alpha_c(f) + 1e-9:
        raise DomainViolation(
            f"alpha = {alpha} outside [0, alpha_c = {alpha_c(f):.12g}]"
        )


def x_of_rho(f: GenFn, rho: float) -> float:
    """Solve ghat(alpha, 1-rho) = 1-rho for x = f^{-1}(1-alpha) in [x_c, 1]."""
    f.require_supercritical()
    rho_pi = f.survival_root()
    if not 0.0 < rho <= rho_pi + 1e-12:
        raise DomainViolation(f"rho = {rho} outside (0, rho_pi = {rho_pi:.12g}]")
    rho = min(rho, rho_pi)
    mu = f.mean

    def residual(x: float) -> float:
        fp = f.deriv(x)
        return f.deriv(x - rho * fp / mu) - (1.0 - rho) * fp

    xc = f.x_crit()
    if residual(xc) < 0:
        raise DomainViolation(f"no solution for alpha(rho) at rho = {rho}")
    return bisect(residual, xc, 1.0)


def solve_alpha_of_rho(f: GenFn, rho: float) -> float:
    """The implicit curve alpha(rho) on (0, rho_pi]; alpha(rho_pi) = 0."""
    return 1.0 - f.value(x_of_rho(f, rho))


def _alpha_prime_at_x(f: GenFn, rho: float, x: float) -> float:
    mu = f.mean
    fpx = f.deriv(x)
    fppx = f.deriv2(x)
    b = fpx / mu
    u = x - rho * b
    fpu = f.deriv(u)
    fppu = f.deriv2(u)
    da = -1.0 / fpx                      # d x / d alpha
    db = -fppx / (mu * fpx)              # d b / d alpha
    du = da - rho * db
    ds_ghat = b * fppu / fpx
    da_ghat = (fppu * du * fpx - fpu * fppx * da) / (fpx * fpx)
    if da_ghat == 0.0:
        raise DomainViolation(f"alpha'(rho) undefined at rho = {rho}")
    return (ds_ghat - 1.0) / da_ghat


def alpha_prime(f: GenFn, rho: float) -> float:
    """alpha'(rho) by implicit differentiation of ghat(alpha, 1-rho) = 1-rho."""
    return _alpha_prime_at_x(f, rho, x_of_rho(f, rho))


def g_alpha(f: GenFn, alpha: float, s: float) -> float:
    """Generating function of the sleeping set after an explored fraction alpha."""
    _check_alpha(f, alpha)
    if not 0.0 <= s <= 1.0:
        raise DomainViolation(f"s must lie in [0, 1], got {s}")
    x = f.inverse(1.0 - alpha)
    return f.value(x - (1.0 - s) * f.deriv(x) / f.mean) / (1.0 - alpha)


def ghat_alpha(f: GenFn, alpha: float, s: float) -> float:
    _check_alpha(f, alpha)
    x = f.inverse(1.0 - alpha)
    return f.deriv(x - (1.0 - s) * f.deriv(x) / f.mean) / f.deriv(x)


def ds_ghat_alpha(f: GenFn, alpha: float, s: float) -> float:
    _check_alpha(f, alpha)
    x = f.inverse(1.0 - alpha)
    b = f.deriv(x) / f.mean
    return b * f.deriv2(x - (1.0 - s) * b) / f.deriv(x)


def da_ghat_alpha(f: GenFn, alpha: float, s: float) -> float:
    """partial_alpha ghat(alpha, s), via the inverse-function derivative."""
    _check_alpha(f, alpha)
    x = f.inverse(1.0 - alpha)
    mu = f.mean
    fpx = f.deriv(x)
    fppx = f.deriv2(x)
    b = fpx / mu
    u = x - (1.0 - s) * b
    da = -1.0 / fpx
    db = -fppx / (mu * fpx)
    du = da - (1.0 - s) * db
    return (f.deriv2(u) * du * fpx - f.deriv(u) * fppx * da) / (fpx * fpx)


def ds_ghat_at_one(f: GenFn, alpha: float) -> float:
    """partial_s ghat(alpha, 1) = f''(x)/f'(1); equals 1 exactly at alpha_c."""
    _check_alpha(f, alpha)
    x = f.inverse(1.0 - alpha)
    return f.deriv2(x) / f.mean


def g_alpha_coefficients(f: GenFn, alpha: float, i_max: int | None = None) -> np.ndarray:
    """Power-series coefficients of g(alpha, s) via the binomial expansion of
    f(u + v s) with u = x - b, v = b; a pmf summing to 1 within 1e-10."""
    _check_alpha(f, alpha)
    x = f.inverse(1.0 - alpha)
    b = f.deriv(x) / f.mean
    u = x - b
    if u < -1e-9:
        raise DomainViolation(f"expansion point negative (u = {u}) at alpha = {alpha}")
    u = max(u, 0.0)
    top = f.max_degree
    out = np.zeros(top + 1)
    for i in range(top + 1):
        pi_i = f.pi(i)
        if pi_i == 0.0:
            continue
        for k in range(i + 1):
            out[k] += pi_i * math.comb(i, k) * u ** (i - k) * b ** k
    out /= 1.0 - alpha
    if i_max is not None:
        if i_max < top and out[i_max + 1:].sum() > 1e-9:
            raise DomainViolation(f"i_max = {i_max} truncates non-negligible mass")
        out = out[: i_max + 1]
    return out


@dataclass
class AlphaCurve:
    """alpha(rho) sampled on a descending rho grid from rho_pi toward 0."""

    rho: np.ndarray
    alpha: np.ndarray
    alpha_deriv: np.ndarray
    ds_ghat_one: np.ndarray
    g_at_one_minus_rho: np.ndarray
    rho_pi: float
    alpha_crit: float

    def validate(self) -> None:
        if abs(self.alpha[0]) > 1e-8:
            raise AssertionError("alpha(rho_pi) must vanish")
        if np.any(np.diff(self.alpha) < -1e-10):
            raise AssertionError("alpha must be nonincreasing in rho")
        if self.alpha.min() < -1e-12 or self.alpha.max() > self.alpha_crit + 1e-9:
            raise AssertionError("alpha values must stay in [0, alpha_c]")


def alpha_curve(f: GenFn, n_grid: int = 200, rho_min: float = 1e-4) -> AlphaCurve:
    f.require_supercritical()
    rho_pi = f.survival_root()
    grid = np.linspace(rho_pi, min(rho_min, rho_pi), n_grid)
    alpha = np.empty(n_grid)
    deriv = np.empty(n_grid)
    dsg = np.empty(n_grid)
    gval = np.empty(n_grid)
    mu = f.mean
    for j, r in enumerate(grid):
        x = x_of_rho(f, float(r))
        a = 1.0 - f.value(x)
        alpha[j] = a
        deriv[j] = _alpha_prime_at_x(f, float(r), x)
        dsg[j] = f.deriv2(x) / mu
        gval[j] = f.value(x - r * f.deriv(x) / mu) / (1.0 - a)
    return AlphaCurve(rho=grid, alpha=alpha, alpha_deriv=deriv, ds_ghat_one=dsg,
                      g_at_one_minus_rho=gval, rho_pi=rho_pi, alpha_crit=alpha_c(f))
