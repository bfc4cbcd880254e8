"""Probability generating functions of degree laws and their size-biased kin.

Everything here works on finitely supported coefficient vectors, so f, f',
f'' are plain polynomial evaluations. Quantities like 1 - f(1 - t) get a
dedicated stable form because the fixed-point solvers need them accurate for
t near 0, where naive evaluation loses every significant digit.
"""

from __future__ import annotations

import math

import numpy as np

from ..degseq import DegreeDistribution
from ..errors import DomainViolation, SubcriticalError


def _horner(coef: list[float], s: float) -> float:
    acc = 0.0
    for c in reversed(coef):
        acc = acc * s + c
    return acc


def bisect(fn, lo: float, hi: float, iters: int = 100) -> float:
    """Plain bisection; assumes fn(lo) and fn(hi) bracket a sign change
    (endpoints may sit exactly on zero)."""
    flo = fn(lo)
    if flo == 0.0:
        return lo
    pos = flo > 0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = fn(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == pos:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


class GenFn:
    """Evaluator bundle for a degree pmf: f, f', f'', the inverse of f on
    [f(0), 1], and coefficient access."""

    def __init__(self, pmf, kind: str = "explicit", param: float | None = None):
        coeffs = np.asarray(pmf, dtype=float)
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise DomainViolation("pmf must be a nonempty 1-d array")
        if abs(float(coeffs.sum()) - 1.0) > 1e-12:
            raise DomainViolation("pmf must sum to 1 within 1e-12")
        self.coeffs = coeffs
        self.kind = kind
        self.param = param
        self._c = coeffs.tolist()
        self._c1 = [i * c for i, c in enumerate(self._c)][1:]
        self._c2 = [i * (i - 1) * c for i, c in enumerate(self._c)][2:]
        self.mean = float(sum(self._c1))
        if self.mean <= 0:
            raise DomainViolation("degree law must put mass on positive degrees")
        self._x_crit: float | None = None
        self._rho: float | None = None

    @staticmethod
    def from_distribution(dist: DegreeDistribution) -> "GenFn":
        return GenFn(dist.pmf, kind=dist.kind, param=dist.param)

    def pi(self, i: int) -> float:
        return float(self.coeffs[i]) if 0 <= i < len(self.coeffs) else 0.0

    @property
    def max_degree(self) -> int:
        return len(self.coeffs) - 1

    def value(self, s: float) -> float:
        return _horner(self._c, s)

    def deriv(self, s: float) -> float:
        return _horner(self._c1, s)

    def deriv2(self, s: float) -> float:
        return _horner(self._c2, s)

    def one_minus_value_at_one_minus(self, t: float) -> float:
        """1 - f(1 - t), stable for small t."""
        if t >= 1.0:
            return 1.0 - self._c[0]
        acc = 0.0
        base = math.log1p(-t)
        for i, c in enumerate(self._c):
            if i and c:
                acc += c * -math.expm1(i * base)
        return acc

    def inverse(self, y: float) -> float:
        """f^{-1}(y) on [f(0), 1]; f is strictly increasing there."""
        f0 = self._c[0]
        if not f0 - 1e-12 <= y <= 1.0 + 1e-12:
            raise DomainViolation(f"inverse argument {y} outside [f(0), 1] = [{f0}, 1]")
        y = min(max(y, f0), 1.0)
        return bisect(lambda x: self.value(x) - y, 0.0, 1.0)

    @property
    def size_biased_mean(self) -> float:
        """fhat'(1) = f''(1)/f'(1)."""
        return self.deriv2(1.0) / self.mean

    @property
    def is_supercritical(self) -> bool:
        return self.size_biased_mean > 1.0

    def require_supercritical(self) -> None:
        if not self.is_supercritical:
            raise SubcriticalError(
                f"size-biased mean {self.size_biased_mean:.6f} <= 1: no giant component"
            )

    def size_biased(self) -> "SizeBiasedGenFn":
        return SizeBiasedGenFn(self.coeffs)

    def x_crit(self) -> float:
        """The point x_c with f''(x_c) = f'(1); alpha_c = 1 - f(x_c).

        Exists for supercritical laws with f''(0) <= f'(1); the remaining
        graph turns critical when the untouched generating function is
        rescaled to this point.
        """
        if self._x_crit is None:
            self.require_supercritical()
            mu = self.mean
            if self.deriv2(0.0) - mu > 0:
                raise DomainViolation(
                    "f''(0) > f'(1): no critical point in (0, 1 - f(0)]"
                )
            self._x_crit = bisect(lambda x: self.deriv2(x) - mu, 0.0, 1.0)
        return self._x_crit

    def survival_root(self) -> float:
        if self._rho is None:
            self._rho = solve_rho(self.size_biased())
        return self._rho


class SizeBiasedGenFn:
    """ghat(s) = g'(s)/g'(1) for a nonnegative coefficient family (z_i).

    The family need not be normalized; only ratios enter.
    """

    def __init__(self, weights):
        z = np.asarray(weights, dtype=float)
        if z.ndim != 1 or z.size == 0 or np.any(z < 0):
            raise DomainViolation("weights must be a nonnegative 1-d array")
        i = np.arange(len(z))
        total = float(np.sum(i * z))
        if total <= 0:
            raise DomainViolation("weights must put mass on positive indices")
        # hz[i] = (i+1) z_{i+1} / sum_j j z_j, the size-biased pmf
        self.hz = ((i[1:] * z[1:]) / total).tolist()
        self.mean = float(np.sum(i * (i - 1) * z) / total)

    def value(self, s: float) -> float:
        return _horner(self.hz, s)

    def deriv(self, s: float) -> float:
        return _horner([k * c for k, c in enumerate(self.hz)][1:], s)

    def one_minus_value_at_one_minus(self, t: float) -> float:
        """1 - ghat(1 - t), stable for small t."""
        if t >= 1.0:
            return 1.0 - self.hz[0]
        acc = 0.0
        base = math.log1p(-t)
        for k, c in enumerate(self.hz):
            if k and c:
                acc += c * -math.expm1(k * base)
        return acc


def solve_rho(fhat: SizeBiasedGenFn, tol: float = 1e-12) -> float:
    """Smallest positive solution in (0, 1] of 1 - rho = fhat(1 - rho).

    phi(rho) = (1 - rho) - fhat(1 - rho) is concave with phi(0) = 0, so the
    positive root is unique; bisection on the stable form finds it.
    """
    if fhat.mean <= 1.0:
        raise SubcriticalError(
            f"size-biased mean {fhat.mean:.6f} <= 1: fixed point has no positive root"
        )

    def phi(r: float) -> float:
        return fhat.one_minus_value_at_one_minus(r) - r

    lo = min(tol, 1e-12)
    if phi(lo) <= 0:
        raise SubcriticalError("fixed-point residual not positive near 0")
    if phi(1.0) >= 0:
        # no mass on degree 1: the whole graph survives
        return 1.0
    return bisect(phi, lo, 1.0)
