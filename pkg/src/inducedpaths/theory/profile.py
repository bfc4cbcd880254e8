"""Limiting contour profile of the exploration.

The rescaled contour converges to a tent-shaped curve h on [0, 2]: an
increasing arc parametrized from rho_pi down to 0 by

    x_up(rho) = int_rho^{rho_pi} (2 - r) |alpha'(r)| / ds_ghat(alpha(r), 1) dr
    y_up(rho) = int_rho^{rho_pi}      r  |alpha'(r)| / ds_ghat(alpha(r), 1) dr

followed by a decreasing arc obtained by translating each point to the
right by twice the giant fraction of the remaining graph,

    x_down(rho) = x_up(rho) + 2 (1 - alpha(rho)) (1 - g(alpha(rho), 1-rho)),

with y_down = y_up. The decreasing arc ends at (2 xi, 0) when rho = rho_pi,
and h vanishes on [2 xi, 2].
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .. import __version__ as _version
from ..errors import DomainViolation
from .bounds import _quad
from .fixedpoint import _alpha_prime_at_x, x_of_rho, alpha_c, xi
from .pgf import GenFn


@dataclass
class ProfileCurve:
    """Sampled profile arcs on a descending rho grid (rho_pi first)."""

    rho: np.ndarray
    x_up: np.ndarray
    y_up: np.ndarray
    x_down: np.ndarray
    y_down: np.ndarray
    rho_pi: float
    xi: float

    @property
    def peak_height(self) -> float:
        return float(self.y_up[-1])

    def validate(self) -> None:
        if abs(self.x_up[0]) > 1e-12 or abs(self.y_up[0]) > 1e-12:
            raise AssertionError("arcs must start at the origin at rho_pi")
        if not np.array_equal(self.y_down, self.y_up):
            raise AssertionError("descending arc must share heights with the ascent")
        if np.any(np.diff(self.x_up) < -1e-12) or np.any(np.diff(self.y_up) < -1e-12):
            raise AssertionError("ascent must be monotone as rho decreases")
        if abs(self.x_down[0] - 2.0 * self.xi) > 1e-6:
            raise AssertionError("descending arc must end at 2 xi")

    def height_function(self):
        """Piecewise-linear h(u) on [0, 2] built from both arcs."""
        xu = self.x_up
        yu = self.y_up
        # descending arc runs from the peak back to 2 xi as rho increases
        xd = self.x_down[::-1]
        yd = self.y_down[::-1]
        two_xi = 2.0 * self.xi

        def h(u):
            u = np.asarray(u, dtype=float)
            up = np.interp(u, xu, yu, left=0.0, right=0.0)
            down = np.interp(u, xd, yd, left=0.0, right=0.0)
            out = np.where(u <= xu[-1], up, down)
            return np.where(u >= two_xi, 0.0, out)

        return h

    def write_csv(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("rho,x_up,y_up,x_down,y_down\n")
            for i in range(len(self.rho)):
                fh.write(f"{self.rho[i]!r},{self.x_up[i]!r},{self.y_up[i]!r},"
                         f"{self.x_down[i]!r},{self.y_down[i]!r}\n")

    def to_json_dict(self) -> dict:
        return {
            "version": _version,
            "rho_pi": self.rho_pi,
            "xi": self.xi,
            "rho": self.rho.tolist(),
            "x_up": self.x_up.tolist(),
            "y_up": self.y_up.tolist(),
            "x_down": self.x_down.tolist(),
            "y_down": self.y_down.tolist(),
        }


def profile(f: GenFn, n_grid: int = 200, rho_min: float = 1e-4) -> ProfileCurve:
    """Cumulative quadrature of the arc integrands over a descending grid."""
    if n_grid < 2:
        raise DomainViolation(f"need n_grid >= 2, got {n_grid}")
    f.require_supercritical()
    rho_pi = f.survival_root()
    if not 0.0 < rho_min < rho_pi:
        raise DomainViolation(f"rho_min must lie in (0, rho_pi), got {rho_min}")
    mu = f.mean
    grid = np.linspace(rho_pi, rho_min, n_grid)

    def rates(r: float) -> tuple[float, float]:
        x = x_of_rho(f, r)
        ap = abs(_alpha_prime_at_x(f, r, x))
        g1 = f.deriv2(x) / mu
        return (2.0 - r) * ap / g1, r * ap / g1

    x_up = np.zeros(n_grid)
    y_up = np.zeros(n_grid)
    for j in range(1, n_grid):
        a, b = float(grid[j]), float(grid[j - 1])
        x_up[j] = x_up[j - 1] + _quad(lambda r: rates(r)[0], a, b)
        y_up[j] = y_up[j - 1] + _quad(lambda r: rates(r)[1], a, b)

    x_down = np.empty(n_grid)
    for j, r in enumerate(grid):
        x = x_of_rho(f, float(r))
        a = 1.0 - f.value(x)
        g_val = f.value(x - r * f.deriv(x) / mu) / (1.0 - a)
        x_down[j] = x_up[j] + 2.0 * (1.0 - a) * (1.0 - g_val)

    return ProfileCurve(rho=grid, x_up=x_up, y_up=y_up, x_down=x_down,
                        y_down=y_up.copy(), rho_pi=rho_pi, xi=xi(f, rho_pi))


def save_profile_json(curve: ProfileCurve, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(curve.to_json_dict(), fh, sort_keys=True, indent=1)
        fh.write("\n")
