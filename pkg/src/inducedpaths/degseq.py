"""Degree distributions and explicit per-vertex degree sequences."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainViolation
from .rng import Rng

POISSON_TAIL = 1e-12
MAX_SUPPORT = 512


def _poisson_pmf(c: float) -> np.ndarray:
    """Poisson(c) probabilities truncated at the smallest K with tail < POISSON_TAIL,
    then renormalized so the result is an exact pmf."""
    if c <= 0:
        raise DomainViolation(f"poisson rate must be positive, got {c}")
    probs = [math.exp(-c)]
    total = probs[0]
    k = 0
    while 1.0 - total >= POISSON_TAIL:
        k += 1
        if k > MAX_SUPPORT:
            raise DomainViolation(f"poisson support exceeds {MAX_SUPPORT} before tail < {POISSON_TAIL}")
        probs.append(probs[-1] * c / k)
        total += probs[-1]
    arr = np.array(probs, dtype=float)
    return arr / arr.sum()


@dataclass(frozen=True)
class DegreeDistribution:
    """A finitely supported degree law: regular, truncated Poisson, or explicit pmf."""

    kind: str
    pmf: np.ndarray
    param: float | None = None

    @staticmethod
    def regular(d: int) -> "DegreeDistribution":
        if d < 0 or int(d) != d:
            raise DomainViolation(f"regular degree must be a nonnegative integer, got {d}")
        pmf = np.zeros(int(d) + 1)
        pmf[int(d)] = 1.0
        return DegreeDistribution("regular", pmf, float(d))

    @staticmethod
    def poisson(c: float) -> "DegreeDistribution":
        return DegreeDistribution("poisson", _poisson_pmf(float(c)), float(c))

    @staticmethod
    def explicit(pmf) -> "DegreeDistribution":
        arr = np.asarray(pmf, dtype=float)
        if arr.ndim != 1 or arr.size == 0 or arr.size > MAX_SUPPORT + 1:
            raise DomainViolation("explicit pmf must be a nonempty 1-d list with support <= %d" % MAX_SUPPORT)
        if np.any(arr < 0) or arr.sum() <= 0:
            raise DomainViolation("pmf entries must be nonnegative with positive sum")
        arr = arr / arr.sum()
        # drop trailing zero mass so the support is tight
        nz = np.nonzero(arr)[0]
        arr = arr[: nz[-1] + 1] if nz.size else arr[:1]
        return DegreeDistribution("explicit", arr)

    def __post_init__(self):
        total = float(self.pmf.sum())
        if abs(total - 1.0) > 1e-12:
            raise DomainViolation(f"pmf must sum to 1 within 1e-12, got {total}")
        self.pmf.setflags(write=False)

    @property
    def support(self) -> int:
        return len(self.pmf) - 1

    @property
    def mean(self) -> float:
        i = np.arange(len(self.pmf))
        return float(np.sum(i * self.pmf))

    @property
    def second_moment(self) -> float:
        i = np.arange(len(self.pmf))
        return float(np.sum(i * i * self.pmf))

    @property
    def size_biased_mean(self) -> float:
        """Mean number of further half-edges seen from a uniformly matched half-edge,
        sum i(i-1) pi_i / sum i pi_i."""
        i = np.arange(len(self.pmf))
        mu = np.sum(i * self.pmf)
        if mu == 0:
            return 0.0
        return float(np.sum(i * (i - 1) * self.pmf) / mu)

    @property
    def is_supercritical(self) -> bool:
        return self.size_biased_mean > 1.0

    def label(self) -> str:
        if self.kind == "regular":
            return f"regular:{int(self.param)}"
        if self.kind == "poisson":
            return f"poisson:{self.param:g}"
        return "explicit"

    @staticmethod
    def parse(spec: str) -> "DegreeDistribution":
        """Parse 'regular:3' or 'poisson:2.0' (file specs are handled by the CLI)."""
        kind, _, arg = spec.partition(":")
        if kind == "regular":
            return DegreeDistribution.regular(int(arg))
        if kind == "poisson":
            return DegreeDistribution.poisson(float(arg))
        raise DomainViolation(f"unknown distribution spec {spec!r}")


@dataclass
class DegreeSequence:
    """Explicit degrees d_1..d_N with an even total number of half-edges."""

    degrees: np.ndarray
    odd_sum_fixed: bool = field(default=False)

    def __post_init__(self):
        self.degrees = np.ascontiguousarray(self.degrees, dtype=np.int32)
        if self.degrees.ndim != 1:
            raise DomainViolation("degrees must be a 1-d array")
        if len(self.degrees) and self.degrees.min() < 0:
            raise DomainViolation("degrees must be nonnegative")
        if self.total_half_edges % 2 == 1:
            # odd totals are repaired by bumping the last vertex
            self.degrees = self.degrees.copy()
            self.degrees[-1] += 1
            self.odd_sum_fixed = True

    def __len__(self) -> int:
        return len(self.degrees)

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def total_half_edges(self) -> int:
        return int(self.degrees.sum())

    def histogram(self) -> np.ndarray:
        """Empirical degree pmf."""
        counts = np.bincount(self.degrees)
        return counts / counts.sum()

    def empirical_distribution(self) -> DegreeDistribution:
        return DegreeDistribution.explicit(self.histogram())

    def check_max_degree(self, gamma: float = 2.5) -> bool:
        """Diagnostic for the heavy-vertex condition max_i d_i <= N^(1/gamma).

        Returns True when satisfied; otherwise warns and returns False (the
        simulator stays usable either way)."""
        if gamma <= 2:
            raise DomainViolation("gamma must exceed 2")
        if len(self.degrees) == 0:
            return True
        bound = math.ceil(len(self.degrees) ** (1.0 / gamma))
        ok = int(self.degrees.max()) <= bound
        if not ok:
            warnings.warn(
                f"max degree {int(self.degrees.max())} exceeds N^(1/{gamma}) = {bound}; "
                "fluid-limit guarantees may not apply",
                stacklevel=2,
            )
        return ok

    def save(self, path) -> None:
        """One integer per line, UTF-8, newline-terminated."""
        with open(path, "w", encoding="utf-8") as fh:
            for d in self.degrees:
                fh.write(f"{int(d)}\n")

    @staticmethod
    def load(path) -> "DegreeSequence":
        with open(path, "r", encoding="utf-8") as fh:
            degrees = [int(line) for line in fh if line.strip()]
        return DegreeSequence(np.array(degrees, dtype=np.int32))


def sample_degree_sequence(dist: DegreeDistribution, n: int, seed: int) -> DegreeSequence:
    """Draw N degrees i.i.d. from `dist` (odd totals repaired on the last vertex).

    Regular distributions are deterministic and consume no randomness.
    """
    if n < 1:
        raise DomainViolation(f"need n >= 1, got {n}")
    if dist.kind == "regular":
        return DegreeSequence(np.full(n, int(dist.param), dtype=np.int32))
    rng = Rng(seed)
    cdf = np.cumsum(dist.pmf)
    cdf[-1] = 1.0
    out = np.empty(n, dtype=np.int32)
    for i in range(n):
        out[i] = int(np.searchsorted(cdf, rng.uniform(), side="right"))
    return DegreeSequence(out)
