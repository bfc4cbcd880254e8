"""Build-and-explore algorithms with a compiled kernel when available.

The hot loop lives in the optional extension inducedpaths._ckernel; a pure
Python twin is used when the extension is missing or INDUCEDPATHS_PURE=1.
Both produce bit-identical results for the same seed.
"""

from __future__ import annotations

import os

import numpy as np

from ..degseq import DegreeSequence
from ..errors import DomainViolation
from . import _pykernel
from .result import (
    ContourProcess,
    ExplorationResult,
    assemble_result,
    compute_ladder_times,
    extract_longest_induced_path,
    remaining_degree_histogram,
)

try:
    if os.environ.get("INDUCEDPATHS_PURE") == "1":
        raise ImportError("pure-python backend forced")
    from .. import _ckernel

    DEFAULT_BACKEND = "cext"
except ImportError:
    _ckernel = None
    DEFAULT_BACKEND = "python"

_KERNELS = {"python": _pykernel.explore_kernel}
if _ckernel is not None:
    _KERNELS["cext"] = _ckernel.explore_kernel

__all__ = [
    "ContourProcess",
    "ExplorationResult",
    "DEFAULT_BACKEND",
    "available_backends",
    "run_induced_dfs",
    "run_m_induced_dfs",
    "compute_ladder_times",
    "extract_longest_induced_path",
    "remaining_degree_histogram",
]


def available_backends() -> list[str]:
    return sorted(_KERNELS)


def _run(seq: DegreeSequence, seed: int, m: int, record_snapshots: bool,
         delta: float, backend: str | None) -> ExplorationResult:
    if m < 1:
        raise DomainViolation(f"need m >= 1, got {m}")
    if not 0.0 < delta < 0.5:
        raise DomainViolation(f"delta must lie in (0, 1/2), got {delta}")
    name = backend or DEFAULT_BACKEND
    try:
        kernel = _KERNELS[name]
    except KeyError:
        raise DomainViolation(f"unknown backend {name!r}; have {available_backends()}")
    degrees = np.ascontiguousarray(seq.degrees, dtype=np.int32)
    out = kernel(degrees, int(seed), int(m))
    return assemble_result(out, seed=int(seed), m=m, delta=delta, backend=name,
                           record_snapshots=record_snapshots)


def run_induced_dfs(seq: DegreeSequence, seed: int, *, record_snapshots: bool = True,
                    delta: float = 0.3, backend: str | None = None) -> ExplorationResult:
    """Build a uniform matching of `seq` while exploring it depth-first so
    that every ancestral line is an induced path."""
    return _run(seq, seed, 1, record_snapshots, delta, backend)


def run_m_induced_dfs(seq: DegreeSequence, m: int, seed: int, *,
                      record_snapshots: bool = True, delta: float = 0.3,
                      backend: str | None = None) -> ExplorationResult:
    """Variant that discovers whole radius-m balls at each advance; with
    m = 1 it reproduces run_induced_dfs step for step."""
    return _run(seq, seed, m, record_snapshots, delta, backend)
