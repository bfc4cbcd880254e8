"""Long induced paths and holes in sparse random multigraphs.

Simulation side: a depth-first build-and-explore of configuration models
whose ancestral lines are induced paths, a greedy chord-deleting DFS for
comparison, an m-neighborhood variant, and an induced-cycle closing search.

Theory side: the matching fluid limits, i.e. survival and criticality fixed
points, the explored-fraction curve, length bounds, the limiting contour
profile, and the per-degree ODE system, all computed numerically.
"""

__version__ = "0.1.0"

from .degseq import DegreeDistribution, DegreeSequence, sample_degree_sequence
from .errors import (
    ConfigError,
    DomainViolation,
    InducedPathsError,
    NumericalError,
    SubcriticalError,
)
from .induced import (
    is_induced_cycle,
    is_induced_path,
    is_m_induced_cycle,
    is_m_induced_path,
)
from .multigraph import MultiGraph, build_configuration_model, build_er_graph

__all__ = [
    "__version__",
    "DegreeDistribution",
    "DegreeSequence",
    "sample_degree_sequence",
    "MultiGraph",
    "build_configuration_model",
    "build_er_graph",
    "is_induced_path",
    "is_induced_cycle",
    "is_m_induced_path",
    "is_m_induced_cycle",
    "InducedPathsError",
    "DomainViolation",
    "SubcriticalError",
    "NumericalError",
    "ConfigError",
]
