"""Experiment configuration: distribution, sizes, seeds, algorithm knobs."""

from __future__ import annotations

from dataclasses import dataclass, field, asdict

import numpy as np

from ..degseq import DegreeDistribution, DegreeSequence
from ..errors import ConfigError

ALGORITHMS = ("induced-dfs", "frieze-jackson", "m-induced")

DEFAULT_TOLERANCES = {
    "root": 1e-12,
    "quad_abs": 1e-12,
    "quad_rel": 1e-10,
    "ode_dt": 1e-4,
    "ode_eps": 0.05,
    "profile_rho_min": 1e-4,
    "profile_grid": 200,
    "cycle_eps": 0.05,
}


def parse_seeds(spec) -> list[int]:
    """Accept '1..10', '3', '1,4,9', or an iterable of ints."""
    if isinstance(spec, (list, tuple)):
        out = [int(s) for s in spec]
    else:
        text = str(spec).strip()
        if not text:
            out = []
        elif ".." in text:
            lo, _, hi = text.partition("..")
            out = list(range(int(lo), int(hi) + 1))
        else:
            out = [int(tok) for tok in text.split(",") if tok.strip()]
    if not out:
        raise ConfigError("seed list must be nonempty")
    return out


@dataclass
class ExperimentConfig:
    dist_spec: str
    n: int
    seeds: list[int]
    algorithm: str = "induced-dfs"
    m: int = 1
    delta: float = 0.3
    alphas: tuple[float, ...] = (0.1, 0.3)
    out_dir: str | None = None
    workers: int = 1
    tolerances: dict = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    degrees_file: str | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ConfigError(f"need n >= 1, got {self.n}")
        self.seeds = parse_seeds(self.seeds)
        if self.algorithm not in ALGORITHMS:
            raise ConfigError(f"algorithm must be one of {ALGORITHMS}, got {self.algorithm!r}")
        if self.m < 1:
            raise ConfigError(f"need m >= 1, got {self.m}")
        if not 0.0 < self.delta < 0.5:
            raise ConfigError(f"delta must lie in (0, 1/2), got {self.delta}")
        if any(not 0.0 <= a < 1.0 for a in self.alphas):
            raise ConfigError(f"alphas must lie in [0, 1), got {self.alphas}")
        if self.workers < 1:
            raise ConfigError(f"need workers >= 1, got {self.workers}")
        merged = dict(DEFAULT_TOLERANCES)
        merged.update(self.tolerances)
        self.tolerances = merged

    def distribution(self) -> DegreeDistribution:
        if self.degrees_file is not None:
            return DegreeSequence.load(self.degrees_file).empirical_distribution()
        return DegreeDistribution.parse(self.dist_spec)

    def degree_sequence(self, seed: int) -> DegreeSequence:
        """The per-seed degree sequence; a file-backed sequence of matching
        length is used verbatim, anything else is sampled i.i.d."""
        if self.degrees_file is not None:
            seq = DegreeSequence.load(self.degrees_file)
            if len(seq) == self.n:
                return seq
            from ..degseq import sample_degree_sequence

            return sample_degree_sequence(seq.empirical_distribution(), self.n, seed)
        from ..degseq import sample_degree_sequence

        return sample_degree_sequence(self.distribution(), self.n, seed)

    def to_json_dict(self) -> dict:
        d = asdict(self)
        d["alphas"] = list(self.alphas)
        return d
