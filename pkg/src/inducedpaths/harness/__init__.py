from .config import ExperimentConfig, parse_seeds
from .experiment import ComparisonReport, profile_distance, run_experiment, total_variation

__all__ = [
    "ExperimentConfig",
    "parse_seeds",
    "ComparisonReport",
    "run_experiment",
    "profile_distance",
    "total_variation",
]
