"""Replicated simulations compared against the fluid-limit predictions."""

from __future__ import annotations

import json
import os
import statistics
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .. import __version__ as _version
from ..errors import SubcriticalError
from ..explore import run_induced_dfs, run_m_induced_dfs
from ..explore.close_cycle import close_induced_cycle
from ..explore.frieze_jackson import prefix_agreement, push_order, run_frieze_jackson
from ..explore.result import ExplorationResult
from ..induced import is_induced_path, is_m_induced_path
from ..theory import GenFn, build_theory_report, g_alpha_coefficients, profile
from ..theory.profile import ProfileCurve
from .config import ExperimentConfig


def profile_distance(res: ExplorationResult, curve: ProfileCurve) -> float:
    """sup over u in [0, 2] of |X_{ceil(uN)}/N - h(u)|, taken over all steps
    of the contour (for m = 1 the steps exhaust [0, 2])."""
    n = res.n_vertices
    if n == 0:
        return 0.0
    h = curve.height_function()
    steps = np.arange(len(res.contour.values)) / n
    sim = res.contour.values / n
    return float(np.max(np.abs(sim - h(steps))))


def total_variation(p: np.ndarray, q: np.ndarray) -> float:
    k = max(len(p), len(q))
    pp = np.zeros(k)
    qq = np.zeros(k)
    pp[: len(p)] = p
    qq[: len(q)] = q
    return 0.5 * float(np.abs(pp - qq).sum())


def _atomic_write(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _one_seed(payload: dict) -> dict:
    """Run a single replicate; returns plain picklable metrics."""
    cfg = ExperimentConfig(**payload["config"])
    seed = payload["seed"]
    seq = cfg.degree_sequence(seed)
    n = len(seq)
    metrics: dict = {"seed": seed}
    if cfg.algorithm == "m-induced":
        res = run_m_induced_dfs(seq, cfg.m, seed, delta=cfg.delta)
        metrics["spine_ok"] = bool(is_m_induced_path(res.graph, res.spine, cfg.m))
    else:
        res = run_induced_dfs(seq, seed, delta=cfg.delta)
        metrics["spine_ok"] = bool(is_induced_path(res.graph, res.spine))
    metrics["max_height_frac"] = res.max_height / n
    metrics["spine_length_frac"] = len(res.spine) / n

    if cfg.algorithm == "frieze-jackson":
        order = push_order(res)
        start = int(res.event_vertex[0])
        fj = run_frieze_jackson(res.graph, start, order)
        metrics["fj_spine_length_frac"] = len(fj) / n
        metrics["fj_spine_ok"] = bool(is_induced_path(res.graph, fj))
        metrics["fj_prefix_agreement"] = prefix_agreement(fj, res.spine)

    if cfg.algorithm == "induced-dfs":
        cycle = close_induced_cycle(res, eps=cfg.tolerances["cycle_eps"])
        metrics["cycle_found"] = cycle is not None
        metrics["cycle_length_frac"] = len(cycle) / n if cycle else 0.0

        coeffs = payload.get("alpha_coeffs") or {}
        tv = {}
        for key, coef in coeffs.items():
            hist = res.remaining_degree_histogram(float(key))
            tv[key] = total_variation(hist, np.asarray(coef))
        metrics["tau_tv"] = tv

        curve = payload.get("profile_curve")
        if curve is not None:
            metrics["profile_distance"] = profile_distance(
                res, ProfileCurve(**{k: np.asarray(v) if isinstance(v, list) else v
                                     for k, v in curve.items()})
            )
        last_up = np.nonzero(res.contour.values > 0)[0]
        metrics["support_end_frac"] = float(last_up[-1] + 1) / n if len(last_up) else 0.0

    metrics["contour_runs"] = res.contour.run_lengths()
    return metrics


@dataclass
class ComparisonReport:
    config: dict
    theory: dict | None
    warnings: list[str]
    per_seed: list[dict]
    aggregate: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "version": _version,
            "config": self.config,
            "theory": self.theory,
            "warnings": self.warnings,
            "per_seed": self.per_seed,
            "aggregate": self.aggregate,
        }

    def dump(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=1)


def _aggregate(per_seed: list[dict]) -> dict:
    out = {}
    keys = {k for row in per_seed for k, v in row.items() if isinstance(v, (int, float))
            and not isinstance(v, bool)}
    keys.discard("seed")
    for k in sorted(keys):
        vals = [row[k] for row in per_seed if k in row]
        out[k] = {
            "mean": statistics.fmean(vals),
            "stddev": statistics.pstdev(vals) if len(vals) > 1 else 0.0,
            "min": min(vals),
            "max": max(vals),
        }
    for k in ("spine_ok", "fj_spine_ok", "cycle_found"):
        vals = [row[k] for row in per_seed if k in row]
        if vals:
            out[k] = {"fraction_true": sum(vals) / len(vals)}
    return out


def run_experiment(cfg: ExperimentConfig) -> ComparisonReport:
    """Run every seed, compute the theory once, and assemble the report.

    A subcritical distribution downgrades the theory side to a warning; the
    simulations still run.
    """
    warnings_list: list[str] = []
    theory_dict = None
    alpha_coeffs = None
    curve_payload = None
    dist = cfg.distribution()
    try:
        report = build_theory_report(dist, m_values=(cfg.m,) if cfg.m != 1 else (),
                                     tolerances=cfg.tolerances)
        theory_dict = report.to_json_dict()
        f = GenFn.from_distribution(dist)
        alpha_coeffs = {
            f"{a:g}": g_alpha_coefficients(f, a).tolist() for a in cfg.alphas
        }
        if cfg.algorithm == "induced-dfs":
            curve = profile(f, n_grid=int(cfg.tolerances["profile_grid"]),
                            rho_min=cfg.tolerances["profile_rho_min"])
            curve_payload = {
                "rho": curve.rho.tolist(), "x_up": curve.x_up.tolist(),
                "y_up": curve.y_up.tolist(), "x_down": curve.x_down.tolist(),
                "y_down": curve.y_down.tolist(), "rho_pi": curve.rho_pi,
                "xi": curve.xi,
            }
    except SubcriticalError as exc:
        warnings_list.append(f"subcritical: {exc}")

    payloads = [
        {
            "config": cfg.to_json_dict(),
            "seed": seed,
            "alpha_coeffs": alpha_coeffs,
            "profile_curve": curve_payload,
        }
        for seed in cfg.seeds
    ]
    if cfg.workers > 1 and len(cfg.seeds) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            per_seed = list(pool.map(_one_seed, payloads))
    else:
        per_seed = [_one_seed(p) for p in payloads]

    contours = {row["seed"]: row.pop("contour_runs") for row in per_seed}
    report = ComparisonReport(
        config=cfg.to_json_dict(),
        theory=theory_dict,
        warnings=warnings_list,
        per_seed=per_seed,
        aggregate=_aggregate(per_seed),
    )
    if cfg.out_dir:
        os.makedirs(cfg.out_dir, exist_ok=True)
        _atomic_write(os.path.join(cfg.out_dir, "report.json"), report.dump() + "\n")
        for seed, runs in contours.items():
            lines = ["step,height"]
            step = 0
            height = 0
            lines.append("0,0")
            for r in runs:
                step += abs(r)
                height += r
                lines.append(f"{step},{height}")
            _atomic_write(os.path.join(cfg.out_dir, f"contour-{seed}.csv"),
                          "\n".join(lines) + "\n")
    return report
