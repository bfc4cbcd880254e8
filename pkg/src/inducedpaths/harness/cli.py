"""Command-line interface.

Subcommands:
  theory    print the fixed points and length bounds for a distribution
  simulate  run one exploration per seed and dump JSON (plus contour CSV)
  compare   run replicated seeds and emit the full comparison report
  profile   write the limiting contour profile as CSV

An optional --config JSON file supplies the same keys as the flags;
explicitly passed flags win. Exit codes: 0 success, 2 configuration error,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys

from ..degseq import DegreeDistribution, DegreeSequence, sample_degree_sequence
from ..errors import ConfigError, DomainViolation, NumericalError, SubcriticalError
from .config import DEFAULT_TOLERANCES, ExperimentConfig, parse_seeds

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dist", default=None,
                   help="regular:D | poisson:C | file:PATH (degree sequence, one per line)")
    p.add_argument("--config", default=None, help="JSON file with the same keys; flags win")
    p.add_argument("--out", default=None, help="output directory")
    for key, default in DEFAULT_TOLERANCES.items():
        flag = "--tol-" + key.replace("_", "-")
        p.add_argument(flag, type=float, default=None, dest=f"tol_{key}",
                       help=f"override tolerance {key} (default {default})")


def _tolerances(args) -> dict:
    out = {}
    for key in DEFAULT_TOLERANCES:
        val = getattr(args, f"tol_{key}", None)
        if val is not None:
            out[key] = int(val) if key == "profile_grid" else val
    return out


def _merge_config_file(args) -> None:
    if not getattr(args, "config", None):
        return
    with open(args.config, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    for key, val in data.items():
        attr = key.replace("-", "_")
        if hasattr(args, attr) and getattr(args, attr) is None:
            setattr(args, attr, val)


def _require(args, attr, fallback=None):
    val = getattr(args, attr, None)
    if val is None:
        val = fallback
    if val is None:
        raise ConfigError(f"missing required option --{attr.replace('_', '-')}")
    return val


def _dist_args(args) -> tuple[str, str | None]:
    spec = _require(args, "dist")
    if spec.startswith("file:"):
        path = spec[len("file:"):]
        if not os.path.exists(path):
            raise ConfigError(f"degree file not found: {path}")
        return spec, path
    DegreeDistribution.parse(spec)  # validate early
    return spec, None


def _load_dist(args) -> DegreeDistribution:
    spec, path = _dist_args(args)
    if path is not None:
        return DegreeSequence.load(path).empirical_distribution()
    return DegreeDistribution.parse(spec)


def _print_json(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=1) + "\n")


def cmd_theory(args) -> int:
    from ..theory import build_theory_report

    tol = {**DEFAULT_TOLERANCES, **_tolerances(args)}
    m_values = args.m_values if args.m_values is not None else [2]
    report = build_theory_report(_load_dist(args), m_values=tuple(m_values),
                                 tolerances=tol)
    _print_json(report.to_json_dict())
    return EXIT_OK


def cmd_simulate(args) -> int:
    from ..explore import run_induced_dfs, run_m_induced_dfs

    spec, path = _dist_args(args)
    seeds = parse_seeds(_require(args, "seeds", "1"))
    m = int(_require(args, "m", 1))
    delta = float(_require(args, "delta", 0.3))
    base = DegreeSequence.load(path) if path is not None else None
    for seed in seeds:
        if base is not None and (args.n is None or args.n == len(base)):
            seq = base
        else:
            if args.n is None:
                raise ConfigError("--n is required unless file: length is used")
            dist = (base.empirical_distribution() if base is not None
                    else DegreeDistribution.parse(spec))
            seq = sample_degree_sequence(dist, args.n, seed)
        if m > 1:
            res = run_m_induced_dfs(seq, m, seed, delta=delta)
        else:
            res = run_induced_dfs(seq, seed, delta=delta)
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            res.save_json(os.path.join(args.out, f"run-{seed}.json"))
            res.contour.write_csv(os.path.join(args.out, f"contour-{seed}.csv"))
        else:
            _print_json(res.to_json_dict())
    return EXIT_OK


def cmd_compare(args) -> int:
    from .experiment import run_experiment

    spec, path = _dist_args(args)
    if args.n is None:
        raise ConfigError("--n is required")
    alphas = _require(args, "alphas", "0.1,0.3")
    cfg = ExperimentConfig(
        dist_spec=spec,
        n=int(args.n),
        seeds=parse_seeds(_require(args, "seeds", "1..10")),
        algorithm=_require(args, "algorithm", "induced-dfs"),
        m=int(_require(args, "m", 1)),
        delta=float(_require(args, "delta", 0.3)),
        alphas=tuple(float(a) for a in str(alphas).split(",")),
        out_dir=args.out,
        workers=int(_require(args, "workers", 1)),
        tolerances=_tolerances(args),
        degrees_file=path,
    )
    report = run_experiment(cfg)
    _print_json(report.to_json_dict())
    return EXIT_OK


def cmd_profile(args) -> int:
    from ..theory import GenFn, profile

    tol = {**DEFAULT_TOLERANCES, **_tolerances(args)}
    curve = profile(GenFn.from_distribution(_load_dist(args)),
                    n_grid=int(tol["profile_grid"]), rho_min=tol["profile_rho_min"])
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        curve.write_csv(os.path.join(args.out, "profile.csv"))
    else:
        buf = io.StringIO()
        buf.write("rho,x_up,y_up,x_down,y_down\n")
        for i in range(len(curve.rho)):
            buf.write(f"{curve.rho[i]!r},{curve.x_up[i]!r},{curve.y_up[i]!r},"
                      f"{curve.x_down[i]!r},{curve.y_down[i]!r}\n")
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="inducedpaths",
                                 description="Induced-path exploration lab")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("theory", help="fixed points and length bounds")
    _add_common(p)
    p.add_argument("--m-values", type=int, nargs="*", default=None,
                   help="extra m values for the m-neighborhood bound (default: 2)")
    p.set_defaults(fn=cmd_theory)

    p = sub.add_parser("simulate", help="run explorations and dump results")
    _add_common(p)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--seeds", default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--delta", type=float, default=None)
    p.set_defaults(fn=cmd_simulate)

    p = sub.add_parser("compare", help="replicated runs vs theory")
    _add_common(p)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--seeds", default=None)
    p.add_argument("--algorithm", choices=("induced-dfs", "frieze-jackson", "m-induced"),
                   default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--delta", type=float, default=None)
    p.add_argument("--alphas", default=None, help="comma list, default 0.1,0.3")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("profile", help="limiting contour profile CSV")
    _add_common(p)
    p.set_defaults(fn=cmd_profile)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else EXIT_OK
    try:
        _merge_config_file(args)
        return args.fn(args)
    except (SubcriticalError, NumericalError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ConfigError, DomainViolation, FileNotFoundError, ValueError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
