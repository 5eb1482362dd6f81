"""Command-line entry point.

Subcommands::

    qwalk run CONFIG.json [--seed N] [--ensemble N] [--workers N]
                          [--out DIR] [--overwrite]
    qwalk preset NAME | --list [--show] [run options]
    qwalk dispersion --k-min A --k-max B --k-steps N
                     --theta T [T ...] [--phi P [P ...]]
                     [--out DIR] [--overwrite]

Exit codes: 0 success, 2 config error, 3 numerical invariant violation.
``QWALK_WORKERS`` sets the default worker count for ensembles.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .errors import ConfigError, InvariantError
from .experiment import run_experiment
from .presets import PRESETS, preset

__all__ = ["main"]

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INVARIANT = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwalk",
        description="Discrete-time quantum walk experiments with coin disorder.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_run_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--seed", type=int, default=None,
                       help="override the base seed")
        p.add_argument("--ensemble", type=int, default=None,
                       help="override the ensemble size")
        p.add_argument("--workers", type=int, default=None,
                       help="parallel realizations (default: QWALK_WORKERS or 1)")
        p.add_argument("--out", type=str, default=None,
                       help="output directory")
        p.add_argument("--overwrite", action="store_true",
                       help="replace existing output files")

    p_run = sub.add_parser("run", help="run a JSON experiment config")
    p_run.add_argument("config", type=str,
                       help="path to a config object or list of configs")
    add_run_options(p_run)

    p_preset = sub.add_parser("preset", help="run a named figure preset")
    p_preset.add_argument("name", nargs="?", help="preset name")
    p_preset.add_argument("--list", action="store_true", dest="list_presets",
                          help="list available presets")
    p_preset.add_argument("--show", action="store_true",
                          help="print the preset's configs instead of running")
    add_run_options(p_preset)

    p_disp = sub.add_parser("dispersion", help="sweep the dispersion relation")
    p_disp.add_argument("--k-min", type=float, required=True)
    p_disp.add_argument("--k-max", type=float, required=True)
    p_disp.add_argument("--k-steps", type=int, required=True,
                        help="number of k grid points")
    p_disp.add_argument("--theta", type=float, nargs="+", required=True)
    p_disp.add_argument("--phi", type=float, nargs="+", default=[0.0])
    p_disp.add_argument("--name", type=str, default="dispersion")
    p_disp.add_argument("--out", type=str, default=None)
    p_disp.add_argument("--overwrite", action="store_true")
    return parser


def _run_configs(configs: list[dict[str, Any]], out_dir: Path,
                 args: argparse.Namespace) -> int:
    for cfg in configs:
        summary = run_experiment(
            cfg, out_dir,
            seed=getattr(args, "seed", None),
            ensemble=getattr(args, "ensemble", None),
            workers=getattr(args, "workers", None),
            overwrite=args.overwrite,
        )
        res = summary["results"]
        bits = [f"{summary['name']}: config={summary['config_hash']}"]
        if "sigma_final_mean" in res:
            bits.append(f"sigma_final={res['sigma_final_mean']:.6g}")
        if "entropy_final_mean" in res:
            bits.append(f"entropy_final={res['entropy_final_mean']:.6g}")
        if "norm_drift_max" in res:
            bits.append(f"norm_drift={res['norm_drift_max']:.3g}")
        if "rows" in res:
            bits.append(f"rows={res['rows']}")
        print("  ".join(bits))
    return EXIT_OK


def _cmd_run(args: argparse.Namespace) -> int:
    path = Path(args.config)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    configs = raw if isinstance(raw, list) else [raw]
    out_dir = Path(args.out) if args.out else Path("qwalk_out") / path.stem
    return _run_configs(configs, out_dir, args)


def _cmd_preset(args: argparse.Namespace) -> int:
    if args.list_presets:
        for name in sorted(PRESETS):
            print(f"{name}  ({len(PRESETS[name])} runs)")
        return EXIT_OK
    if not args.name:
        raise ConfigError("preset name required (or --list)")
    try:
        configs = preset(args.name)
    except KeyError:
        raise ConfigError(
            f"unknown preset {args.name!r}; try 'qwalk preset --list'") from None
    if args.show:
        print(json.dumps(configs, indent=2, sort_keys=True))
        return EXIT_OK
    out_dir = Path(args.out) if args.out else Path("qwalk_out") / args.name
    return _run_configs(configs, out_dir, args)


def _cmd_dispersion(args: argparse.Namespace) -> int:
    cfg = {
        "experiment": "dispersion-sweep",
        "name": args.name,
        "k_min": args.k_min,
        "k_max": args.k_max,
        "k_points": args.k_steps,
        "thetas": args.theta,
        "phis": args.phi,
    }
    out_dir = Path(args.out) if args.out else Path("qwalk_out") / args.name
    return _run_configs([cfg], out_dir, args)


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "preset":
            return _cmd_preset(args)
        return _cmd_dispersion(args)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InvariantError as exc:
        print(f"numerical invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
