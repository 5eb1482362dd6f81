"""Reproducible experiment driver: configs in, bit-stable CSV/JSON out.

A config is a JSON object with an ``experiment`` discriminator
(``walk1d``, ``walk2d``, ``dispersion-sweep``, ``vg-effective``).  The
normalized config (defaults filled, overrides applied) fully determines
every output byte; its SHA-256 hash and a format-version tag are embedded
in a header comment line of every file written.

Ensembles run the seeds ``seed, seed+1, ..., seed+ensemble-1`` and emit
per-seed files plus a mean/median aggregate.  Floats are printed with 17
significant digits so the CSVs round-trip losslessly.
"""

from __future__ import annotations

import concurrent.futures
import hashlib
import json
import math
import os
from pathlib import Path
from typing import Any

import numpy as np

from .disorder import (
    DisorderKind,
    Schedule2DSpec,
    ScheduleSpec,
    build_schedule,
    build_schedule_2d,
)
from .dispersion import effective_group_velocity_stats, omega_su2
from .errors import ConfigError, InvariantError
from .evolve1d import RecordFlags, run_1d
from .evolve2d import run_2d
from .state import InitialSpec, total_norm

__all__ = ["FORMAT_VERSION", "normalize_config", "config_hash", "run_experiment"]

FORMAT_VERSION = "qwalk-v1"
NORM_TOL = 1e-12

_KINDS = {k.value: k for k in DisorderKind}


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ConfigError(msg)


def normalize_config(raw: dict[str, Any], *, seed: int | None = None,
                     ensemble: int | None = None) -> dict[str, Any]:
    """Fill defaults, apply overrides, and validate field by field.

    Returns a plain dict whose canonical JSON form is hashed into output
    headers.  Raises ``ConfigError`` naming the offending field.
    """
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    experiment = raw.get("experiment")
    _require(experiment in ("walk1d", "walk2d", "dispersion-sweep", "vg-effective"),
             f"experiment: unknown value {experiment!r}")
    name = raw.get("name", experiment)
    _require(isinstance(name, str) and name != "" and "/" not in name,
             "name: must be a non-empty string without '/'")

    cfg: dict[str, Any] = {"format": FORMAT_VERSION, "experiment": experiment,
                           "name": name}

    if experiment in ("walk1d", "walk2d"):
        init = raw.get("initial", {})
        delta = float(init.get("delta", math.pi / 2.0))
        eta = float(init.get("eta", math.pi / 2.0))
        InitialSpec(delta, eta)
        steps = int(raw.get("steps", 100))
        halfwidth = int(raw.get("halfwidth", steps))
        kind = raw.get("kind", "uniform")
        _require(kind in _KINDS, f"kind: unknown value {kind!r}")
        cfg.update({
            "initial": {"delta": delta, "eta": eta},
            "kind": kind,
            "steps": steps,
            "halfwidth": halfwidth,
            "base_theta": float(raw.get("base_theta", math.pi / 4.0)),
            "fraction": float(raw.get("fraction", 1.0)),
            "seed": int(seed if seed is not None else raw.get("seed", 0)),
            "ensemble": int(ensemble if ensemble is not None
                            else raw.get("ensemble", 1)),
        })
        _require(cfg["ensemble"] >= 1, "ensemble: must be >= 1")
        rec = raw.get("record", {})
        cfg["record"] = {
            "sigma": bool(rec.get("sigma", True)),
            "entropy": bool(rec.get("entropy", True)),
            "distribution": str(rec.get("distribution", "final")),
        }
        _require(cfg["record"]["distribution"] in ("none", "final", "each"),
                 "record.distribution: must be none|final|each")
        if experiment == "walk1d":
            cfg["su2"] = bool(raw.get("su2", False))
            ScheduleSpec(kind=_KINDS[kind], steps=steps, halfwidth=halfwidth,
                         seed=cfg["seed"], base_theta=cfg["base_theta"],
                         fraction=cfg["fraction"], su2=cfg["su2"])
        else:
            cfg["base_vartheta"] = float(raw.get("base_vartheta", math.pi / 4.0))
            Schedule2DSpec(kind=_KINDS[kind], steps=steps, halfwidth=halfwidth,
                           seed=cfg["seed"], base_theta=cfg["base_theta"],
                           base_vartheta=cfg["base_vartheta"],
                           fraction=cfg["fraction"])
    elif experiment == "dispersion-sweep":
        k_min = float(raw.get("k_min", -math.sqrt(2.0)))
        k_max = float(raw.get("k_max", math.sqrt(2.0)))
        k_points = int(raw.get("k_points", 101))
        _require(k_points >= 1, "k_points: must be >= 1")
        _require(k_min <= k_max, "k_min must not exceed k_max")
        thetas = [float(v) for v in raw.get("thetas", [math.pi / 4.0])]
        phis = [float(v) for v in raw.get("phis", [0.0])]
        _require(len(thetas) >= 1, "thetas: need at least one value")
        _require(len(phis) >= 1, "phis: need at least one value")
        cfg.update({"k_min": k_min, "k_max": k_max, "k_points": k_points,
                    "thetas": thetas, "phis": phis})
    else:  # vg-effective
        kinds = raw.get("kinds", ["spatial", "temporal", "spatio-temporal"])
        _require(isinstance(kinds, list) and kinds, "kinds: need a non-empty list")
        for k in kinds:
            _require(k in _KINDS and k != "uniform",
                     f"kinds: {k!r} is not a disorder kind")
        times = [int(v) for v in raw.get("times", [10, 100, 1000])]
        _require(all(v >= 1 for v in times), "times: all entries must be >= 1")
        cfg.update({
            "kinds": list(kinds),
            "times": sorted(times),
            "k": float(raw.get("k", 1.0)),
            "fraction": float(raw.get("fraction", 1.0)),
            "base_theta": float(raw.get("base_theta", math.pi / 4.0)),
            "seed": int(seed if seed is not None else raw.get("seed", 0)),
            "ensemble": int(ensemble if ensemble is not None
                            else raw.get("ensemble", 20)),
        })
        _require(cfg["ensemble"] >= 1, "ensemble: must be >= 1")
    return cfg


def config_hash(cfg: dict[str, Any]) -> str:
    blob = json.dumps(cfg, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _header(cfg: dict[str, Any], seed: int | None = None) -> str:
    tail = f" seed={seed}" if seed is not None else ""
    return f"# {FORMAT_VERSION} config={config_hash(cfg)}{tail}\n"


def _walk1d_realization(cfg: dict[str, Any], seed: int) -> dict[str, Any]:
    spec = ScheduleSpec(kind=_KINDS[cfg["kind"]], steps=cfg["steps"],
                        halfwidth=cfg["halfwidth"], seed=seed,
                        base_theta=cfg["base_theta"], fraction=cfg["fraction"],
                        su2=cfg["su2"])
    rec = cfg["record"]
    traj = run_1d(
        InitialSpec(cfg["initial"]["delta"], cfg["initial"]["eta"]),
        build_schedule(spec),
        steps=cfg["steps"],
        record=RecordFlags(sigma=True, entropy=rec["entropy"],
                           distribution=rec["distribution"], final_state=True),
    )
    drift = abs(total_norm(traj.final_state) - 1.0)
    return {"seed": seed, "sigma": traj.sigma, "entropy": traj.entropy,
            "distributions": traj.distributions,
            "final_distribution": traj.final_distribution,
            "halfwidth": cfg["halfwidth"], "drift": drift}


def _walk2d_realization(cfg: dict[str, Any], seed: int) -> dict[str, Any]:
    spec = Schedule2DSpec(kind=_KINDS[cfg["kind"]], steps=cfg["steps"],
                          halfwidth=cfg["halfwidth"], seed=seed,
                          base_theta=cfg["base_theta"],
                          base_vartheta=cfg["base_vartheta"],
                          fraction=cfg["fraction"])
    rec = cfg["record"]
    traj = run_2d(
        InitialSpec(cfg["initial"]["delta"], cfg["initial"]["eta"]),
        build_schedule_2d(spec),
        steps=cfg["steps"],
        record_entropy=rec["entropy"],
        record_distribution=rec["distribution"] != "none",
        keep_final_state=True,
    )
    drift = abs(total_norm(traj.final_state) - 1.0)
    return {"seed": seed, "sigma": traj.sigma_r, "entropy": traj.entropy,
            "distributions": None,
            "final_distribution": traj.final_distribution,
            "halfwidth": cfg["halfwidth"], "drift": drift}


def _write_trajectory(path: Path, cfg: dict, seed: int, res: dict,
                      sigma_label: str) -> None:
    cols = ["t"]
    if cfg["record"]["sigma"]:
        cols.append(sigma_label)
    if cfg["record"]["entropy"]:
        cols.append("entropy")
    with path.open("w", newline="") as fh:
        fh.write(_header(cfg, seed))
        fh.write(",".join(cols) + "\n")
        for t in range(len(res["sigma"])):
            row = [str(t)]
            if cfg["record"]["sigma"]:
                row.append(_fmt(res["sigma"][t]))
            if cfg["record"]["entropy"]:
                row.append(_fmt(res["entropy"][t]))
            fh.write(",".join(row) + "\n")


def _write_distribution_1d(path: Path, cfg: dict, seed: int, res: dict) -> None:
    half = res["halfwidth"]
    xs = range(-half, half + 1)
    with path.open("w", newline="") as fh:
        fh.write(_header(cfg, seed))
        fh.write("t,x,prob\n")
        if res["distributions"] is not None:
            frames = list(enumerate(res["distributions"]))
        else:
            frames = [(cfg["steps"], res["final_distribution"])]
        for t, dist in frames:
            for i, x in enumerate(xs):
                fh.write(f"{t},{x},{_fmt(dist[i])}\n")


def _write_distribution_2d(path: Path, cfg: dict, seed: int, res: dict) -> None:
    half = res["halfwidth"]
    dist = res["final_distribution"]
    with path.open("w", newline="") as fh:
        fh.write(_header(cfg, seed))
        fh.write("t,x,y,prob\n")
        t = cfg["steps"]
        for i in range(dist.shape[0]):
            for j in range(dist.shape[1]):
                p = dist[i, j]
                if p != 0.0:
                    fh.write(f"{t},{i - half},{j - half},{_fmt(p)}\n")


def _write_aggregate(path: Path, cfg: dict, results: list[dict],
                     sigma_label: str) -> None:
    sig = np.stack([r["sigma"] for r in results])
    ent = (np.stack([r["entropy"] for r in results])
           if cfg["record"]["entropy"] else None)
    with path.open("w", newline="") as fh:
        fh.write(_header(cfg))
        cols = ["t", f"{sigma_label}_mean", f"{sigma_label}_median"]
        if ent is not None:
            cols += ["entropy_mean", "entropy_median"]
        fh.write(",".join(cols) + "\n")
        for t in range(sig.shape[1]):
            row = [str(t), _fmt(float(np.mean(sig[:, t]))),
                   _fmt(float(np.median(sig[:, t])))]
            if ent is not None:
                row += [_fmt(float(np.mean(ent[:, t]))),
                        _fmt(float(np.median(ent[:, t])))]
            fh.write(",".join(row) + "\n")


def _run_walk(cfg: dict[str, Any], out: Path, workers: int) -> dict[str, Any]:
    is_1d = cfg["experiment"] == "walk1d"
    sigma_label = "sigma" if is_1d else "sigma_r"
    realization = _walk1d_realization if is_1d else _walk2d_realization
    seeds = [cfg["seed"] + i for i in range(cfg["ensemble"])]

    if workers > 1 and len(seeds) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(realization, [cfg] * len(seeds), seeds))
    else:
        results = [realization(cfg, s) for s in seeds]

    for seed, res in zip(seeds, results):
        _write_trajectory(out / f"{cfg['name']}.seed{seed}.trajectory.csv",
                          cfg, seed, res, sigma_label)
        if cfg["record"]["distribution"] != "none":
            writer = _write_distribution_1d if is_1d else _write_distribution_2d
            writer(out / f"{cfg['name']}.seed{seed}.distribution.csv",
                   cfg, seed, res)
    if len(seeds) > 1:
        _write_aggregate(out / f"{cfg['name']}.aggregate.csv", cfg, results,
                         sigma_label)

    drift = max(r["drift"] for r in results)
    if drift > NORM_TOL:
        raise InvariantError(f"norm drift {drift} exceeds {NORM_TOL}")
    summary = {
        "sigma_final_mean": float(np.mean([r["sigma"][-1] for r in results])),
        "sigma_final_median": float(np.median([r["sigma"][-1] for r in results])),
        "norm_drift_max": drift,
        "per_seed": {str(r["seed"]): {"sigma_final": float(r["sigma"][-1])}
                     for r in results},
    }
    if cfg["record"]["entropy"]:
        summary["entropy_final_mean"] = float(
            np.mean([r["entropy"][-1] for r in results]))
        summary["entropy_final_median"] = float(
            np.median([r["entropy"][-1] for r in results]))
        for r in results:
            summary["per_seed"][str(r["seed"])]["entropy_final"] = float(
                r["entropy"][-1])
    return summary


def _run_dispersion_sweep(cfg: dict[str, Any], out: Path) -> dict[str, Any]:
    ks = (np.linspace(cfg["k_min"], cfg["k_max"], cfg["k_points"])
          if cfg["k_points"] > 1 else np.array([cfg["k_min"]]))
    rows = 0
    with (out / f"{cfg['name']}.dispersion.csv").open("w", newline="") as fh:
        fh.write(_header(cfg))
        fh.write("k,theta,phi,omega,v_p,v_g,propagating\n")
        for theta in cfg["thetas"]:
            for phi in cfg["phis"]:
                for k in ks:
                    p = omega_su2(float(k), theta, phi)
                    fh.write(
                        f"{_fmt(float(k))},{_fmt(theta)},{_fmt(phi)},"
                        f"{_fmt(p.omega)},{_fmt(p.v_p)},{_fmt(p.v_g)},"
                        f"{int(p.propagating)}\n")
                    rows += 1
    return {"rows": rows}


def _run_vg_effective(cfg: dict[str, Any], out: Path) -> dict[str, Any]:
    t_max = max(cfg["times"])
    seeds = [cfg["seed"] + i for i in range(cfg["ensemble"])]
    rows = 0
    with (out / f"{cfg['name']}.vg.csv").open("w", newline="") as fh:
        fh.write(_header(cfg))
        fh.write("kind,k,t,seed,v_g,n_terms,n_nonpropagating,n_singular\n")
        for kind_name in cfg["kinds"]:
            kind = _KINDS[kind_name]
            for seed in seeds:
                spec = ScheduleSpec(kind=kind, steps=t_max, halfwidth=t_max + 1,
                                    seed=seed, base_theta=cfg["base_theta"],
                                    fraction=cfg["fraction"])
                schedule = build_schedule(spec)
                for t in cfg["times"]:
                    st = effective_group_velocity_stats(kind, schedule,
                                                        cfg["k"], t)
                    fh.write(f"{kind_name},{_fmt(cfg['k'])},{t},{seed},"
                             f"{_fmt(st.value)},{st.n_terms},"
                             f"{st.n_nonpropagating},{st.n_singular}\n")
                    rows += 1
    return {"rows": rows}


def _planned_files(cfg: dict[str, Any], out: Path) -> list[Path]:
    name = cfg["name"]
    if cfg["experiment"] in ("walk1d", "walk2d"):
        seeds = [cfg["seed"] + i for i in range(cfg["ensemble"])]
        files = [out / f"{name}.seed{s}.trajectory.csv" for s in seeds]
        if cfg["record"]["distribution"] != "none":
            files += [out / f"{name}.seed{s}.distribution.csv" for s in seeds]
        if len(seeds) > 1:
            files.append(out / f"{name}.aggregate.csv")
    elif cfg["experiment"] == "dispersion-sweep":
        files = [out / f"{name}.dispersion.csv"]
    else:
        files = [out / f"{name}.vg.csv"]
    files.append(out / f"{name}.summary.json")
    return files


def run_experiment(raw_config: dict[str, Any],
                   out_dir: str | Path,
                   *,
                   seed: int | None = None,
                   ensemble: int | None = None,
                   workers: int | None = None,
                   overwrite: bool = False) -> dict[str, Any]:
    """Run one experiment config and write its output files.

    Returns the summary record (also written as ``<name>.summary.json``).
    Existing output files abort the run unless ``overwrite`` is set.
    """
    cfg = normalize_config(raw_config, seed=seed, ensemble=ensemble)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if workers is None:
        workers = int(os.environ.get("QWALK_WORKERS", "1"))
    if not overwrite:
        clashes = [str(p) for p in _planned_files(cfg, out) if p.exists()]
        if clashes:
            raise ConfigError(
                "output files already exist (pass overwrite): "
                + ", ".join(clashes))

    if cfg["experiment"] in ("walk1d", "walk2d"):
        results = _run_walk(cfg, out, workers)
    elif cfg["experiment"] == "dispersion-sweep":
        results = _run_dispersion_sweep(cfg, out)
    else:
        results = _run_vg_effective(cfg, out)

    summary = {"format": FORMAT_VERSION, "name": cfg["name"],
               "experiment": cfg["experiment"], "config_hash": config_hash(cfg),
               "config": cfg, "results": results}
    with (out / f"{cfg['name']}.summary.json").open("w") as fh:
        json.dump(summary, fh, sort_keys=True, indent=2)
        fh.write("\n")
    return summary
