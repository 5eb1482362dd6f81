"""Named experiment bundles reproducing each published-figure dataset.

A preset maps to a list of experiment configs; running a preset runs every
member into one output directory, so each figure's data is one command.
Member names double as curve labels.  Defaults that the source material
leaves open (initial spinor, base angles for the 2D walk, seeds) are set
here and are plain config fields, so any of them can be overridden.
"""

from __future__ import annotations

import math
from typing import Any

__all__ = ["PRESETS", "preset"]

_QUARTER = math.pi / 4.0
_BASE_SEED = 11

_DISORDER_KINDS = ("spatial", "temporal", "spatio-temporal")


def _walk1d(name: str, kind: str, fraction: float, *, steps: int = 100,
            ensemble: int = 1, seed: int = _BASE_SEED,
            distribution: str = "final") -> dict[str, Any]:
    return {
        "experiment": "walk1d",
        "name": name,
        "kind": kind,
        "fraction": fraction,
        "steps": steps,
        "seed": seed,
        "ensemble": ensemble,
        "record": {"sigma": True, "entropy": True, "distribution": distribution},
    }


def _walk2d(name: str, kind: str, fraction: float, *, steps: int = 50,
            ensemble: int = 1, seed: int = _BASE_SEED) -> dict[str, Any]:
    return {
        "experiment": "walk2d",
        "name": name,
        "kind": kind,
        "fraction": fraction,
        "steps": steps,
        "seed": seed,
        "ensemble": ensemble,
        "record": {"sigma": True, "entropy": True, "distribution": "final"},
    }


def _four_kinds_1d(prefix: str, fraction: float, **kw: Any) -> list[dict[str, Any]]:
    members = [_walk1d(f"{prefix}-standard", "uniform", 0.0, **kw)]
    members += [_walk1d(f"{prefix}-{kind}", kind, fraction, **kw)
                for kind in _DISORDER_KINDS]
    return members


def _fraction_sweep(prefix: str, **kw: Any) -> list[dict[str, Any]]:
    members = []
    for kind in _DISORDER_KINDS:
        for pct in range(0, 101, 10):
            members.append(
                _walk1d(f"{prefix}-{kind}-f{pct:03d}", kind, pct / 100.0, **kw))
    return members


PRESETS: dict[str, list[dict[str, Any]]] = {
    # group velocity versus theta for a few wave numbers
    "fig1a": [{
        "experiment": "dispersion-sweep",
        "name": f"fig1a-k{ik}",
        "k_min": k, "k_max": k, "k_points": 1,
        "thetas": [i * math.pi / 180.0 for i in range(0, 181)],
        "phis": [0.0],
    } for ik, k in enumerate((0.25, 0.5, 0.75, 1.0, 1.25, math.sqrt(2.0)))],
    # group velocity versus k for a few coin angles
    "fig1b": [{
        "experiment": "dispersion-sweep",
        "name": f"fig1b-theta{it}",
        "k_min": -math.sqrt(2.0), "k_max": math.sqrt(2.0), "k_points": 201,
        "thetas": [t], "phis": [0.0],
    } for it, t in enumerate((0.0, math.pi / 6.0, _QUARTER, math.pi / 3.0,
                              math.pi / 2.5))],
    # final-distribution comparisons at 20% and 100% disorder
    "fig2a": _four_kinds_1d("fig2a", 0.2),
    "fig2b": _four_kinds_1d("fig2b", 1.0),
    # standard deviation growth and its disorder-percentage dependence
    "fig3a": _four_kinds_1d("fig3a", 1.0, distribution="none"),
    "fig3b": _fraction_sweep("fig3b", ensemble=10, distribution="none"),
    # 2D distributions after 50 steps, one disorder kind per panel
    "fig4a": [_walk2d("fig4a-standard", "uniform", 0.0),
              _walk2d("fig4a-spatial", "spatial", 1.0)],
    "fig4b": [_walk2d("fig4b-standard", "uniform", 0.0),
              _walk2d("fig4b-temporal", "temporal", 1.0)],
    "fig4c": [_walk2d("fig4c-standard", "uniform", 0.0),
              _walk2d("fig4c-spatio-temporal", "spatio-temporal", 1.0)],
    # particle-position entanglement versus steps and versus disorder share
    "fig5a": _four_kinds_1d("fig5a", 1.0, distribution="none"),
    "fig5b": _fraction_sweep("fig5b", ensemble=10, distribution="none"),
    # 2D entanglement versus steps
    "fig6": [_walk2d("fig6-standard", "uniform", 0.0)]
            + [_walk2d(f"fig6-{kind}", kind, 1.0) for kind in _DISORDER_KINDS],
    # effective-velocity decay with averaging window
    "vgdecay": [{
        "experiment": "vg-effective",
        "name": "vgdecay",
        "kinds": list(_DISORDER_KINDS),
        "times": [10, 100, 1000],
        "k": 1.0,
        "seed": _BASE_SEED,
        "ensemble": 20,
    }],
}


def preset(name: str) -> list[dict[str, Any]]:
    """Return the config list for a named preset (copies, safe to edit)."""
    if name not in PRESETS:
        raise KeyError(name)
    import copy

    return copy.deepcopy(PRESETS[name])
