"""Shared helpers for building randomized-but-reproducible test cases."""

from __future__ import annotations

import math

import numpy as np

from qwalk import DisorderKind, Schedule2DSpec, ScheduleSpec

ALL_KINDS = (DisorderKind.UNIFORM, DisorderKind.SPATIAL,
             DisorderKind.TEMPORAL, DisorderKind.SPATIO_TEMPORAL)


def random_schedule_spec(rng: np.random.Generator, steps: int, halfwidth: int,
                         index: int) -> ScheduleSpec:
    kind = ALL_KINDS[index % 4]
    return ScheduleSpec(
        kind=kind,
        steps=steps,
        halfwidth=halfwidth,
        seed=int(rng.integers(2**63)),
        base_theta=float(rng.uniform(0.1, math.pi - 0.1)),
        fraction=0.0 if kind is DisorderKind.UNIFORM
        else float(rng.choice([0.2, 0.5, 1.0])),
        su2=bool(index % 2),
    )


def random_schedule_spec_2d(rng: np.random.Generator, steps: int,
                            halfwidth: int, index: int) -> Schedule2DSpec:
    kind = ALL_KINDS[index % 4]
    return Schedule2DSpec(
        kind=kind,
        steps=steps,
        halfwidth=halfwidth,
        seed=int(rng.integers(2**63)),
        base_theta=float(rng.uniform(0.1, math.pi - 0.1)),
        base_vartheta=float(rng.uniform(0.1, math.pi - 0.1)),
        fraction=0.0 if kind is DisorderKind.UNIFORM
        else float(rng.choice([0.2, 0.5, 1.0])),
    )


def random_initial(rng: np.random.Generator):
    from qwalk import InitialSpec

    return InitialSpec(float(rng.uniform(0.0, math.pi)),
                       float(rng.uniform(0.0, 2.0 * math.pi)))
