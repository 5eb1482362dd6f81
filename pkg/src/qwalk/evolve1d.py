"""One-dimensional walk evolution under an arbitrary coin schedule.

A step is shift-then-coin.  With coin entries ``a_ij(x)`` taken at the
target site ``x``, the amplitude update is::

    up(x, t+1)   = a11(x) * up(x+1, t) + a12(x) * down(x-1, t)
    down(x, t+1) = a21(x) * up(x+1, t) + a22(x) * down(x-1, t)

The kernel reads from the t-buffer and writes a fresh t+1 buffer, so there
is no aliasing hazard; off-lattice neighbors are zero by the light-cone
bound, which the capacity precondition keeps unreachable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .disorder import CoinSchedule, DisorderKind
from .errors import ConfigError, LightConeError
from .observables import (
    entanglement_entropy,
    position_distribution,
    reduced_density,
    standard_deviation,
)
from .state import InitialSpec, WalkState1D, make_initial_state_1d

__all__ = ["RecordFlags", "Trajectory1D", "coin_entry_rows", "step_1d", "run_1d"]


@dataclass(frozen=True)
class RecordFlags:
    """Which observables a run records.

    ``distribution`` is one of ``"none"``, ``"final"``, ``"each"``.
    """

    sigma: bool = True
    entropy: bool = False
    distribution: str = "none"
    final_state: bool = False

    def __post_init__(self) -> None:
        if self.distribution not in ("none", "final", "each"):
            raise ConfigError(
                f"distribution flag must be none|final|each, got {self.distribution!r}")


@dataclass
class Trajectory1D:
    """Per-step observable records, including the t = 0 point."""

    times: np.ndarray
    sigma: np.ndarray | None
    entropy: np.ndarray | None
    distributions: list[np.ndarray] | None
    final_distribution: np.ndarray | None
    final_state: WalkState1D | None


def coin_entry_rows(xi: np.ndarray, theta: np.ndarray, zeta: np.ndarray
                    ) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Per-position coin entries (a11, a12, a21, a22) from angle rows."""
    c = np.cos(theta)
    s = np.sin(theta)
    ps = np.exp(1j * (xi + zeta))
    pd = np.exp(1j * (xi - zeta))
    return ps * c, pd * s, -np.conj(pd) * s, np.conj(ps) * c


def _step_amps(amps: np.ndarray, entries) -> np.ndarray:
    a11, a12, a21, a22 = entries
    up_in = np.zeros_like(amps[0])
    down_in = np.zeros_like(amps[1])
    up_in[:-1] = amps[0, 1:]      # up component arrives from x+1
    down_in[1:] = amps[1, :-1]    # down component arrives from x-1
    return np.stack((a11 * up_in + a12 * down_in,
                     a21 * up_in + a22 * down_in))


def step_1d(state: WalkState1D,
            coin_row: tuple[np.ndarray, np.ndarray, np.ndarray]) -> WalkState1D:
    """Advance one step under per-position angles ``(xi, theta, zeta)``.

    Each row must have length ``2*halfwidth + 1``.
    """
    if state.t + 1 > state.halfwidth:
        raise LightConeError(
            f"step {state.t + 1} would reach the lattice edge (halfwidth "
            f"{state.halfwidth})")
    xi, theta, zeta = (np.asarray(r, dtype=float) for r in coin_row)
    n = 2 * state.halfwidth + 1
    if not (xi.shape == theta.shape == zeta.shape == (n,)):
        raise ConfigError(f"coin rows must have shape ({n},)")
    amps = _step_amps(state.amps, coin_entry_rows(xi, theta, zeta))
    return WalkState1D(t=state.t + 1, halfwidth=state.halfwidth, amps=amps)


def run_1d(initial: InitialSpec,
           schedule: CoinSchedule,
           steps: int | None = None,
           record: RecordFlags = RecordFlags()) -> Trajectory1D:
    """Evolve from the origin state and record observables after each step.

    ``steps`` defaults to the schedule's full length and may not exceed it.
    The t = 0 record comes from the initial state.
    """
    if steps is None:
        steps = schedule.steps
    if not 0 <= steps <= schedule.steps:
        raise ConfigError(
            f"steps = {steps} outside schedule range 0..{schedule.steps}")

    state = make_initial_state_1d(initial, schedule.halfwidth)
    positions = state.positions()

    sigma = np.empty(steps + 1) if record.sigma else None
    entropy = np.empty(steps + 1) if record.entropy else None
    dists: list[np.ndarray] | None = [] if record.distribution == "each" else None

    def _record(i: int, st: WalkState1D) -> None:
        dist = position_distribution(st)
        if sigma is not None:
            sigma[i] = standard_deviation(dist, positions)
        if entropy is not None:
            entropy[i] = entanglement_entropy(reduced_density(st))
        if dists is not None:
            dists.append(dist)

    _record(0, state)
    rows_static = schedule.kind in (DisorderKind.UNIFORM, DisorderKind.SPATIAL)
    entry_rows = None
    for t in range(1, steps + 1):
        if entry_rows is None or not rows_static:
            entry_rows = coin_entry_rows(*schedule.coin_rows(t))
        state = WalkState1D(t=state.t + 1, halfwidth=state.halfwidth,
                            amps=_step_amps(state.amps, entry_rows))
        _record(t, state)

    final_dist = (position_distribution(state)
                  if record.distribution in ("final", "each") else None)
    return Trajectory1D(
        times=np.arange(steps + 1),
        sigma=sigma,
        entropy=entropy,
        distributions=dists,
        final_distribution=final_dist,
        final_state=state if record.final_state else None,
    )
