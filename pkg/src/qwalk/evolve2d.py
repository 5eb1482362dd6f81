"""Two-state walk on the square lattice via alternating Pauli-basis shifts.

One step applies, in order:

1. x-shift: up moves to x-1, down to x+1 (sigma-3 conditioned);
2. the sigma-1-basis coin ``B_y(vartheta)``, stored in the sigma-3 basis;
3. y-shift: the ``|+>`` component moves to y-1, ``|->`` to y+1
   (sigma-1 conditioned, carried out in the sigma-3 basis);
4. the sigma-3 coin ``B_x(theta)``.

Two independent implementations are kept deliberately:

- ``step_2d(..., method="operator")`` performs the four stages one by one;
- ``step_2d(..., method="closed")`` applies the fused single-pass update

    up(x,y,t+1)   = [ (ct+st)(cp+sp) A + (ct+st)(cp-sp) B
                      + (ct-st)(cm-sm) C - (ct-st)(cm+sm) D ] / 2
    down(x,y,t+1) = [ (ct-st)(cp+sp) A + (ct-st)(cp-sp) B
                      - (ct+st)(cm-sm) C + (ct+st)(cm+sm) D ] / 2

  with ``A = up(x+1, y+1)``, ``B = down(x-1, y+1)``, ``C = up(x+1, y-1)``,
  ``D = down(x-1, y-1)``, ``ct/st = cos/sin theta(x, y)`` and
  ``cp/sp`` (``cm/sm``) the cosine/sine of ``vartheta`` at ``(x, y+1)``
  (respectively ``(x, y-1)``), the site where that coin acted.

The two paths must agree to 1e-12; the cross-check guards against
transcription slips in the fused coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .disorder import DisorderKind, Schedule2D
from .errors import ConfigError, LightConeError
from .observables import (
    entanglement_entropy,
    position_distribution,
    radial_standard_deviation,
    reduced_density,
)
from .state import InitialSpec, WalkState2D, make_initial_state_2d

__all__ = ["Trajectory2D", "step_2d", "run_2d"]

_SQRT_HALF = np.sqrt(0.5)


@dataclass
class Trajectory2D:
    """Per-step records for a 2D run, including the t = 0 point."""

    times: np.ndarray
    sigma_r: np.ndarray
    entropy: np.ndarray | None
    final_distribution: np.ndarray | None
    final_state: WalkState2D | None


def _shift_x(amps: np.ndarray) -> np.ndarray:
    out = np.zeros_like(amps)
    out[0, :-1, :] = amps[0, 1:, :]   # up arrives from x+1
    out[1, 1:, :] = amps[1, :-1, :]   # down arrives from x-1
    return out


def _step_operator(amps: np.ndarray, theta: np.ndarray, vartheta: np.ndarray
                   ) -> np.ndarray:
    a = _shift_x(amps)
    # sigma-1 coin in the sigma-3 basis: [[cos v, -sin v], [sin v, cos v]]
    cv, sv = np.cos(vartheta), np.sin(vartheta)
    b0 = cv * a[0] - sv * a[1]
    b1 = sv * a[0] + cv * a[1]
    # y-shift conditioned on the |+>/|-> components
    plus = (b0 + b1) * _SQRT_HALF
    minus = (b0 - b1) * _SQRT_HALF
    plus_in = np.zeros_like(plus)
    minus_in = np.zeros_like(minus)
    plus_in[:, :-1] = plus[:, 1:]     # |+> arrives from y+1
    minus_in[:, 1:] = minus[:, :-1]   # |-> arrives from y-1
    c0 = (plus_in + minus_in) * _SQRT_HALF
    c1 = (plus_in - minus_in) * _SQRT_HALF
    # sigma-3 coin: [[cos t, sin t], [-sin t, cos t]]
    ct, st = np.cos(theta), np.sin(theta)
    return np.stack((ct * c0 + st * c1, -st * c0 + ct * c1))


def _step_closed(amps: np.ndarray, theta: np.ndarray, vartheta: np.ndarray
                 ) -> np.ndarray:
    up, down = amps[0], amps[1]
    a = np.zeros_like(up)
    b = np.zeros_like(up)
    c = np.zeros_like(up)
    d = np.zeros_like(up)
    a[:-1, :-1] = up[1:, 1:]      # up from (x+1, y+1)
    b[1:, :-1] = down[:-1, 1:]    # down from (x-1, y+1)
    c[:-1, 1:] = up[1:, :-1]      # up from (x+1, y-1)
    d[1:, 1:] = down[:-1, :-1]    # down from (x-1, y-1)

    ct, st = np.cos(theta), np.sin(theta)
    cv, sv = np.cos(vartheta), np.sin(vartheta)
    # vartheta evaluated where the sigma-1 coin acted: (x, y+1) for the
    # A/B contributions, (x, y-1) for C/D.
    cp = np.empty_like(cv)
    sp = np.empty_like(sv)
    cm = np.empty_like(cv)
    sm = np.empty_like(sv)
    cp[:, :-1], cp[:, -1] = cv[:, 1:], 1.0
    sp[:, :-1], sp[:, -1] = sv[:, 1:], 0.0
    cm[:, 1:], cm[:, 0] = cv[:, :-1], 1.0
    sm[:, 1:], sm[:, 0] = sv[:, :-1], 0.0

    p = ct + st
    m = ct - st
    up_new = 0.5 * (p * (cp + sp) * a + p * (cp - sp) * b
                    + m * (cm - sm) * c - m * (cm + sm) * d)
    down_new = 0.5 * (m * (cp + sp) * a + m * (cp - sp) * b
                      - p * (cm - sm) * c + p * (cm + sm) * d)
    return np.stack((up_new, down_new))


def step_2d(state: WalkState2D,
            angle_field: tuple[np.ndarray, np.ndarray],
            method: str = "operator") -> WalkState2D:
    """Advance one step under per-site ``(theta, vartheta)`` fields.

    Fields may be scalars or ``(N, N)`` arrays indexed like the state.
    ``method`` selects the operator-composition path or the fused
    closed-form update; the two agree to 1e-12.
    """
    if state.t + 1 > state.halfwidth:
        raise LightConeError(
            f"step {state.t + 1} would reach the lattice edge (halfwidth "
            f"{state.halfwidth})")
    n = 2 * state.halfwidth + 1
    theta, vartheta = (np.broadcast_to(np.asarray(f, dtype=float), (n, n))
                       for f in angle_field)
    if method == "operator":
        amps = _step_operator(state.amps, theta, vartheta)
    elif method == "closed":
        amps = _step_closed(state.amps, theta, vartheta)
    else:
        raise ConfigError(f"unknown step method {method!r}")
    return WalkState2D(t=state.t + 1, halfwidth=state.halfwidth, amps=amps)


def run_2d(initial: InitialSpec,
           schedule: Schedule2D,
           steps: int | None = None,
           record_entropy: bool = True,
           record_distribution: bool = True,
           keep_final_state: bool = False,
           method: str = "operator") -> Trajectory2D:
    """Evolve a 2D walk and record radial spread (and entropy) per step."""
    if steps is None:
        steps = schedule.steps
    if not 0 <= steps <= schedule.steps:
        raise ConfigError(
            f"steps = {steps} outside schedule range 0..{schedule.steps}")

    state = make_initial_state_2d(initial, schedule.halfwidth)
    sigma_r = np.empty(steps + 1)
    entropy = np.empty(steps + 1) if record_entropy else None

    def _record(i: int, st: WalkState2D) -> None:
        sigma_r[i] = radial_standard_deviation(position_distribution(st))
        if entropy is not None:
            entropy[i] = entanglement_entropy(reduced_density(st))

    _record(0, state)
    fields_static = schedule.kind in (DisorderKind.UNIFORM, DisorderKind.SPATIAL)
    fields = None
    for t in range(1, steps + 1):
        if fields is None or not fields_static:
            fields = schedule.angle_fields(t)
        state = step_2d(state, fields, method=method)
        _record(t, state)

    return Trajectory2D(
        times=np.arange(steps + 1),
        sigma_r=sigma_r,
        entropy=entropy,
        final_distribution=(position_distribution(state)
                            if record_distribution else None),
        final_state=state if keep_final_state else None,
    )
