"""Seeded coin schedules: uniform, spatial, temporal, spatio-temporal.

Every angle in a schedule is a pure function of ``(seed, kind, cell)``, so
identical specs give bit-identical schedules on every platform and any cell
can be queried without materializing tables.  The generator is pinned:

1. Each cell maps to a 64-bit counter ``i`` along the kind's natural axis,
   in the documented enumeration order:

   - spatial          ``i = x + T``               (x from -T to T)
   - temporal         ``i = t - 1``               (t from 1 to steps)
   - spatio-temporal  ``i = (t-1)*(2T+1) + (x+T)`` (t-major, then x)

   2D schedules use the same scheme with sites flattened row-major:
   spatial ``i = (x+T)*(2T+1) + (y+T)``, spatio-temporal
   ``i = ((t-1)*(2T+1) + (x+T))*(2T+1) + (y+T)``.

   The formulas extend to any integer cell (indices wrap modulo 2^64),
   which lets the dispersion module peek one cell past the walk domain
   for neighbor angles.

2. Draw streams are separated by small integer tags (mask=1, theta=2,
   xi=3, zeta=4; the 2D streams are 11-13).  The 64-bit word for cell
   ``i`` of stream ``s`` under ``seed`` is::

       mix(mix(seed ^ mix(s + GOLDEN)) ^ mix(i * GOLDEN + SALT))

   where ``mix`` is the SplitMix64 finalizer and
   ``GOLDEN = 0x9E3779B97F4A7C15``, ``SALT = 0x6A09E667F3BCC909``.
   Uniform floats in [0, 1) take the top 53 bits.

3. A cell is disordered iff its mask draw is below ``fraction``.
   Disordered cells draw ``theta`` uniformly from ``[0, pi]`` (and ``xi``,
   ``zeta`` from ``[0, 2*pi)`` when ``su2`` is set); all other cells use
   ``(0, base_theta, 0)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import IO

import numpy as np

from .coins import CoinAngles
from .errors import ConfigError

__all__ = [
    "DisorderKind",
    "ScheduleSpec",
    "CoinSchedule",
    "Schedule2DSpec",
    "Schedule2D",
    "build_schedule",
    "build_schedule_2d",
    "angles_at",
]

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_SALT = np.uint64(0x6A09E667F3BCC909)
_INV_2_53 = 1.0 / float(1 << 53)

_STREAM_MASK = 1
_STREAM_THETA = 2
_STREAM_XI = 3
_STREAM_ZETA = 4
_STREAM_MASK_2D = 11
_STREAM_THETA_2D = 12
_STREAM_VARTHETA_2D = 13


class DisorderKind(enum.Enum):
    UNIFORM = "uniform"
    SPATIAL = "spatial"
    TEMPORAL = "temporal"
    SPATIO_TEMPORAL = "spatio-temporal"


def _mix64(z: np.ndarray) -> np.ndarray:
    """SplitMix64 finalizer, vectorized over uint64 arrays."""
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def _stream_seed(seed: int, stream: int) -> np.uint64:
    with np.errstate(over="ignore"):
        return _mix64(np.uint64(seed) ^ _mix64(np.uint64(stream) + _GOLDEN))


def _uniform01(seed: int, stream: int, index: np.ndarray) -> np.ndarray:
    """Uniform [0, 1) draws at the given cell counters (any integers)."""
    idx = np.asarray(index, dtype=np.int64).astype(np.uint64)
    with np.errstate(over="ignore"):
        word = _mix64(_stream_seed(seed, stream) ^ _mix64(idx * _GOLDEN + _SALT))
    return (word >> np.uint64(11)).astype(np.float64) * _INV_2_53


@dataclass(frozen=True)
class ScheduleSpec:
    """Full description of a 1D coin schedule.

    ``fraction`` is the share of disordered cells along the kind's axis;
    ``base_theta`` fills the remaining cells.  ``halfwidth`` must cover the
    planned step count so the walk stays inside the lattice.
    """

    kind: DisorderKind
    steps: int
    halfwidth: int
    seed: int = 0
    base_theta: float = math.pi / 4.0
    fraction: float = 1.0
    su2: bool = False

    def __post_init__(self) -> None:
        if self.steps < 1:
            raise ConfigError(f"steps must be >= 1, got {self.steps}")
        if self.halfwidth < self.steps:
            raise ConfigError(
                f"halfwidth {self.halfwidth} must be >= steps {self.steps}")
        if not 0.0 <= self.fraction <= 1.0:
            raise ConfigError(f"fraction must lie in [0, 1], got {self.fraction}")
        if not 0.0 <= self.base_theta <= math.pi:
            raise ConfigError(f"base_theta must lie in [0, pi], got {self.base_theta}")
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


class CoinSchedule:
    """Deterministic lookup ``(x, t) -> CoinAngles`` for a 1D walk.

    Spatial schedules depend only on ``x``, temporal only on ``t``, uniform
    on neither.  Rows for the evolution kernel are cached where the kind
    allows it.
    """

    def __init__(self, spec: ScheduleSpec):
        self.spec = spec
        self._static_rows: tuple[np.ndarray, np.ndarray, np.ndarray] | None = None
        if spec.kind in (DisorderKind.UNIFORM, DisorderKind.SPATIAL):
            self._static_rows = self._make_rows(t=1)

    @property
    def kind(self) -> DisorderKind:
        return self.spec.kind

    @property
    def steps(self) -> int:
        return self.spec.steps

    @property
    def halfwidth(self) -> int:
        return self.spec.halfwidth

    def _cell_index(self, x: np.ndarray, t: np.ndarray) -> np.ndarray:
        T = self.spec.halfwidth
        kind = self.spec.kind
        if kind is DisorderKind.SPATIAL:
            return np.asarray(x, dtype=np.int64) + T
        if kind is DisorderKind.TEMPORAL:
            return np.asarray(t, dtype=np.int64) - 1
        if kind is DisorderKind.SPATIO_TEMPORAL:
            return ((np.asarray(t, dtype=np.int64) - 1) * (2 * T + 1)
                    + np.asarray(x, dtype=np.int64) + T)
        raise AssertionError("uniform schedules draw nothing")

    def _angles_arrays(self, x: np.ndarray, t: np.ndarray
                       ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Vectorized (xi, theta, zeta) at the given cells, no domain check."""
        spec = self.spec
        shape = np.broadcast_shapes(np.shape(x), np.shape(t))
        if spec.kind is DisorderKind.UNIFORM or spec.fraction == 0.0:
            zeros = np.zeros(shape)
            return zeros, np.full(shape, spec.base_theta), zeros.copy()
        idx = np.broadcast_to(self._cell_index(x, t), shape)
        disordered = _uniform01(spec.seed, _STREAM_MASK, idx) < spec.fraction
        theta = np.where(
            disordered,
            math.pi * _uniform01(spec.seed, _STREAM_THETA, idx),
            spec.base_theta,
        )
        if spec.su2:
            xi = np.where(
                disordered, 2.0 * math.pi * _uniform01(spec.seed, _STREAM_XI, idx), 0.0)
            zeta = np.where(
                disordered, 2.0 * math.pi * _uniform01(spec.seed, _STREAM_ZETA, idx), 0.0)
        else:
            xi = np.zeros(shape)
            zeta = np.zeros(shape)
        return xi, theta, zeta

    def _make_rows(self, t: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        xs = np.arange(-self.spec.halfwidth, self.spec.halfwidth + 1)
        return self._angles_arrays(xs, np.full_like(xs, t))

    def coin_rows(self, t: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Per-position (xi, theta, zeta) arrays for step ``t``.

        Each array has length ``2*halfwidth + 1``, indexed by ``x + halfwidth``.
        """
        if not 1 <= t <= self.spec.steps:
            raise ConfigError(f"step {t} outside schedule range 1..{self.spec.steps}")
        if self._static_rows is not None:
            return self._static_rows
        return self._make_rows(t)

    def thetas_at(self, x: np.ndarray, t: np.ndarray) -> np.ndarray:
        """Theta field at arbitrary integer cells (used for dispersion
        averages, which need neighbor angles one cell past the walk domain)."""
        return self._angles_arrays(x, t)[1]

    def angles_at(self, x: int, t: int) -> CoinAngles:
        """Coin angles at cell ``(x, t)``; raises outside the walk domain."""
        if abs(x) > self.spec.halfwidth:
            raise ConfigError(
                f"|x| = {abs(x)} exceeds halfwidth {self.spec.halfwidth}")
        if not 1 <= t <= self.spec.steps:
            raise ConfigError(f"t = {t} outside 1..{self.spec.steps}")
        xi, theta, zeta = self._angles_arrays(np.asarray(x), np.asarray(t))
        return CoinAngles(float(xi), float(theta), float(zeta))

    def dump_csv(self, fh: IO[str]) -> None:
        """Audit dump: one row per cell in the documented enumeration order.

        Columns are ``axis_value,xi,theta,zeta`` where ``axis_value`` is the
        cell counter ``i`` defined in the module docstring (equal to
        ``x + T`` for spatial and ``t - 1`` for temporal schedules).
        """
        spec = self.spec
        T = spec.halfwidth
        xs = np.arange(-T, T + 1)
        if spec.kind in (DisorderKind.UNIFORM,):
            cells = [(np.array([0]), np.array([1]))]
        elif spec.kind is DisorderKind.SPATIAL:
            cells = [(xs, np.ones_like(xs))]
        elif spec.kind is DisorderKind.TEMPORAL:
            ts = np.arange(1, spec.steps + 1)
            cells = [(np.zeros_like(ts), ts)]
        else:
            cells = [(xs, np.full_like(xs, t)) for t in range(1, spec.steps + 1)]
        fh.write("axis_value,xi,theta,zeta\n")
        counter = 0
        for x_arr, t_arr in cells:
            xi, theta, zeta = self._angles_arrays(x_arr, t_arr)
            for j in range(len(np.atleast_1d(theta))):
                fh.write(f"{counter},{xi[j]:.17g},{theta[j]:.17g},{zeta[j]:.17g}\n")
                counter += 1


def build_schedule(spec: ScheduleSpec) -> CoinSchedule:
    """Construct the deterministic schedule described by ``spec``."""
    return CoinSchedule(spec)


def angles_at(schedule: CoinSchedule, x: int, t: int) -> CoinAngles:
    """Functional alias for ``schedule.angles_at(x, t)``."""
    return schedule.angles_at(x, t)


@dataclass(frozen=True)
class Schedule2DSpec:
    """Description of a 2D coin schedule.

    Each cell carries a pair ``(theta, vartheta)``: the sigma-3 coin after
    the y-shift and the sigma-1 coin after the x-shift.  Disordered cells
    draw both angles independently from ``[0, pi]``.
    """

    kind: DisorderKind
    steps: int
    halfwidth: int
    seed: int = 0
    base_theta: float = math.pi / 4.0
    base_vartheta: float = math.pi / 4.0
    fraction: float = 1.0

    def __post_init__(self) -> None:
        if self.steps < 1:
            raise ConfigError(f"steps must be >= 1, got {self.steps}")
        if self.halfwidth < self.steps:
            raise ConfigError(
                f"halfwidth {self.halfwidth} must be >= steps {self.steps}")
        if not 0.0 <= self.fraction <= 1.0:
            raise ConfigError(f"fraction must lie in [0, 1], got {self.fraction}")
        for name in ("base_theta", "base_vartheta"):
            v = getattr(self, name)
            if not 0.0 <= v <= math.pi:
                raise ConfigError(f"{name} must lie in [0, pi], got {v}")
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


class Schedule2D:
    """Deterministic lookup ``(x, y, t) -> (theta, vartheta)``."""

    def __init__(self, spec: Schedule2DSpec):
        self.spec = spec
        self._static_fields: tuple[np.ndarray, np.ndarray] | None = None
        if spec.kind in (DisorderKind.UNIFORM, DisorderKind.SPATIAL):
            self._static_fields = self._make_fields(t=1)

    @property
    def kind(self) -> DisorderKind:
        return self.spec.kind

    @property
    def steps(self) -> int:
        return self.spec.steps

    @property
    def halfwidth(self) -> int:
        return self.spec.halfwidth

    def _make_fields(self, t: int) -> tuple[np.ndarray, np.ndarray]:
        spec = self.spec
        T = spec.halfwidth
        n = 2 * T + 1
        if spec.kind is DisorderKind.UNIFORM or spec.fraction == 0.0:
            return (np.full((n, n), spec.base_theta),
                    np.full((n, n), spec.base_vartheta))
        if spec.kind is DisorderKind.TEMPORAL:
            idx = np.asarray(t - 1, dtype=np.int64)
        else:
            site = np.arange(n, dtype=np.int64)[:, None] * n + np.arange(n, dtype=np.int64)
            if spec.kind is DisorderKind.SPATIAL:
                idx = site
            else:
                idx = np.int64(t - 1) * np.int64(n * n) + site
        disordered = _uniform01(spec.seed, _STREAM_MASK_2D, idx) < spec.fraction
        theta = np.where(
            disordered,
            math.pi * _uniform01(spec.seed, _STREAM_THETA_2D, idx),
            spec.base_theta,
        )
        vartheta = np.where(
            disordered,
            math.pi * _uniform01(spec.seed, _STREAM_VARTHETA_2D, idx),
            spec.base_vartheta,
        )
        return (np.broadcast_to(theta, (n, n)).copy(),
                np.broadcast_to(vartheta, (n, n)).copy())

    def angle_fields(self, t: int) -> tuple[np.ndarray, np.ndarray]:
        """(theta, vartheta) fields for step ``t``, each shaped (N, N)
        with site ``(x, y)`` at ``[x + T, y + T]``."""
        if not 1 <= t <= self.spec.steps:
            raise ConfigError(f"step {t} outside schedule range 1..{self.spec.steps}")
        if self._static_fields is not None:
            return self._static_fields
        return self._make_fields(t)

    def angles_at(self, x: int, y: int, t: int) -> tuple[float, float]:
        T = self.spec.halfwidth
        if max(abs(x), abs(y)) > T:
            raise ConfigError(f"site ({x}, {y}) outside lattice of halfwidth {T}")
        if not 1 <= t <= self.spec.steps:
            raise ConfigError(f"t = {t} outside 1..{self.spec.steps}")
        theta, vartheta = self.angle_fields(t)
        return float(theta[x + T, y + T]), float(vartheta[x + T, y + T])


def build_schedule_2d(spec: Schedule2DSpec) -> Schedule2D:
    return Schedule2D(spec)
