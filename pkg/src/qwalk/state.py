"""Quantum-state containers for 1D and 2D walks.

A walk state stores the full two-component complex amplitude field over a
dense, symmetric lattice slab ``x = -T .. T`` (and ``y`` likewise in 2D).
The slab is sized once at construction: because amplitude can spread at most
one site per step, a walk of ``steps <= T`` never touches the boundary, so
no boundary handling exists anywhere in the evolution kernels.

Amplitudes are stored component-major: ``amps[0]`` is the left-moving
(spin-up) field and ``amps[1]`` the right-moving (spin-down) field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError

__all__ = [
    "InitialSpec",
    "WalkState1D",
    "WalkState2D",
    "make_initial_state_1d",
    "make_initial_state_2d",
    "total_norm",
]


@dataclass(frozen=True)
class InitialSpec:
    """Bloch-sphere parameterization of the origin spinor.

    The walker starts at the origin in the state
    ``cos(delta/2)|up> + exp(i*eta) sin(delta/2)|down>``.

    Parameters
    ----------
    delta:
        Polar angle in ``[0, pi]``.
    eta:
        Relative phase in ``[0, 2*pi)``.
    """

    delta: float
    eta: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.delta <= math.pi:
            raise ConfigError(f"delta must lie in [0, pi], got {self.delta}")
        if not 0.0 <= self.eta < 2.0 * math.pi:
            raise ConfigError(f"eta must lie in [0, 2*pi), got {self.eta}")

    def spinor(self) -> np.ndarray:
        """Return the (2,) complex unit spinor at the origin."""
        return np.array(
            [math.cos(self.delta / 2.0),
             complex(math.cos(self.eta), math.sin(self.eta)) * math.sin(self.delta / 2.0)],
            dtype=np.complex128,
        )


# The symmetric initial state used throughout for "standard walk" runs.
SYMMETRIC_INITIAL = InitialSpec(delta=math.pi / 2.0, eta=math.pi / 2.0)


@dataclass
class WalkState1D:
    """Two-component amplitude field on ``x = -halfwidth .. halfwidth``.

    ``amps`` has shape ``(2, 2*halfwidth + 1)``; position ``x`` lives at
    column ``x + halfwidth``.
    """

    t: int
    halfwidth: int
    amps: np.ndarray = field(repr=False)

    def positions(self) -> np.ndarray:
        return np.arange(-self.halfwidth, self.halfwidth + 1)

    def spinor_at(self, x: int) -> np.ndarray:
        """Return the (2,) spinor at position ``x``."""
        if abs(x) > self.halfwidth:
            raise ConfigError(f"position {x} outside lattice of halfwidth {self.halfwidth}")
        return self.amps[:, x + self.halfwidth].copy()

    def copy(self) -> "WalkState1D":
        return WalkState1D(t=self.t, halfwidth=self.halfwidth, amps=self.amps.copy())


@dataclass
class WalkState2D:
    """Two-component amplitude field on the square ``max(|x|,|y|) <= halfwidth``.

    ``amps`` has shape ``(2, N, N)`` with ``N = 2*halfwidth + 1``; site
    ``(x, y)`` lives at ``amps[:, x + halfwidth, y + halfwidth]``.
    """

    t: int
    halfwidth: int
    amps: np.ndarray = field(repr=False)

    def positions(self) -> np.ndarray:
        return np.arange(-self.halfwidth, self.halfwidth + 1)

    def copy(self) -> "WalkState2D":
        return WalkState2D(t=self.t, halfwidth=self.halfwidth, amps=self.amps.copy())


def make_initial_state_1d(spec: InitialSpec, capacity: int) -> WalkState1D:
    """Build the t = 0 state: the spec's spinor at the origin, zero elsewhere.

    ``capacity`` is the lattice halfwidth ``T``; it must be at least the
    number of steps the walk will take.
    """
    if capacity < 1:
        raise ConfigError(f"capacity must be >= 1, got {capacity}")
    amps = np.zeros((2, 2 * capacity + 1), dtype=np.complex128)
    amps[:, capacity] = spec.spinor()
    return WalkState1D(t=0, halfwidth=capacity, amps=amps)


def make_initial_state_2d(spec: InitialSpec, capacity: int) -> WalkState2D:
    """Build the t = 0 state on the square lattice, localized at the origin."""
    if capacity < 1:
        raise ConfigError(f"capacity must be >= 1, got {capacity}")
    n = 2 * capacity + 1
    amps = np.zeros((2, n, n), dtype=np.complex128)
    amps[:, capacity, capacity] = spec.spinor()
    return WalkState2D(t=0, halfwidth=capacity, amps=amps)


def total_norm(state: WalkState1D | WalkState2D) -> float:
    """Total probability: sum of |amplitude|^2 over all sites and components."""
    return float(np.sum(np.abs(state.amps) ** 2))
