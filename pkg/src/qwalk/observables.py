"""Measurement-free diagnostics: distributions, moments, entanglement.

The reduced density matrix of the internal (coin) space is accumulated
directly from site spinors; its two eigenvalues come from the closed form
for a 2x2 Hermitian matrix, so no general eigensolver runs in the hot path.
Entropy is reported in bits (log base 2).
"""

from __future__ import annotations

import math

import numpy as np

from .errors import InvariantError
from .state import WalkState1D, WalkState2D

__all__ = [
    "position_distribution",
    "standard_deviation",
    "radial_standard_deviation",
    "reduced_density",
    "entanglement_entropy",
]

_EIG_TOL = 1e-12


def position_distribution(state: WalkState1D | WalkState2D) -> np.ndarray:
    """Per-site probability ``|up|^2 + |down|^2``.

    Returns a ``(N,)`` array for 1D states and ``(N, N)`` for 2D states,
    indexed by ``x + halfwidth`` (and ``y + halfwidth``).
    """
    return np.sum(np.abs(state.amps) ** 2, axis=0)


def standard_deviation(dist: np.ndarray, positions: np.ndarray | None = None) -> float:
    """Standard deviation ``sqrt(E[x^2] - E[x]^2)`` of a 1D distribution.

    ``dist`` must be normalized to 1 within 1e-9.  ``positions`` defaults
    to the centered lattice ``-T .. T`` implied by the array length.
    """
    dist = np.asarray(dist, dtype=float)
    total = float(dist.sum())
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"distribution sums to {total}, expected 1 within 1e-9")
    if positions is None:
        half = (len(dist) - 1) // 2
        positions = np.arange(-half, len(dist) - half)
    mean = float(np.dot(positions, dist))
    second = float(np.dot(positions * positions, dist))
    return math.sqrt(max(second - mean * mean, 0.0))


def radial_standard_deviation(dist: np.ndarray) -> float:
    """Radial spread ``sqrt(E[x^2 + y^2] - E[x]^2 - E[y]^2)`` of a joint
    2D distribution indexed by ``(x + T, y + T)``."""
    dist = np.asarray(dist, dtype=float)
    total = float(dist.sum())
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"distribution sums to {total}, expected 1 within 1e-9")
    n = dist.shape[0]
    half = (n - 1) // 2
    coords = np.arange(-half, n - half, dtype=float)
    px = dist.sum(axis=1)
    py = dist.sum(axis=0)
    ex = float(np.dot(coords, px))
    ey = float(np.dot(coords, py))
    second = float(np.dot(coords * coords, px) + np.dot(coords * coords, py))
    return math.sqrt(max(second - ex * ex - ey * ey, 0.0))


def reduced_density(state: WalkState1D | WalkState2D) -> np.ndarray:
    """Trace out position: ``rho_c = sum_site |spinor><spinor|`` as a
    (2, 2) complex array."""
    flat = state.amps.reshape(2, -1)
    return flat @ flat.conj().T


def _validate_density(rho: np.ndarray) -> None:
    rho = np.asarray(rho)
    if rho.shape != (2, 2):
        raise ValueError(f"reduced density must be 2x2, got shape {rho.shape}")
    if not np.all(np.isfinite(rho)):
        raise InvariantError("reduced density contains non-finite entries")
    if np.max(np.abs(rho - rho.conj().T)) > _EIG_TOL:
        raise InvariantError("reduced density is not Hermitian within 1e-12")
    if abs(rho[0, 0].real + rho[1, 1].real - 1.0) > _EIG_TOL:
        raise InvariantError("reduced density trace differs from 1 beyond 1e-12")


def entanglement_entropy(rho: np.ndarray) -> float:
    """Von Neumann entropy ``-sum(lam * log2(lam))`` of a 2x2 density matrix.

    Eigenvalues within 1e-12 of the [0, 1] interval are clamped before the
    logarithm; larger violations raise, since they indicate a bug rather
    than rounding.  The result lies in [0, 1] bits.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    _validate_density(rho)
    delta = (rho[0, 0].real - rho[1, 1].real) / 2.0
    radius = math.sqrt(delta * delta + abs(rho[0, 1]) ** 2)
    lams = (0.5 + radius, 0.5 - radius)
    entropy = 0.0
    for lam in lams:
        if lam < -_EIG_TOL or lam > 1.0 + _EIG_TOL:
            raise InvariantError(
                f"eigenvalue {lam} outside [0, 1] beyond the 1e-12 window")
        lam = min(max(lam, 0.0), 1.0)
        if lam > 0.0:
            entropy -= lam * math.log2(lam)
    return entropy
