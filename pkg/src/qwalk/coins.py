"""Coin matrices: the 2x2 unitaries applied after each shift.

Three constructors are provided:

- ``make_coin(theta)``: the single-parameter rotation coin.
- ``make_su2_coin(angles)``: the general three-angle SU(2) coin; with
  ``xi = zeta = 0`` it reproduces ``make_coin(theta)`` entry for entry,
  with identical floating-point values.
- ``make_y_coin(vartheta)``: the coin that rotates in the sigma-1
  (``|+>/|->``) eigenbasis, pre-converted once to the sigma-3 basis used
  for storage.  Used by the 2D walk between the x- and y-shifts.

All constructors return ``(2, 2)`` complex128 arrays.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

__all__ = ["CoinAngles", "make_coin", "make_su2_coin", "make_y_coin"]

TWO_PI = 2.0 * math.pi


class CoinAngles(NamedTuple):
    """Euler triple (xi, theta, zeta) for an SU(2) coin.

    Ranges: ``xi, zeta in [0, 2*pi)``, ``theta in [0, pi]``.  The combined
    phase ``phi = xi + zeta`` is always derived, never stored.
    """

    xi: float
    theta: float
    zeta: float

    @property
    def phi(self) -> float:
        return self.xi + self.zeta

    def validate(self) -> "CoinAngles":
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if not 0.0 <= self.xi < TWO_PI:
            raise ValueError(f"xi must lie in [0, 2*pi), got {self.xi}")
        if not 0.0 <= self.zeta < TWO_PI:
            raise ValueError(f"zeta must lie in [0, 2*pi), got {self.zeta}")
        return self


def make_coin(theta: float) -> np.ndarray:
    """Rotation coin ``[[cos t, sin t], [-sin t, cos t]]``.

    ``theta`` must lie in ``[0, pi]``; the endpoints are valid unitaries
    (identity-like ballistic coins) even though dispersion formulas treat
    them as singular.
    """
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, s], [-s, c]], dtype=np.complex128)


def make_su2_coin(angles: CoinAngles) -> np.ndarray:
    """General SU(2) coin from an Euler triple.

    Returns::

        [[ exp(i(xi+zeta)) cos t,   exp(i(xi-zeta)) sin t ],
         [-exp(-i(xi-zeta)) sin t,  exp(-i(xi+zeta)) cos t ]]

    With ``xi = zeta = 0`` the phases are exactly 1.0 and the result equals
    ``make_coin(theta)`` including floating-point representation.
    """
    xi, theta, zeta = CoinAngles(*angles).validate()
    c, s = math.cos(theta), math.sin(theta)
    ps = np.exp(1j * (xi + zeta))
    pd = np.exp(1j * (xi - zeta))
    return np.array(
        [[ps * c, pd * s], [-np.conj(pd) * s, np.conj(ps) * c]],
        dtype=np.complex128,
    )


def make_y_coin(vartheta: float) -> np.ndarray:
    """Sigma-1-basis rotation coin, expressed in the sigma-3 basis.

    The rotation ``[[cos v, sin v], [-sin v, cos v]]`` acting on the
    ``|+>/|->`` basis becomes ``[[cos v, -sin v], [sin v, cos v]]`` after
    conjugation by the Hadamard-like basis change; that closed form is
    returned directly so the 2D step never hops bases at runtime.
    """
    if not 0.0 <= vartheta <= math.pi:
        raise ValueError(f"vartheta must lie in [0, pi], got {vartheta}")
    c, s = math.cos(vartheta), math.sin(vartheta)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)
