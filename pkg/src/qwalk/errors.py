"""Exception types shared across the package."""

from __future__ import annotations


class QWalkError(Exception):
    """Base class for all qwalk errors."""


class ConfigError(QWalkError, ValueError):
    """A schedule spec, experiment config, or CLI input is invalid."""


class LightConeError(QWalkError, RuntimeError):
    """An evolution step would push amplitude past the allocated lattice."""


class NonPropagatingError(QWalkError):
    """Traveling-wave condition failed (radicand not strictly positive).

    Raised by the per-site dispersion formulas; averaging routines catch it
    and count the site as a zero-velocity contribution.
    """


class InvariantError(QWalkError, RuntimeError):
    """A numerical invariant (norm, trace, eigenvalue bound) was violated
    beyond the documented tolerance.  Distinguishes bugs from rounding."""
