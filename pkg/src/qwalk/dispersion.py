"""Continuum-limit dispersion relations and group velocities.

For the uniform rotation coin the continuum mode ``exp(i(kx - wt))`` gives

    w(k, theta)^2 = k^2 cos(theta) + 2 [1 - cos(theta)],

valid (traveling) while the radicand is strictly positive, with
``v_p = w / k`` and ``v_g = k cos(theta) / w``.  The SU(2) coin adds the
combined phase ``phi = xi + zeta``:

    w^2 = cos(theta) cos(phi) [k^2 - 2] + 2 [1 - k cos(theta) sin(phi)],
    v_g = cos(theta) [k cos(phi) - sin(phi)] / w.

Coin disorder makes the frequency site-dependent.  Keeping only the real
terms of the per-site mode equation yields

    w(k)^2 = k^2 cos(th) + A,
    A = 1 + sin(th) [csc(th_nb) - cot(th_nb)] - cos(th),

where ``th`` is the angle at the site and ``th_nb`` the neighbor angle:
the up component couples to the x-1 (or t-1) neighbor and the down
component to x+1 (t+1).  Effective transport under disorder is the plain
average of per-site group velocities over the region the walk can reach;
sites whose radicand is not positive carry no traveling mode and
contribute zero (they are counted and reported).

The SU(2) spatial-disorder frequency solves a quadratic with a linear
term: ``w = (G + sqrt(G^2 + 4(k^2 F + k Q + J))) / 2`` (the + root).  Its
group velocity is the exact derivative of that expression,
``v_g = (2 k F + Q) / sqrt(G^2 + 4(k^2 F + k Q + J))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .disorder import CoinSchedule, DisorderKind
from .errors import ConfigError, InvariantError, NonPropagatingError

__all__ = [
    "K_MAX",
    "DispersionPoint",
    "DisorderSiteParams",
    "Su2SpatialCoeffs",
    "omega_uniform",
    "omega_su2",
    "omega_lattice",
    "site_group_velocity",
    "EffectiveVelocity",
    "effective_group_velocity",
    "effective_group_velocity_stats",
    "spread_estimate",
    "su2_spatial_dispersion",
]

K_MAX = math.sqrt(2.0)
_VG_TOL = 1e-12


@dataclass(frozen=True)
class DispersionPoint:
    """One point of a dispersion relation.

    ``propagating`` is True iff the traveling-wave radicand is strictly
    positive; when False the numeric fields are zero placeholders, never
    NaN.  ``v_p`` is ``omega / k`` and becomes ``inf`` at ``k = 0`` with
    nonzero frequency.
    """

    k: float
    omega: float
    v_p: float
    v_g: float
    propagating: bool


def _point(k: float, radicand: float, vg_num: float) -> DispersionPoint:
    if radicand <= 0.0:
        return DispersionPoint(k=k, omega=0.0, v_p=0.0, v_g=0.0, propagating=False)
    omega = math.sqrt(radicand)
    if k != 0.0:
        v_p = omega / k
    else:
        v_p = math.inf if omega > 0.0 else 0.0
    return DispersionPoint(k=k, omega=omega, v_p=v_p, v_g=vg_num / omega,
                           propagating=True)


def _check_k(k: float) -> None:
    if not abs(k) <= K_MAX:
        raise ValueError(f"|k| must not exceed sqrt(2), got {k}")


def _check_theta(theta: float, name: str = "theta") -> None:
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"{name} must lie in [0, pi], got {theta}")


def omega_uniform(k: float, theta: float) -> DispersionPoint:
    """Dispersion point for the uniform single-parameter coin."""
    _check_k(k)
    _check_theta(theta)
    c = math.cos(theta)
    radicand = k * k * c + 2.0 * (1.0 - c)
    return _point(k, radicand, k * c)


def omega_su2(k: float, theta: float, phi: float) -> DispersionPoint:
    """Dispersion point for the SU(2) coin with combined phase ``phi``.

    ``phi = xi + zeta``; any real value is accepted (the formulas are
    2*pi-periodic).  At ``phi = 0`` this reduces entrywise to
    ``omega_uniform``.
    """
    _check_k(k)
    _check_theta(theta)
    c = math.cos(theta)
    cp, sp = math.cos(phi), math.sin(phi)
    radicand = c * cp * (k * k - 2.0) + 2.0 * (1.0 - k * c * sp)
    return _point(k, radicand, c * (k * cp - sp))


def omega_lattice(k: float, theta: float) -> float:
    """Exact lattice frequency ``arccos(cos(theta) cos(k))`` of the
    discrete decoupled recurrence (principal branch)."""
    _check_theta(theta)
    return math.acos(math.cos(theta) * math.cos(k))


@dataclass(frozen=True)
class DisorderSiteParams:
    """Per-site inputs of the disordered dispersion formula.

    ``A`` is computed on construction from the site angle and its
    neighbor; neighbor angles of exactly 0 or pi are rejected since the
    cosecant/cotangent terms are singular there.
    """

    theta_here: float
    theta_neighbor: float
    A: float = field(init=False)

    def __post_init__(self) -> None:
        _check_theta(self.theta_here, "theta_here")
        if not 0.0 < self.theta_neighbor < math.pi:
            raise ValueError(
                f"theta_neighbor must lie strictly inside (0, pi), got "
                f"{self.theta_neighbor}")
        sh, ch = math.sin(self.theta_here), math.cos(self.theta_here)
        # csc - cot of the neighbor angle, combined to avoid cancellation
        csc_minus_cot = (1.0 - math.cos(self.theta_neighbor)) / math.sin(self.theta_neighbor)
        object.__setattr__(self, "A", 1.0 + sh * csc_minus_cot - ch)


def site_group_velocity(params: DisorderSiteParams, k: float) -> float:
    """Group velocity ``k cos(th) / sqrt(k^2 cos(th) + A)`` at one site.

    Raises ``NonPropagatingError`` when the radicand is not strictly
    positive; averaging routines catch that and count the site as zero.
    """
    _check_k(k)
    c = math.cos(params.theta_here)
    radicand = k * k * c + params.A
    if radicand <= 0.0:
        raise NonPropagatingError(
            f"radicand {radicand} <= 0 at theta={params.theta_here}, "
            f"neighbor={params.theta_neighbor}, k={k}")
    v_g = k * c / math.sqrt(radicand)
    if abs(v_g) > 1.0 + _VG_TOL:
        raise InvariantError(f"|v_g| = {abs(v_g)} exceeds 1 beyond tolerance")
    return v_g


@dataclass(frozen=True)
class EffectiveVelocity:
    """Average group velocity plus the bookkeeping of excluded sites."""

    value: float
    n_terms: int
    n_nonpropagating: int
    n_singular: int


def _site_vg_array(k: float, theta_here: np.ndarray, theta_nb: np.ndarray
                   ) -> tuple[np.ndarray, int, int]:
    """Vectorized site formula; zeros out (and counts) bad sites."""
    singular = ~((theta_nb > 0.0) & (theta_nb < math.pi))
    safe_nb = np.where(singular, math.pi / 2.0, theta_nb)
    sh, ch = np.sin(theta_here), np.cos(theta_here)
    a_val = 1.0 + sh * (1.0 - np.cos(safe_nb)) / np.sin(safe_nb) - ch
    radicand = k * k * ch + a_val
    nonprop = (radicand <= 0.0) & ~singular
    good = ~(singular | nonprop)
    v = np.zeros_like(a_val)
    v[good] = k * ch[good] / np.sqrt(radicand[good])
    if np.any(np.abs(v) > 1.0 + _VG_TOL):
        raise InvariantError("|v_g| exceeds 1 beyond tolerance at some site")
    return v, int(np.count_nonzero(nonprop)), int(np.count_nonzero(singular))


def effective_group_velocity_stats(kind: DisorderKind,
                                   schedule: CoinSchedule,
                                   k: float,
                                   t: int,
                                   component: str = "up") -> EffectiveVelocity:
    """Disorder-averaged group velocity with exclusion counts.

    Averaging regions: spatial disorder averages the 2t+1 sites the walk
    can reach; temporal averages the t coins applied so far; the
    spatio-temporal average nests the two.  ``component`` selects which
    neighbor convention the A term uses ("up" couples to x-1 / t-1,
    "down" to x+1 / t+1).

    Singular neighbor angles are skipped and counted; more than 10%
    skipped raises, since the average would no longer be meaningful.
    """
    if kind is not schedule.kind:
        raise ConfigError(f"schedule kind {schedule.kind} does not match {kind}")
    if t < 1:
        raise ConfigError(f"t must be >= 1, got {t}")
    if component not in ("up", "down"):
        raise ConfigError(f"component must be 'up' or 'down', got {component!r}")
    _check_k(k)
    off = -1 if component == "up" else 1

    if kind is DisorderKind.UNIFORM:
        params = DisorderSiteParams(schedule.spec.base_theta, schedule.spec.base_theta)
        try:
            v = site_group_velocity(params, k)
            return EffectiveVelocity(v, 1, 0, 0)
        except NonPropagatingError:
            return EffectiveVelocity(0.0, 1, 1, 0)

    if kind is DisorderKind.SPATIAL:
        xs = np.arange(-t, t + 1)
        th = schedule.thetas_at(xs, np.ones_like(xs))
        th_nb = schedule.thetas_at(xs + off, np.ones_like(xs))
    elif kind is DisorderKind.TEMPORAL:
        ts = np.arange(1, t + 1)
        th = schedule.thetas_at(np.zeros_like(ts), ts)
        th_nb = schedule.thetas_at(np.zeros_like(ts), ts + off)
    else:
        ts = np.arange(1, t + 1)[:, None]
        xs = np.arange(-t, t + 1)[None, :]
        th = schedule.thetas_at(xs, ts)
        th_nb = schedule.thetas_at(xs + off, ts + off)

    v, n_nonprop, n_sing = _site_vg_array(k, np.atleast_1d(th), np.atleast_1d(th_nb))
    n_terms = v.size
    if n_sing > 0.1 * n_terms:
        raise InvariantError(
            f"{n_sing} of {n_terms} sites had singular neighbor angles")
    if kind is DisorderKind.SPATIO_TEMPORAL:
        value = float(np.mean(np.mean(v.reshape(t, 2 * t + 1), axis=1)))
    else:
        value = float(np.mean(v))
    return EffectiveVelocity(value, n_terms, n_nonprop, n_sing)


def effective_group_velocity(kind: DisorderKind,
                             schedule: CoinSchedule,
                             k: float,
                             t: int,
                             component: str = "up") -> float:
    """Disorder-averaged group velocity (see the stats variant)."""
    return effective_group_velocity_stats(kind, schedule, k, t, component).value


def spread_estimate(kind: DisorderKind,
                    schedule: CoinSchedule,
                    k: float,
                    t: int) -> float:
    """Predicted wavepacket displacement after ``t`` steps.

    Uniform evolution spreads ballistically, ``t * |v_g|``.  Spatial
    disorder accumulates the shrinking effective velocity,
    ``sum_{tau=0..t} v_g_eff(k, tau)``; temporal disorder accumulates the
    per-step site velocity, ``sum_{tau=1..t} v_g(k, theta_tau)``.  No
    closed form exists for the spatio-temporal case.
    """
    if t < 1:
        raise ConfigError(f"t must be >= 1, got {t}")
    if kind is not schedule.kind:
        raise ConfigError(f"schedule kind {schedule.kind} does not match {kind}")
    if kind is DisorderKind.UNIFORM:
        return t * abs(omega_uniform(k, schedule.spec.base_theta).v_g)
    if kind is DisorderKind.SPATIAL:
        total = 0.0
        for tau in range(0, t + 1):
            if tau == 0:
                xs = np.zeros(1, dtype=np.int64)
            else:
                xs = np.arange(-tau, tau + 1)
            th = schedule.thetas_at(xs, np.ones_like(xs))
            th_nb = schedule.thetas_at(xs - 1, np.ones_like(xs))
            v, _, _ = _site_vg_array(k, np.atleast_1d(th), np.atleast_1d(th_nb))
            total += float(np.mean(v))
        return total
    if kind is DisorderKind.TEMPORAL:
        ts = np.arange(1, t + 1)
        th = schedule.thetas_at(np.zeros_like(ts), ts)
        th_nb = schedule.thetas_at(np.zeros_like(ts), ts - 1)
        v, _, _ = _site_vg_array(k, np.atleast_1d(th), np.atleast_1d(th_nb))
        return float(np.sum(v))
    raise ConfigError(
        "no spread estimate is defined for spatio-temporal disorder")


@dataclass(frozen=True)
class Su2SpatialCoeffs:
    """The four frequency-equation coefficients for SU(2) spatial disorder.

    Built from the Euler triples at a site and its x-1 neighbor.  With all
    phases zero they collapse to ``G = Q = 0``, ``F = cos(theta_x)`` and
    ``J`` equal to the single-parameter combination ``A``.
    """

    G: float
    F: float
    Q: float
    J: float

    @classmethod
    def from_angles(cls, theta_x: float, theta_p: float,
                    xi_x: float = 0.0, xi_p: float = 0.0,
                    zeta_x: float = 0.0, zeta_p: float = 0.0) -> "Su2SpatialCoeffs":
        """Coefficients from (theta, xi, zeta) at the site (``_x``) and at
        its x-1 neighbor (``_p``)."""
        _check_theta(theta_x, "theta_x")
        if not 0.0 < theta_p < math.pi:
            raise ValueError(
                f"neighbor theta must lie strictly inside (0, pi), got {theta_p}")
        sx, cx = math.sin(theta_x), math.cos(theta_x)
        sp_, cp_ = math.sin(theta_p), math.cos(theta_p)
        cot_p = cp_ / sp_
        ph_a = xi_p - zeta_p - xi_x + zeta_x
        ph_b = 3.0 * zeta_p + xi_x - zeta_x + xi_p
        ph_c = 2.0 * zeta_p + xi_x - zeta_x
        ph_d = xi_x + zeta_x
        g = sx * (math.sin(ph_a) * sp_ + math.sin(ph_b) * cp_ * cot_p)
        f = math.cos(ph_d) * cx
        q = -math.sin(ph_c) * cot_p * sx + math.sin(ph_d) * cx
        j = (1.0
             + sx * (math.cos(ph_a) * sp_ + math.cos(ph_b) * cp_ * cot_p)
             - math.cos(ph_c) * cot_p * sx
             - math.cos(ph_d) * cx)
        return cls(G=g, F=f, Q=q, J=j)


def su2_spatial_dispersion(coeffs: Su2SpatialCoeffs, k: float) -> DispersionPoint:
    """Dispersion point of the SU(2) spatial-disorder frequency equation.

    The + root of the quadratic is taken.  ``propagating`` requires the
    discriminant to be strictly positive; for extreme phase combinations
    the + root itself can be negative, which is reported as is (the
    velocity formula is branch-independent).
    """
    _check_k(k)
    disc = coeffs.G ** 2 + 4.0 * (k * k * coeffs.F + k * coeffs.Q + coeffs.J)
    if disc <= 0.0:
        return DispersionPoint(k=k, omega=0.0, v_p=0.0, v_g=0.0, propagating=False)
    root = math.sqrt(disc)
    omega = 0.5 * (coeffs.G + root)
    if k != 0.0:
        v_p = omega / k
    else:
        v_p = math.inf if omega > 0.0 else 0.0
    return DispersionPoint(k=k, omega=omega, v_p=v_p,
                           v_g=(2.0 * k * coeffs.F + coeffs.Q) / root,
                           propagating=True)
