"""Discrete-time quantum walks with coin disorder.

Simulation of 1D and 2D two-state walks under spatial, temporal, and
spatio-temporal coin disorder, with localization and entanglement
observables, analytic dispersion relations, and a reproducible experiment
driver (see the ``qwalk`` command).
"""

from .coins import CoinAngles, make_coin, make_su2_coin, make_y_coin
from .disorder import (
    DisorderKind,
    CoinSchedule,
    Schedule2D,
    Schedule2DSpec,
    ScheduleSpec,
    angles_at,
    build_schedule,
    build_schedule_2d,
)
from .dispersion import (
    DispersionPoint,
    DisorderSiteParams,
    EffectiveVelocity,
    K_MAX,
    Su2SpatialCoeffs,
    effective_group_velocity,
    effective_group_velocity_stats,
    omega_lattice,
    omega_su2,
    omega_uniform,
    site_group_velocity,
    spread_estimate,
    su2_spatial_dispersion,
)
from .errors import (
    ConfigError,
    InvariantError,
    LightConeError,
    NonPropagatingError,
    QWalkError,
)
from .evolve1d import RecordFlags, Trajectory1D, run_1d, step_1d
from .evolve2d import Trajectory2D, run_2d, step_2d
from .experiment import config_hash, normalize_config, run_experiment
from .observables import (
    entanglement_entropy,
    position_distribution,
    radial_standard_deviation,
    reduced_density,
    standard_deviation,
)
from .presets import PRESETS, preset
from .state import (
    InitialSpec,
    SYMMETRIC_INITIAL,
    WalkState1D,
    WalkState2D,
    make_initial_state_1d,
    make_initial_state_2d,
    total_norm,
)

__version__ = "0.1.0"

__all__ = [
    "CoinAngles", "make_coin", "make_su2_coin", "make_y_coin",
    "DisorderKind", "CoinSchedule", "Schedule2D", "Schedule2DSpec",
    "ScheduleSpec", "angles_at", "build_schedule", "build_schedule_2d",
    "DispersionPoint", "DisorderSiteParams", "EffectiveVelocity", "K_MAX",
    "Su2SpatialCoeffs", "effective_group_velocity",
    "effective_group_velocity_stats", "omega_lattice", "omega_su2",
    "omega_uniform", "site_group_velocity", "spread_estimate",
    "su2_spatial_dispersion",
    "ConfigError", "InvariantError", "LightConeError", "NonPropagatingError",
    "QWalkError",
    "RecordFlags", "Trajectory1D", "run_1d", "step_1d",
    "Trajectory2D", "run_2d", "step_2d",
    "config_hash", "normalize_config", "run_experiment",
    "entanglement_entropy", "position_distribution",
    "radial_standard_deviation", "reduced_density", "standard_deviation",
    "PRESETS", "preset",
    "InitialSpec", "SYMMETRIC_INITIAL", "WalkState1D", "WalkState2D",
    "make_initial_state_1d", "make_initial_state_2d", "total_norm",
]
