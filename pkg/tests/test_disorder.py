import io
import math

import numpy as np
import pytest
from scipy import stats

from qwalk import (
    ConfigError,
    DisorderKind,
    Schedule2DSpec,
    ScheduleSpec,
    angles_at,
    build_schedule,
    build_schedule_2d,
)

QUARTER = math.pi / 4.0


def test_uniform_schedule_is_constant():
    sch = build_schedule(ScheduleSpec(kind=DisorderKind.UNIFORM, steps=50,
                                      halfwidth=50))
    for x, t in [(-50, 1), (0, 25), (17, 50)]:
        assert angles_at(sch, x, t) == (0.0, QUARTER, 0.0)


def test_spatial_schedule_is_time_invariant():
    sch = build_schedule(ScheduleSpec(kind=DisorderKind.SPATIAL, steps=100,
                                      halfwidth=100, seed=31))
    for x in (-100, -3, 0, 3, 42):
        assert sch.angles_at(x, 1) == sch.angles_at(x, 77)


def test_temporal_schedule_is_space_invariant():
    sch = build_schedule(ScheduleSpec(kind=DisorderKind.TEMPORAL, steps=100,
                                      halfwidth=100, seed=31))
    for t in (1, 50, 100):
        assert sch.angles_at(-60, t) == sch.angles_at(60, t)


def test_spatio_temporal_depends_on_both():
    sch = build_schedule(ScheduleSpec(kind=DisorderKind.SPATIO_TEMPORAL,
                                      steps=100, halfwidth=100, seed=31))
    assert sch.angles_at(5, 5) != sch.angles_at(5, 6)
    assert sch.angles_at(5, 5) != sch.angles_at(6, 5)


def test_identical_spec_bit_identical_schedule():
    spec = ScheduleSpec(kind=DisorderKind.SPATIO_TEMPORAL, steps=40,
                        halfwidth=40, seed=987654321, su2=True, fraction=0.7)
    a, b = build_schedule(spec), build_schedule(spec)
    for t in (1, 17, 40):
        for ra, rb in zip(a.coin_rows(t), b.coin_rows(t)):
            assert np.array_equal(ra, rb)


def test_different_seed_different_schedule():
    mk = lambda s: build_schedule(ScheduleSpec(
        kind=DisorderKind.SPATIAL, steps=20, halfwidth=20, seed=s))
    assert mk(1).angles_at(0, 1) != mk(2).angles_at(0, 1)


def test_fraction_zero_reduces_to_uniform():
    for kind in (DisorderKind.SPATIAL, DisorderKind.TEMPORAL,
                 DisorderKind.SPATIO_TEMPORAL):
        sch = build_schedule(ScheduleSpec(kind=kind, steps=30, halfwidth=30,
                                          seed=5, fraction=0.0))
        for x, t in [(-30, 1), (0, 15), (30, 30)]:
            assert sch.angles_at(x, t) == (0.0, QUARTER, 0.0)


def test_temporal_partial_disorder_mask():
    # fraction 0.2 over 100 steps: disordered count near 20, reruns identical
    spec = ScheduleSpec(kind=DisorderKind.TEMPORAL, steps=100, halfwidth=100,
                        seed=13, fraction=0.2)
    sch = build_schedule(spec)
    changed = [t for t in range(1, 101) if sch.angles_at(0, t).theta != QUARTER]
    assert 8 <= len(changed) <= 35
    rerun = build_schedule(spec)
    assert [rerun.angles_at(0, t).theta for t in range(1, 101)] == \
           [sch.angles_at(0, t).theta for t in range(1, 101)]


def test_su2_flag_draws_phases():
    sch = build_schedule(ScheduleSpec(kind=DisorderKind.SPATIAL, steps=10,
                                      halfwidth=10, seed=3, su2=True))
    a = sch.angles_at(2, 1)
    assert a.xi != 0.0 and a.zeta != 0.0
    assert 0.0 <= a.xi < 2.0 * math.pi and 0.0 <= a.zeta < 2.0 * math.pi
    plain = build_schedule(ScheduleSpec(kind=DisorderKind.SPATIAL, steps=10,
                                        halfwidth=10, seed=3, su2=False))
    b = plain.angles_at(2, 1)
    assert b.xi == 0.0 and b.zeta == 0.0


def test_angles_at_domain_errors():
    sch = build_schedule(ScheduleSpec(kind=DisorderKind.SPATIAL, steps=10,
                                      halfwidth=12, seed=1))
    with pytest.raises(ConfigError):
        sch.angles_at(13, 1)
    with pytest.raises(ConfigError):
        sch.angles_at(0, 0)
    with pytest.raises(ConfigError):
        sch.angles_at(0, 11)


def test_spec_validation():
    with pytest.raises(ConfigError):
        ScheduleSpec(kind=DisorderKind.SPATIAL, steps=0, halfwidth=5)
    with pytest.raises(ConfigError):
        ScheduleSpec(kind=DisorderKind.SPATIAL, steps=10, halfwidth=5)
    with pytest.raises(ConfigError):
        ScheduleSpec(kind=DisorderKind.SPATIAL, steps=5, halfwidth=5,
                     fraction=1.5)
    with pytest.raises(ConfigError):
        ScheduleSpec(kind=DisorderKind.SPATIAL, steps=5, halfwidth=5,
                     base_theta=4.0)
    with pytest.raises(ConfigError):
        Schedule2DSpec(kind=DisorderKind.SPATIAL, steps=5, halfwidth=4)


def test_theta_marginal_is_uniform():
    # Kolmogorov-Smirnov against Uniform[0, pi] over 1e5 spatial draws
    sch = build_schedule(ScheduleSpec(kind=DisorderKind.SPATIAL, steps=1,
                                      halfwidth=50_000, seed=42))
    xs = np.arange(-50_000, 50_000)
    thetas = sch.thetas_at(xs, np.ones_like(xs))
    result = stats.kstest(thetas, stats.uniform(loc=0.0, scale=math.pi).cdf)
    assert result.pvalue > 0.01


def test_dump_csv_format():
    sch = build_schedule(ScheduleSpec(kind=DisorderKind.TEMPORAL, steps=5,
                                      halfwidth=5, seed=8))
    buf = io.StringIO()
    sch.dump_csv(buf)
    lines = buf.getvalue().strip().splitlines()
    assert lines[0] == "axis_value,xi,theta,zeta"
    assert len(lines) == 6
    first = lines[1].split(",")
    assert first[0] == "0"
    # 17 significant digits round-trip
    assert float(first[2]) == sch.angles_at(0, 1).theta


def test_schedule_2d_kind_dependencies():
    sp = build_schedule_2d(Schedule2DSpec(kind=DisorderKind.SPATIAL, steps=20,
                                          halfwidth=20, seed=4))
    assert sp.angles_at(3, -2, 1) == sp.angles_at(3, -2, 20)
    tp = build_schedule_2d(Schedule2DSpec(kind=DisorderKind.TEMPORAL, steps=20,
                                          halfwidth=20, seed=4))
    assert tp.angles_at(-5, 5, 7) == tp.angles_at(5, -5, 7)
    assert tp.angles_at(0, 0, 7) != tp.angles_at(0, 0, 8)
    st = build_schedule_2d(Schedule2DSpec(kind=DisorderKind.SPATIO_TEMPORAL,
                                          steps=20, halfwidth=20, seed=4))
    assert st.angles_at(1, 1, 3) != st.angles_at(1, 1, 4)
    assert st.angles_at(1, 1, 3) != st.angles_at(1, 2, 3)


def test_schedule_2d_draws_theta_and_vartheta_independently():
    sch = build_schedule_2d(Schedule2DSpec(kind=DisorderKind.SPATIAL, steps=5,
                                           halfwidth=5, seed=77))
    theta, vartheta = sch.angle_fields(1)
    assert not np.allclose(theta, vartheta)
    assert np.all((theta >= 0) & (theta <= math.pi))
    assert np.all((vartheta >= 0) & (vartheta <= math.pi))
