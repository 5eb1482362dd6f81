import math

import numpy as np
import pytest

from qwalk import (
    DisorderKind,
    InitialSpec,
    InvariantError,
    SYMMETRIC_INITIAL,
    ScheduleSpec,
    build_schedule,
    entanglement_entropy,
    make_initial_state_1d,
    position_distribution,
    radial_standard_deviation,
    reduced_density,
    standard_deviation,
    step_1d,
)

from oracles import entropy_eigh


def one_step_symmetric(halfwidth=5, theta=math.pi / 4.0):
    sch = build_schedule(ScheduleSpec(kind=DisorderKind.UNIFORM,
                                      steps=halfwidth, halfwidth=halfwidth,
                                      base_theta=theta))
    return step_1d(make_initial_state_1d(SYMMETRIC_INITIAL, halfwidth),
                   sch.coin_rows(1))


class TestPositionDistribution:
    def test_origin_state(self):
        dist = position_distribution(make_initial_state_1d(SYMMETRIC_INITIAL, 5))
        assert dist[5] == pytest.approx(1.0, abs=1e-15)
        assert np.sum(dist) == pytest.approx(1.0, abs=1e-12)

    def test_one_step_symmetric_half_half(self):
        dist = position_distribution(one_step_symmetric())
        assert dist[4] == pytest.approx(0.5, abs=1e-12)   # x = -1
        assert dist[6] == pytest.approx(0.5, abs=1e-12)   # x = +1

    def test_ballistic_identity_coin(self):
        sch = build_schedule(ScheduleSpec(kind=DisorderKind.UNIFORM, steps=10,
                                          halfwidth=10, base_theta=0.0))
        state = make_initial_state_1d(InitialSpec(0.0, 0.0), 10)
        for t in range(1, 11):
            state = step_1d(state, sch.coin_rows(t))
        dist = position_distribution(state)
        assert dist[0] == pytest.approx(1.0, abs=1e-12)   # x = -10


class TestStandardDeviation:
    def test_point_mass(self):
        dist = np.zeros(11)
        dist[5] = 1.0
        assert standard_deviation(dist) == 0.0

    def test_two_point_symmetric(self):
        dist = np.zeros(5)
        dist[1] = dist[3] = 0.5   # x = -1, +1
        assert standard_deviation(dist) == pytest.approx(1.0, abs=1e-15)

    def test_unnormalized_rejected(self):
        with pytest.raises(ValueError):
            standard_deviation(np.array([0.3, 0.3]))

    def test_radial_point_mass(self):
        dist = np.zeros((5, 5))
        dist[2, 2] = 1.0
        assert radial_standard_deviation(dist) == 0.0


class TestReducedDensity:
    def test_single_site_pure(self):
        state = make_initial_state_1d(InitialSpec(math.pi / 3.0, 1.0), 4)
        a, b = state.spinor_at(0)
        rho = reduced_density(state)
        expected = np.array([[abs(a) ** 2, a * np.conj(b)],
                             [np.conj(a) * b, abs(b) ** 2]])
        assert np.max(np.abs(rho - expected)) < 1e-15
        assert entanglement_entropy(rho) == pytest.approx(0.0, abs=1e-12)

    def test_one_step_symmetric_is_maximally_mixed(self):
        rho = reduced_density(one_step_symmetric())
        assert np.max(np.abs(rho - np.eye(2) / 2.0)) < 1e-12

    def test_trace_one(self):
        rng = np.random.default_rng(3)
        state = make_initial_state_1d(SYMMETRIC_INITIAL, 8)
        state.amps = rng.normal(size=(2, 17)) + 1j * rng.normal(size=(2, 17))
        state.amps /= math.sqrt(float(np.sum(np.abs(state.amps) ** 2)))
        rho = reduced_density(state)
        assert abs(np.trace(rho) - 1.0) < 1e-12


class TestEntanglementEntropy:
    def test_pure_is_zero(self):
        rho = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
        assert entanglement_entropy(rho) == 0.0

    def test_maximally_mixed_is_one(self):
        assert entanglement_entropy(np.eye(2, dtype=complex) / 2.0) == 1.0

    def test_rejects_non_hermitian(self):
        rho = np.array([[0.5, 0.3], [0.1, 0.5]], dtype=complex)
        with pytest.raises(InvariantError):
            entanglement_entropy(rho)

    def test_rejects_bad_trace(self):
        rho = np.array([[0.7, 0.0], [0.0, 0.5]], dtype=complex)
        with pytest.raises(InvariantError):
            entanglement_entropy(rho)

    def test_rejects_eigenvalue_outside_window(self):
        rho = np.array([[1.1, 0.0], [0.0, -0.1]], dtype=complex)
        with pytest.raises(InvariantError):
            entanglement_entropy(rho)

    def test_clamps_rounding_noise(self):
        eps = 5e-13
        rho = np.array([[1.0 + eps, 0.0], [0.0, -eps]], dtype=complex)
        assert entanglement_entropy(rho) == pytest.approx(0.0, abs=1e-10)

    def test_closed_form_matches_eigensolver(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            v = rng.normal(size=(2, 6)) + 1j * rng.normal(size=(2, 6))
            v /= np.sqrt(np.sum(np.abs(v) ** 2))
            rho = v @ v.conj().T
            assert entanglement_entropy(rho) == pytest.approx(
                entropy_eigh(rho), abs=1e-12)


def test_entropy_invariant_under_position_relabeling():
    spec = ScheduleSpec(kind=DisorderKind.SPATIAL, steps=12, halfwidth=12, seed=2)
    sch = build_schedule(spec)
    state = make_initial_state_1d(SYMMETRIC_INITIAL, 12)
    for t in range(1, 13):
        state = step_1d(state, sch.coin_rows(t))
    base = entanglement_entropy(reduced_density(state))
    rolled = state.copy()
    rolled.amps = np.roll(rolled.amps, 5, axis=1)
    flipped = state.copy()
    flipped.amps = flipped.amps[:, ::-1]
    assert entanglement_entropy(reduced_density(rolled)) == pytest.approx(base, abs=1e-12)
    assert entanglement_entropy(reduced_density(flipped)) == pytest.approx(base, abs=1e-12)


def test_product_state_has_zero_entropy():
    # common spinor direction spread over many sites
    state = make_initial_state_1d(SYMMETRIC_INITIAL, 6)
    spinor = np.array([0.6, 0.8j])
    weights = np.sqrt(np.array([0.1, 0.2, 0.3, 0.25, 0.15]))
    state.amps[:] = 0.0
    for i, w in enumerate(weights):
        state.amps[:, 3 + i] = w * spinor
    assert entanglement_entropy(reduced_density(state)) == pytest.approx(0.0, abs=1e-12)
