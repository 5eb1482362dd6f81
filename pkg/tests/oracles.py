"""Independent brute-force oracles used by the test suite.

Everything here is built from first principles (explicit dense global
unitaries, generic eigensolvers, direct moment sums) and deliberately
shares no evolution code with the package: coin entries are written out
inline, shifts are permutation matrices, and the 2D basis-change coin is
assembled from sigma-1 projectors rather than a precomputed closed form.
"""

from __future__ import annotations

import numpy as np

SQRT_HALF = 1.0 / np.sqrt(2.0)


# ---------------------------------------------------------------- 1D --- #

def coin_matrix(xi: float, theta: float, zeta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array(
        [[np.exp(1j * (xi + zeta)) * c, np.exp(1j * (xi - zeta)) * s],
         [-np.exp(-1j * (xi - zeta)) * s, np.exp(-1j * (xi + zeta)) * c]])


def shift_matrix_1d(n_sites: int) -> np.ndarray:
    """Up moves one site left, down one site right; basis (comp, site)."""
    dim = 2 * n_sites
    s = np.zeros((dim, dim), dtype=complex)
    for i in range(n_sites - 1):
        s[i, i + 1] = 1.0                      # up at i <- up at i+1
    for i in range(1, n_sites):
        s[n_sites + i, n_sites + i - 1] = 1.0  # down at i <- down at i-1
    return s


def coin_layer_1d(rows: tuple[np.ndarray, np.ndarray, np.ndarray]) -> np.ndarray:
    xi, theta, zeta = rows
    n_sites = len(theta)
    m = np.zeros((2 * n_sites, 2 * n_sites), dtype=complex)
    for i in range(n_sites):
        b = coin_matrix(xi[i], theta[i], zeta[i])
        m[i, i] = b[0, 0]
        m[i, n_sites + i] = b[0, 1]
        m[n_sites + i, i] = b[1, 0]
        m[n_sites + i, n_sites + i] = b[1, 1]
    return m


def state_vector_1d(state) -> np.ndarray:
    return state.amps.reshape(-1).copy()


def evolve_dense_1d(amps0: np.ndarray, schedule, steps: int) -> np.ndarray:
    """Apply per-step dense unitaries coin @ shift to the flattened state."""
    n_sites = amps0.shape[1]
    shift = shift_matrix_1d(n_sites)
    vec = amps0.reshape(-1).copy()
    for t in range(1, steps + 1):
        vec = (coin_layer_1d(schedule.coin_rows(t)) @ shift) @ vec
    return vec


def evolve_dense_uniform_1d(amps0: np.ndarray, theta: float, steps: int
                            ) -> np.ndarray:
    """Build the uniform-coin step unitary once and apply it ``steps`` times."""
    n_sites = amps0.shape[1]
    rows = (np.zeros(n_sites), np.full(n_sites, theta), np.zeros(n_sites))
    step = coin_layer_1d(rows) @ shift_matrix_1d(n_sites)
    vec = amps0.reshape(-1).copy()
    for _ in range(steps):
        vec = step @ vec
    return vec


def dense_distribution_1d(vec: np.ndarray) -> np.ndarray:
    two_rows = vec.reshape(2, -1)
    return np.sum(np.abs(two_rows) ** 2, axis=0)


def sigma_of(dist: np.ndarray) -> float:
    half = (len(dist) - 1) // 2
    xs = np.arange(-half, half + 1, dtype=float)
    mean = float(xs @ dist)
    return float(np.sqrt(xs * xs @ dist - mean * mean))


def entropy_eigh(rho: np.ndarray) -> float:
    lams = np.linalg.eigvalsh(rho)
    lams = np.clip(lams.real, 0.0, 1.0)
    return float(-np.sum([l * np.log2(l) for l in lams if l > 0.0]))


def reduced_density_of_vec(vec: np.ndarray) -> np.ndarray:
    two_rows = vec.reshape(2, -1)
    return two_rows @ two_rows.conj().T


# ---------------------------------------------------------------- 2D --- #

def _site_index(i: int, j: int, n: int) -> int:
    return i * n + j


def shift_x_2d(n: int) -> np.ndarray:
    dim = 2 * n * n
    s = np.zeros((dim, dim), dtype=complex)
    for i in range(n):
        for j in range(n):
            if i + 1 < n:
                s[_site_index(i, j, n), _site_index(i + 1, j, n)] = 1.0
            if i - 1 >= 0:
                s[n * n + _site_index(i, j, n),
                  n * n + _site_index(i - 1, j, n)] = 1.0
    return s


def _plus_minus_projectors() -> tuple[np.ndarray, np.ndarray]:
    plus = np.array([1.0, 1.0]) * SQRT_HALF
    minus = np.array([1.0, -1.0]) * SQRT_HALF
    return np.outer(plus, plus), np.outer(minus, minus)


def shift_y_2d(n: int) -> np.ndarray:
    """|+> moves to y-1, |-> to y+1, written in the sigma-3 basis."""
    p_plus, p_minus = _plus_minus_projectors()
    dim = 2 * n * n
    s = np.zeros((dim, dim), dtype=complex)
    for i in range(n):
        for j in range(n):
            row_site = _site_index(i, j, n)
            for c_out in range(2):
                for c_in in range(2):
                    if j + 1 < n:
                        s[c_out * n * n + row_site,
                          c_in * n * n + _site_index(i, j + 1, n)] += \
                            p_plus[c_out, c_in]
                    if j - 1 >= 0:
                        s[c_out * n * n + row_site,
                          c_in * n * n + _site_index(i, j - 1, n)] += \
                            p_minus[c_out, c_in]
    return s


def coin_y_layer_2d(vartheta: np.ndarray) -> np.ndarray:
    """Per-site sigma-1-basis rotation, assembled from projectors."""
    p_plus, p_minus = _plus_minus_projectors()
    plus = np.array([1.0, 1.0]) * SQRT_HALF
    minus = np.array([1.0, -1.0]) * SQRT_HALF
    cross_pm = np.outer(plus, minus)   # |+><-|
    cross_mp = np.outer(minus, plus)   # |-><+|
    n = vartheta.shape[0]
    dim = 2 * n * n
    m = np.zeros((dim, dim), dtype=complex)
    for i in range(n):
        for j in range(n):
            v = vartheta[i, j]
            b = (np.cos(v) * p_plus + np.sin(v) * cross_pm
                 - np.sin(v) * cross_mp + np.cos(v) * p_minus)
            site = _site_index(i, j, n)
            for c_out in range(2):
                for c_in in range(2):
                    m[c_out * n * n + site, c_in * n * n + site] = b[c_out, c_in]
    return m


def coin_x_layer_2d(theta: np.ndarray) -> np.ndarray:
    n = theta.shape[0]
    dim = 2 * n * n
    m = np.zeros((dim, dim), dtype=complex)
    for i in range(n):
        for j in range(n):
            c, s = np.cos(theta[i, j]), np.sin(theta[i, j])
            site = _site_index(i, j, n)
            m[site, site] = c
            m[site, n * n + site] = s
            m[n * n + site, site] = -s
            m[n * n + site, n * n + site] = c
    return m


def step_matrix_2d(theta: np.ndarray, vartheta: np.ndarray) -> np.ndarray:
    n = theta.shape[0]
    return (coin_x_layer_2d(theta) @ shift_y_2d(n)
            @ coin_y_layer_2d(vartheta) @ shift_x_2d(n))


def evolve_dense_2d(amps0: np.ndarray, schedule, steps: int) -> np.ndarray:
    n = amps0.shape[1]
    vec = amps0.reshape(-1).copy()
    for t in range(1, steps + 1):
        theta, vartheta = schedule.angle_fields(t)
        vec = step_matrix_2d(theta, vartheta) @ vec
    return vec


# -------------------------- printed-form 2D update (redundancy check) -- #

def step_closed_expanded_2d(amps: np.ndarray, theta: np.ndarray,
                            vartheta: np.ndarray) -> np.ndarray:
    """Closed-form 2D update with trig-expanded coefficients.

    Independent transcription of the fused update: coefficients written as
    cos/sin products term by term instead of the factored form, with the
    1/2 normalization that unitarity fixes.  Uniform angles only.
    """
    up, down = amps[0], amps[1]
    a = np.zeros_like(up)
    b = np.zeros_like(up)
    c = np.zeros_like(up)
    d = np.zeros_like(up)
    a[:-1, :-1] = up[1:, 1:]
    b[1:, :-1] = down[:-1, 1:]
    c[:-1, 1:] = up[1:, :-1]
    d[1:, 1:] = down[:-1, :-1]
    ct, st = np.cos(theta), np.sin(theta)
    cv, sv = np.cos(vartheta), np.sin(vartheta)
    up_new = 0.5 * (
        ct * (cv * (a + b - d + c) + sv * (a - b - d - c))
        + st * (cv * (a + b + d - c) + sv * (a - b + d + c)))
    down_new = 0.5 * (
        -st * (cv * (a + b - d + c) + sv * (a - b - d - c))
        + ct * (cv * (a + b + d - c) + sv * (a - b + d + c)))
    return np.stack((up_new, down_new))
