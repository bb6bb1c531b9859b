import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gravcat import InvalidTemperatureError, ModelParams, gibbs_state, partition_function, x_state_elements
from gravcat.model import build_hamiltonian
from gravcat.thermal import is_density_matrix, log_partition_function

from conftest import coarse_grid, expm_gibbs

param = st.floats(min_value=0.0, max_value=5.0)
temp = st.floats(min_value=0.02, max_value=100.0)


def test_z_high_temperature():
    assert partition_function(ModelParams(1, 0), 1e8) == pytest.approx(4.0, abs=1e-8)


def test_z_decoupled():
    assert partition_function(ModelParams(1, 0), 1.0) == pytest.approx(2 + 2 * math.cosh(1), rel=1e-14)
    assert partition_function(ModelParams(1, 0), 1.0) == pytest.approx(5.086161, abs=1e-6)


def test_z_reference_matches_eigen_trace():
    p, T = ModelParams(1, 1.5), 0.5
    E = np.linalg.eigvalsh(build_hamiltonian(p))
    assert partition_function(p, T) == pytest.approx(np.exp(-E / T).sum(), rel=1e-13)
    assert partition_function(p, T) == pytest.approx(2 * math.cosh(3) + 2 * math.cosh(2 * math.sqrt(3.25)), rel=1e-14)


def test_log_z_survives_overflow():
    p = ModelParams(1, 1.5)
    assert partition_function(p, 1e-4) == math.inf
    assert log_partition_function(p, 1e-4) == pytest.approx(p.delta / 1e-4, rel=1e-12)


@pytest.mark.parametrize("T", [0.0, -1.0, float("nan"), float("inf")])
def test_bad_temperature(T):
    with pytest.raises(InvalidTemperatureError, match="temp"):
        gibbs_state(ModelParams(1, 1), T)
    with pytest.raises(ValueError):
        partition_function(ModelParams(1, 1), T)


def test_infinite_temperature_state():
    for p in (ModelParams(1, 1.5), ModelParams(3, 0.2), ModelParams(0, 0)):
        assert np.abs(gibbs_state(p, 1e8) - np.eye(4) / 4).max() <= 1e-7
        el = x_state_elements(p, 1e8)
        assert np.allclose([el.x, el.z, el.delta, el.eta, el.y], [0.25, 0.25, 0, 0, 0.25], atol=1e-7)


def test_spin_flip_symmetry_at_omega_zero():
    rho = gibbs_state(ModelParams(0, 2), 1.0)
    assert rho[0, 0] == pytest.approx(rho[3, 3], abs=1e-15)


def test_no_coherence_without_coupling():
    assert x_state_elements(ModelParams(1, 0), 1.0).eta == 0.0


def test_reference_matches_expm():
    rho = gibbs_state(ModelParams(1, 1.5), 0.5)
    assert np.abs(rho - expm_gibbs(1, 1.5, 0.5)).max() <= 1e-13
    el = x_state_elements(ModelParams(1, 1.5), 0.5)
    assert np.allclose(el.as_matrix(), rho, atol=1e-15)
    # frozen from the expm oracle
    assert el.x == pytest.approx(0.144214064406606, rel=1e-12)
    assert el.y == pytest.approx(0.50231426179748828, rel=1e-12)
    assert el.eta == pytest.approx(0.26857514804316174, rel=1e-12)
    assert el.z == pytest.approx(0.1767358368979528, rel=1e-12)
    assert el.delta == pytest.approx(0.17586183465211058, rel=1e-12)


def test_grid_matches_expm():
    worst = max(np.abs(gibbs_state(ModelParams(w, g), T) - expm_gibbs(w, g, T)).max()
                for w, g, T in coarse_grid(6))
    assert worst <= 1e-12


def test_ground_state_limit():
    p = ModelParams(1, 1.5)
    rho = gibbs_state(p, 1e-3)
    from gravcat import eigensystem
    psi = eigensystem(p).states[:, 2]
    assert np.abs(rho - np.outer(psi, psi)).max() <= 1e-12


@settings(max_examples=150, deadline=None)
@given(param, param, temp)
def test_density_matrix_invariants(w, g, T):
    rho = gibbs_state(ModelParams(w, g), T)
    assert is_density_matrix(rho, tol=1e-12)
    # X-state shape
    mask = np.array([[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 1, 0], [1, 0, 0, 1]], bool)
    assert np.all(rho[~mask] == 0)
    assert rho[1, 1] == pytest.approx(rho[2, 2], abs=1e-15)
    # eta^2 <= x y (positivity of the outer block)
    assert rho[0, 3] ** 2 <= rho[0, 0] * rho[3, 3] * (1 + 1e-9) + 1e-300


def test_is_density_matrix_rejects():
    assert not is_density_matrix(np.eye(3) / 3)
    assert not is_density_matrix(np.diag([1.5, -0.5, 0, 0]))
    assert not is_density_matrix(np.eye(4))


def test_spec_grid_matches_expm():
    worst = 0.0
    for w in np.linspace(0, 3, 10):
        for g in np.linspace(0, 3, 10):
            for T in np.geomspace(0.05, 5, 10):
                worst = max(worst, np.abs(gibbs_state(ModelParams(w, g), T) - expm_gibbs(w, g, T)).max())
    assert worst <= 1e-10


@settings(max_examples=100, deadline=None)
@given(param, param, temp)
def test_commutes_with_hamiltonian_and_element_identities(w, g, T):
    p = ModelParams(w, g)
    rho = gibbs_state(p, T)
    H = build_hamiltonian(p)
    assert np.abs(rho @ H - H @ rho).max() <= 1e-12 * max(1.0, np.abs(H).max())
    el = x_state_elements(p, T)
    assert el.x + 2 * el.z + el.y == pytest.approx(1.0, abs=1e-12)
    assert el.x * el.y - el.eta**2 >= -1e-12
    assert el.z - el.delta > 0 or el.z + el.delta > 0


def test_inner_block_weights_positive():
    el = x_state_elements(ModelParams(1, 1.5), 0.5)
    assert el.z + el.delta > 0 and el.z - el.delta > 0


@pytest.mark.parametrize("w,g", [(1, 1.5), (0.1, 3), (3, 0.1), (0, 2)])
def test_purity_non_increasing_in_t(w, g):
    Ts = np.geomspace(0.01, 100, 300)
    purity = [np.trace(gibbs_state(ModelParams(w, g), T) @ gibbs_state(ModelParams(w, g), T)) for T in Ts]
    assert np.all(np.diff(purity) <= 1e-12)
