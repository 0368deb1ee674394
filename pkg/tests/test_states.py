import math

import numpy as np
import pytest

from gausym import (
    GaussianState,
    SymplecticMap,
    amplification_channel,
    apply_channel,
    apply_symplectic,
    characteristic_function,
    classical_noise_channel,
    generate_pure_state,
    lossy_channel,
    mean_photon_number,
    rotation_map,
    symplectic_eigenvalues,
    symplectic_form,
    thermal_noise_channel,
    thermal_state,
    vacuum_state,
    williamson,
)
from gausym.fock import photon_expectation, squeezed_displaced_vector
from gausym.overlaps import SingleModeParams
from gausym.states import GaussianChannel

from conftest import random_symplectic


class TestSymplecticForm:
    def test_single_mode(self):
        assert np.array_equal(symplectic_form(1), [[0.0, 1.0], [-1.0, 0.0]])

    def test_two_modes_block_diagonal(self):
        omega = symplectic_form(2)
        assert np.array_equal(omega[:2, :2], [[0.0, 1.0], [-1.0, 0.0]])
        assert np.array_equal(omega[2:, 2:], [[0.0, 1.0], [-1.0, 0.0]])
        assert np.count_nonzero(omega) == 4

    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    def test_squares_to_minus_identity(self, n):
        omega = symplectic_form(n)
        assert np.allclose(omega @ omega, -np.eye(2 * n))


class TestStateValidation:
    def test_rejects_asymmetric_covariance(self):
        cov = np.eye(2)
        cov[0, 1] = 1e-6
        with pytest.raises(ValueError, match="symmetric"):
            GaussianState(np.zeros(2), cov)

    def test_rejects_unphysical_covariance(self):
        with pytest.raises(ValueError, match="unphysical"):
            GaussianState(np.zeros(2), 0.5 * np.eye(2))

    def test_check_can_be_disabled(self):
        state = GaussianState(np.zeros(2), 0.5 * np.eye(2), check=False)
        assert state.num_modes == 1

    def test_json_round_trip(self, rng):
        smap = random_symplectic(rng, 2)
        state = apply_symplectic(vacuum_state(2), smap)
        again = GaussianState.from_json(state.to_json())
        assert np.allclose(again.mean, state.mean)
        assert np.allclose(again.cov, state.cov)


class TestCharacteristicFunction:
    def test_normalized_at_origin(self, rng):
        state = apply_symplectic(thermal_state([1.5, 2.0]), random_symplectic(rng, 2))
        assert characteristic_function(state, np.zeros(4)) == pytest.approx(1.0)

    def test_vacuum_gaussian_profile(self):
        value = characteristic_function(vacuum_state(1), [0.7, -1.1])
        assert value == pytest.approx(math.exp(-0.5 * (0.7**2 + 1.1**2)))

    def test_single_mode_thermal(self):
        value = characteristic_function(thermal_state([3.0]), [1.0, 0.0])
        assert value == pytest.approx(math.exp(-1.5))

    def test_magnitude_bounded_by_one(self, rng):
        state = apply_symplectic(thermal_state([1.2, 3.0, 1.0]), random_symplectic(rng, 3))
        for _ in range(25):
            w = rng.normal(size=6)
            assert abs(characteristic_function(state, w)) <= 1.0 + 1e-12


class TestApplySymplectic:
    def test_identity(self):
        state = thermal_state([2.0])
        out = apply_symplectic(state, SymplecticMap.identity(1))
        assert np.allclose(out.mean, state.mean)
        assert np.allclose(out.cov, state.cov)

    def test_pure_displacement(self):
        out = apply_symplectic(vacuum_state(1), SymplecticMap(np.eye(2), [1.0, -2.0]))
        assert np.allclose(out.mean, [1.0, -2.0])
        assert np.allclose(out.cov, np.eye(2))

    @pytest.mark.parametrize("phi", [0.3, 1.2, math.pi])
    def test_vacuum_rotation_invariance(self, phi):
        out = apply_symplectic(vacuum_state(1), rotation_map(phi))
        assert np.allclose(out.mean, 0)
        assert np.allclose(out.cov, np.eye(2), atol=1e-14)

    def test_preserves_symplectic_eigenvalues(self, rng):
        for _ in range(10):
            sigmas = np.sort(rng.uniform(1.0, 4.0, size=3))
            state = apply_symplectic(thermal_state(sigmas), random_symplectic(rng, 3))
            assert np.max(np.abs(symplectic_eigenvalues(state.cov) - sigmas)) < 1e-8


class TestApplyChannel:
    def test_classical_noise_on_vacuum(self):
        out = apply_channel(vacuum_state(1), classical_noise_channel(1, 0.5))
        assert np.allclose(out.cov, 1.5 * np.eye(2))

    def test_lossless_channel_is_identity(self):
        state = generate_pure_state(0.3, 1.0 + 0.5j)
        out = apply_channel(state, lossy_channel(1, 1.0))
        assert np.allclose(out.mean, state.mean)
        assert np.allclose(out.cov, state.cov)

    def test_thermal_channel_on_vacuum(self):
        out = apply_channel(vacuum_state(1), thermal_noise_channel(1, 0.5, 3.0))
        assert np.allclose(out.cov, 2.0 * np.eye(2))

    def test_amplifier_scales_mean(self):
        state = generate_pure_state(0.0, 1.0)
        out = apply_channel(state, amplification_channel(1, 4.0))
        assert np.allclose(out.mean, [4.0, 0.0])
        assert np.allclose(out.cov, 7.0 * np.eye(2))

    def test_flags_unphysical_output(self):
        shrink = GaussianChannel(0.5 * np.eye(2), np.zeros(2), np.zeros((2, 2)))
        with pytest.raises(ValueError, match="unphysical"):
            apply_channel(vacuum_state(1), shrink)


class TestWilliamson:
    def test_already_thermal(self):
        sigmas, smap = williamson(np.diag([4.0, 4.0]))
        assert np.allclose(sigmas, [4.0])
        assert np.allclose(smap.S, np.eye(2), atol=1e-12)

    def test_vacuum(self):
        sigmas, _ = williamson(np.eye(2))
        assert np.allclose(sigmas, [1.0])

    def test_recovers_squeezed_vacuum(self):
        V = np.diag([math.exp(-2.0), math.exp(2.0)])
        sigmas, smap = williamson(V)
        assert np.allclose(sigmas, [1.0], atol=1e-10)
        assert np.max(np.abs(smap.S @ smap.S.T - V)) < 1e-10

    def test_round_trip_random(self, rng):
        for n in (1, 2, 3):
            sigmas_in = np.sort(rng.uniform(1.0, 5.0, size=n))
            S = random_symplectic(rng, n).S
            V = S @ np.diag(np.repeat(sigmas_in, 2)) @ S.T
            sigmas, smap = williamson(V)
            assert np.max(np.abs(sigmas - sigmas_in)) < 1e-8
            rebuilt = smap.S @ np.diag(np.repeat(sigmas, 2)) @ smap.S.T
            rel = np.linalg.norm(rebuilt - V) / np.linalg.norm(V)
            assert rel < 1e-8

    def test_rejects_indefinite(self):
        with pytest.raises(ValueError, match="positive definite"):
            williamson(np.diag([1.0, -1.0]))


class TestThermalState:
    def test_vacuum_limit(self):
        state = thermal_state([1.0])
        assert np.allclose(state.cov, np.eye(2))
        assert mean_photon_number(state) == pytest.approx(0.0)

    def test_single_photon(self):
        assert mean_photon_number(thermal_state([3.0])) == pytest.approx(1.0)

    def test_two_mode_product(self):
        state = thermal_state([1.0, 5.0])
        assert np.allclose(state.cov, np.diag([1.0, 1.0, 5.0, 5.0]))
        assert mean_photon_number(state) == pytest.approx(2.0)

    def test_rejects_subvacuum_variance(self):
        with pytest.raises(ValueError, match="sigma"):
            thermal_state([0.5])


class TestMeanPhotonNumber:
    def test_vacuum(self):
        assert mean_photon_number(vacuum_state(3)) == pytest.approx(0.0)

    def test_coherent_state(self):
        assert mean_photon_number(generate_pure_state(0.0, 1.0)) == pytest.approx(1.0)

    def test_squeezed_vacuum_matches_brute_force(self):
        state = generate_pure_state(1.0, 0.0)
        assert mean_photon_number(state) == pytest.approx(math.sinh(1.0) ** 2, abs=1e-9)
        brute = photon_expectation(squeezed_displaced_vector(SingleModeParams(1.0, 0.0, 0.0)))
        assert mean_photon_number(state) == pytest.approx(brute, abs=1e-8)
