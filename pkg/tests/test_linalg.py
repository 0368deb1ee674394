import math

import numpy as np
import pytest

from gausym.linalg import (
    dft_matrix,
    hermitian_eigendecomposition,
    matrix_function_hermitian,
    skew_block_diagonalize,
    takagi_factorization,
)

from conftest import random_complex_symmetric, random_hermitian


class TestHermitianEigendecomposition:
    def test_identity(self):
        w, U = hermitian_eigendecomposition(np.eye(3))
        assert np.allclose(w, [1, 1, 1])
        assert np.allclose(U.conj().T @ U, np.eye(3), atol=1e-12)

    def test_diagonal_sorted_ascending(self):
        w, _ = hermitian_eigendecomposition(np.diag([2.0, -1.0]))
        assert np.allclose(w, [-1.0, 2.0])

    def test_reconstruction_random(self, rng):
        A = random_hermitian(rng, 8)
        w, U = hermitian_eigendecomposition(A)
        assert np.max(np.abs((U * w) @ U.conj().T - A)) < 1e-10
        assert np.max(np.abs(U.conj().T @ U - np.eye(8))) < 1e-10

    def test_rejects_non_hermitian_with_reported_asymmetry(self):
        bad = np.array([[0.0, 1.0], [0.0, 0.0]])
        with pytest.raises(ValueError, match="asymmetry 1.000e"):
            hermitian_eigendecomposition(bad)

    def test_real_symmetric_gives_real_eigenvectors(self, rng):
        A = rng.normal(size=(6, 6))
        A = A + A.T
        _, U = hermitian_eigendecomposition(A.astype(complex))
        assert np.max(np.abs(U.imag)) < 1e-12


class TestMatrixFunction:
    def test_exp_of_zero_is_identity(self):
        assert np.allclose(matrix_function_hermitian(np.zeros((3, 3)), np.exp), np.eye(3))

    def test_cos_of_zero_is_identity(self):
        assert np.allclose(matrix_function_hermitian(np.zeros((2, 2)), np.cos), np.eye(2))

    def test_cosh_scalar_value(self):
        out = matrix_function_hermitian(np.diag([1.0]), np.cosh)
        assert out[0, 0] == pytest.approx(math.cosh(1.0), abs=1e-14)

    def test_propagates_structure_errors(self):
        with pytest.raises(ValueError, match="Hermitian"):
            matrix_function_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]), np.exp)


class TestTakagi:
    def test_zero_matrix(self):
        r, U = takagi_factorization(np.zeros((3, 3)))
        assert np.allclose(r, 0)
        assert np.allclose(U.conj().T @ U, np.eye(3), atol=1e-12)

    def test_real_diagonal(self):
        r, U = takagi_factorization(np.diag([0.5, 1.0]))
        assert np.allclose(r, [0.5, 1.0])
        assert np.max(np.abs(U @ np.diag(r) @ U.T - np.diag([0.5, 1.0]))) < 1e-12

    def test_reconstruction_random(self, rng):
        Z = random_complex_symmetric(rng, 3)
        r, U = takagi_factorization(Z)
        assert np.all(r >= 0)
        assert np.max(np.abs(U @ np.diag(r) @ U.T - Z)) < 1e-10
        assert np.max(np.abs(U.conj().T @ U - np.eye(3))) < 1e-10

    def test_degenerate_singular_values(self):
        Z = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
        r, U = takagi_factorization(Z)
        assert np.allclose(r, [1.0, 1.0])
        assert np.max(np.abs(U @ np.diag(r) @ U.T - Z)) < 1e-12

    def test_rank_deficient(self, rng):
        Z = random_complex_symmetric(rng, 4)
        Z[0, :] = 0.0
        Z[:, 0] = 0.0
        r, U = takagi_factorization(Z)
        assert r[0] == pytest.approx(0.0, abs=1e-12)
        assert np.max(np.abs(U @ np.diag(r) @ U.T - Z)) < 1e-10
        assert np.max(np.abs(U.conj().T @ U - np.eye(4))) < 1e-10

    def test_rejects_non_symmetric(self):
        with pytest.raises(ValueError, match="not symmetric"):
            takagi_factorization(np.array([[0.0, 1.0], [0.5, 0.0]]))


class TestDftMatrix:
    def test_size_one(self):
        assert np.allclose(dft_matrix(1), [[1.0]])

    def test_size_two(self):
        expected = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2)
        assert np.max(np.abs(dft_matrix(2) - expected)) < 1e-15

    @pytest.mark.parametrize("size", [3, 4, 7, 16])
    def test_unitary(self, size):
        W = dft_matrix(size)
        assert np.max(np.abs(W @ W.conj().T - np.eye(size))) < 1e-12

    @pytest.mark.parametrize("size", [2, 5, 8])
    def test_all_ones_maps_to_first_basis_vector(self, size):
        out = dft_matrix(size) @ np.ones(size)
        expected = np.zeros(size)
        expected[0] = math.sqrt(size)
        assert np.max(np.abs(out - expected)) < 1e-12


class TestSkewBlockDiagonalize:
    def test_single_symplectic_block(self):
        omega = np.array([[0.0, 1.0], [-1.0, 0.0]])
        m, O = skew_block_diagonalize(omega)
        assert np.allclose(m, [1.0])
        assert np.allclose(O, np.eye(2))

    def test_zero_matrix(self):
        m, O = skew_block_diagonalize(np.zeros((4, 4)))
        assert np.allclose(m, 0)
        assert np.max(np.abs(O.T @ O - np.eye(4))) < 1e-12

    def test_reconstruction_random(self, rng):
        M = rng.normal(size=(6, 6))
        M = M - M.T
        m, O = skew_block_diagonalize(M)
        blocks = np.zeros((6, 6))
        for i, value in enumerate(m):
            blocks[2 * i, 2 * i + 1] = value
            blocks[2 * i + 1, 2 * i] = -value
        assert np.all(m >= 0)
        assert np.all(np.diff(m) >= 0)
        assert np.max(np.abs(O.T @ M @ O - blocks)) < 1e-9
        assert np.max(np.abs(O.T @ O - np.eye(6))) < 1e-12

    def test_rejects_non_skew(self):
        with pytest.raises(ValueError, match="skew"):
            skew_block_diagonalize(np.eye(2))

    def test_rejects_odd_dimension(self):
        with pytest.raises(ValueError, match="even"):
            skew_block_diagonalize(np.zeros((3, 3)))


class TestReconstructionAtScale:
    """Every decomposition rebuilds its input to 1e-9 relative Frobenius error."""

    @pytest.mark.parametrize("size", [2, 16, 64])
    def test_hermitian(self, rng, size):
        A = random_hermitian(rng, size, scale=10.0)
        w, U = hermitian_eigendecomposition(A)
        rel = np.linalg.norm((U * w) @ U.conj().T - A) / np.linalg.norm(A)
        assert rel < 1e-9

    @pytest.mark.parametrize("size", [2, 17, 40])
    def test_takagi(self, rng, size):
        Z = random_complex_symmetric(rng, size, scale=10.0)
        r, U = takagi_factorization(Z)
        rel = np.linalg.norm(U @ np.diag(r) @ U.T - Z) / np.linalg.norm(Z)
        assert rel < 1e-9

    @pytest.mark.parametrize("size", [4, 16, 64])
    def test_skew(self, rng, size):
        M = rng.normal(size=(size, size)) * 10.0
        M = (M - M.T) / 2
        m, O = skew_block_diagonalize(M)
        blocks = np.zeros((size, size))
        for i, value in enumerate(m):
            blocks[2 * i, 2 * i + 1] = value
            blocks[2 * i + 1, 2 * i] = -value
        rel = np.linalg.norm(O.T @ M @ O - blocks) / np.linalg.norm(M)
        assert rel < 1e-9
