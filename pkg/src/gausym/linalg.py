"""Dense numerical kernels shared by the rest of the package.

Everything here targets small matrices (dimensions up to ~100), where LAPACK
via numpy/scipy is both the fastest and the most accurate option available.
"""

import numpy as np
import scipy.linalg

__all__ = [
    "hermitian_eigendecomposition",
    "matrix_function_hermitian",
    "takagi_factorization",
    "dft_matrix",
    "skew_block_diagonalize",
]

#: default absolute tolerance for structure checks (Hermitian/symmetric/skew)
DEFAULT_TOL = 1e-10


def _require_square(matrix):
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {matrix.shape}")


def hermitian_eigendecomposition(matrix, tol=DEFAULT_TOL):
    """Eigendecomposition ``A = U diag(w) U^†`` of a Hermitian matrix.

    Args:
        matrix (array): square matrix, Hermitian within ``tol``
        tol (float): maximum tolerated entrywise deviation ``|A - A^†|``

    Returns:
        tuple[array, array]: eigenvalues in ascending order (real) and the
        unitary matrix of column eigenvectors. For a real symmetric input the
        eigenvectors are real.

    Raises:
        ValueError: if the input deviates from Hermitian symmetry by more
            than ``tol`` (the maximum asymmetry is reported).
    """
    A = np.asarray(matrix)
    _require_square(A)
    asymmetry = np.max(np.abs(A - A.conj().T)) if A.size else 0.0
    if asymmetry > tol:
        raise ValueError(
            f"matrix is not Hermitian: max asymmetry {asymmetry:.3e} exceeds tol {tol:.3e}"
        )
    H = (A + A.conj().T) / 2
    if np.iscomplexobj(H) and np.max(np.abs(H.imag)) < 1e-14 * max(1.0, np.max(np.abs(H.real))):
        H = H.real
    return np.linalg.eigh(H)


def matrix_function_hermitian(matrix, func, tol=DEFAULT_TOL):
    """Apply a scalar function to a Hermitian matrix through its spectrum.

    Returns ``U f(Λ) U^†`` where ``A = U Λ U^†``. ``func`` is evaluated on the
    (real) eigenvalues and may return complex values, e.g. ``lambda x: np.exp(1j*x)``.
    """
    w, U = hermitian_eigendecomposition(matrix, tol=tol)
    fw = np.asarray(func(w))
    return (U * fw) @ U.conj().T


def takagi_factorization(matrix, tol=DEFAULT_TOL):
    """Takagi factorization ``Z = U diag(r) U^T`` of a complex symmetric matrix.

    The factorization is computed from the eigendecomposition of the real
    symmetric embedding ``[[Re Z, Im Z], [Im Z, -Re Z]]``: its spectrum comes
    in ``±r`` pairs and the eigenvectors of the non-negative half assemble
    into the Takagi unitary. The (possibly degenerate) zero eigenspace is
    resolved greedily so that the resulting columns stay orthonormal.

    Args:
        matrix (array): square matrix, symmetric within ``tol`` (``Z = Z^T``)
        tol (float): maximum tolerated entrywise deviation ``|Z - Z^T|``

    Returns:
        tuple[array, array]: non-negative singular values in ascending order
        and the unitary ``U`` with ``Z = U diag(r) U^T``.
    """
    Z = np.asarray(matrix, dtype=complex)
    _require_square(Z)
    asymmetry = np.max(np.abs(Z - Z.T)) if Z.size else 0.0
    if asymmetry > tol:
        raise ValueError(
            f"matrix is not symmetric: max asymmetry {asymmetry:.3e} exceeds tol {tol:.3e}"
        )
    Z = (Z + Z.T) / 2
    n = Z.shape[0]
    A, B = Z.real, Z.imag
    embedding = np.block([[A, B], [B, -A]])
    w, P = np.linalg.eigh(embedding)

    scale = max(1.0, np.max(np.abs(w)))
    zero_cut = 1e-13 * scale
    singulars = []
    columns = []
    for idx in np.flatnonzero(w > zero_cut):
        v = P[:, idx]
        singulars.append(w[idx])
        columns.append(v[:n] + 1j * v[n:])

    # Zero (or numerically zero) eigenspace: pick one column per +/- pair.
    # J = [[0,-I],[I,0]] anticommutes with the embedding, so the null space is
    # J-invariant; removing span{v, Jv} at each step keeps the complex columns
    # orthonormal.
    V0 = P[:, np.abs(w) <= zero_cut]
    while V0.shape[1] > 0:
        v = V0[:, 0]
        singulars.append(0.0)
        columns.append(v[:n] + 1j * v[n:])
        Jv = np.concatenate([-v[n:], v[:n]])
        M = np.column_stack([v, Jv])
        rest = V0[:, 1:] - M @ (M.T @ V0[:, 1:])
        if rest.shape[1] == 0:
            break
        Q, R = np.linalg.qr(rest)
        V0 = Q[:, np.abs(np.diag(R)) > 1e-10]

    order = np.argsort(singulars, kind="stable")
    r = np.array(singulars)[order]
    U = np.column_stack([columns[i] for i in order]) if columns else np.zeros((n, 0))
    return r, U


def dft_matrix(size):
    """Unitary DFT matrix ``W = K^{-1/2} [w^{-rs}]`` with ``w = exp(2*pi*i/K)``.

    The eigenvalue vector of a circulant matrix with first row ``g`` is the
    plain (unnormalized) DFT of ``g``; this matrix is the unitary version used
    to diagonalize such matrices as ``C = W^* diag(DFT(g)) W``.
    """
    if size < 1:
        raise ValueError("size must be a positive integer")
    idx = np.arange(size)
    return np.exp(-2j * np.pi * np.outer(idx, idx) / size) / np.sqrt(size)


def skew_block_diagonalize(matrix, tol=DEFAULT_TOL):
    """Block-diagonalize a real skew-symmetric matrix with an orthogonal map.

    Computes an orthogonal ``O`` and non-negative values ``m_i`` such that
    ``O^T M O`` is block diagonal with 2x2 blocks ``[[0, m_i], [-m_i, 0]]``,
    i.e. the real Schur form of ``M`` with the block signs and order
    normalized (``m_i`` ascending).

    Args:
        matrix (array): real skew-symmetric matrix of even dimension
        tol (float): maximum tolerated entrywise deviation ``|M + M^T|``

    Returns:
        tuple[array, array]: the values ``m_i`` (length ``dim/2``, ascending)
        and the orthogonal matrix ``O``.
    """
    M = np.asarray(matrix, dtype=float)
    _require_square(M)
    if M.shape[0] % 2 != 0:
        raise ValueError("skew-symmetric block diagonalization requires even dimension")
    asymmetry = np.max(np.abs(M + M.T)) if M.size else 0.0
    if asymmetry > tol:
        raise ValueError(
            f"matrix is not skew-symmetric: max |M + M^T| = {asymmetry:.3e} exceeds tol {tol:.3e}"
        )
    M = (M - M.T) / 2
    dim = M.shape[0]
    T, O = scipy.linalg.schur(M, output="real")

    scale = max(1.0, np.max(np.abs(M)))
    pairs = []
    lone_columns = []
    i = 0
    while i < dim:
        if i + 1 < dim and abs(T[i, i + 1]) > 1e-13 * scale:
            value = T[i, i + 1]
            cols = O[:, [i, i + 1]]
            if value < 0:
                cols = cols[:, ::-1]
                value = -value
            pairs.append((value, cols))
            i += 2
        else:
            lone_columns.append(O[:, i])
            i += 1
    # columns of (numerically) zero eigenvalue pair up into zero blocks
    for j in range(0, len(lone_columns) - 1, 2):
        pairs.append((0.0, np.column_stack([lone_columns[j], lone_columns[j + 1]])))

    pairs.sort(key=lambda item: item[0])
    values = np.array([p[0] for p in pairs])
    O_sorted = np.column_stack([p[1] for p in pairs])
    return values, O_sorted
