"""The three fundamental Gaussian unitaries as symplectic maps.

Conventions (single mode, extended to N modes through matrix parameters):

* displacement ``D(alpha) = exp(alpha a* - conj(alpha) a)`` shifts the mean by
  ``(2 Re alpha, 2 Im alpha)`` under hbar = 2;
* rotation ``R(phi) = exp(i a* phi a)`` maps annihilators to ``exp(i phi) a``;
* squeeze ``S(z) = exp((a* z a*^T - a^T conj(z) a)/2)`` maps
  ``a -> cosh(r) a + sinh(r) e^{i theta} a*`` with ``z = r e^{i theta}``,
  so a real positive ``z`` stretches q: the vacuum goes to
  ``diag(e^{2r}, e^{-2r})``.

The switching rules below let any product of the three be reordered with
adjusted parameters; they pin down every sign choice in this module and are
cross-validated against the truncated-basis oracle in the test suite.
"""

import numpy as np

from .linalg import matrix_function_hermitian, takagi_factorization
from .states import GaussianState, SymplecticMap, apply_symplectic, thermal_state, vacuum_state

__all__ = [
    "displacement_vector",
    "displacement_map",
    "rotation_map",
    "squeeze_map",
    "compose",
    "switch_displacement_squeeze",
    "switch_rotation_squeeze",
    "switch_rotation_displacement",
    "generate_pure_state",
    "generate_mixed_state",
]


def _as_complex_vector(alpha):
    return np.atleast_1d(np.asarray(alpha, dtype=complex))


def _as_complex_matrix(value):
    m = np.asarray(value, dtype=complex)
    if m.ndim == 0:
        m = m.reshape(1, 1)
    return m


def _interleaved_symplectic(C, Z):
    """Real 2N x 2N symplectic for the mode map ``a -> C a + Z conj(a)``.

    With quadratures q = a + a*, p = -i(a - a*), the transformed operators are
    q' = Re(C+Z) q - Im(C-Z) p and p' = Im(C+Z) q + Re(C-Z) p, interleaved.
    """
    n = C.shape[0]
    plus = C + Z
    minus = C - Z
    S = np.empty((2 * n, 2 * n))
    S[0::2, 0::2] = plus.real
    S[0::2, 1::2] = -minus.imag
    S[1::2, 0::2] = plus.imag
    S[1::2, 1::2] = minus.real
    return S


def _bogoliubov_pieces(z):
    """cosh/sinh factors (C, Z) of the squeeze mode map from its Takagi form."""
    z = _as_complex_matrix(z)
    r, U = takagi_factorization(z)
    C = (U * np.cosh(r)) @ U.conj().T
    Z = (U * np.sinh(r)) @ U.T
    return C, Z


def displacement_vector(alpha):
    """Phase-space displacement for amplitudes alpha: interleaved (2 Re, 2 Im)."""
    alpha = _as_complex_vector(alpha)
    d = np.empty(2 * alpha.shape[0])
    d[0::2] = 2 * alpha.real
    d[1::2] = 2 * alpha.imag
    return d


def displacement_map(alpha):
    """Symplectic map of the N-mode displacement D(alpha): (I, d)."""
    d = displacement_vector(alpha)
    return SymplecticMap(np.eye(d.shape[0]), d, check=False)


def rotation_map(phi):
    """Symplectic map of the N-mode rotation R(phi), phi Hermitian.

    The complex unitary ``u = exp(i phi)`` becomes the real matrix with 2x2
    blocks [[Re u_jk, -Im u_jk], [Im u_jk, Re u_jk]]; there is no displacement.
    """
    phi = _as_complex_matrix(phi)
    u = matrix_function_hermitian(phi, lambda x: np.exp(1j * x))
    S = _interleaved_symplectic(u, np.zeros_like(u))
    return SymplecticMap(S, np.zeros(S.shape[0]))


def squeeze_map(z):
    """Symplectic map of the N-mode squeeze S(z), z complex symmetric.

    Single mode with real z = r: S = diag(e^r, e^{-r}).
    """
    C, Z = _bogoliubov_pieces(z)
    S = _interleaved_symplectic(C, Z)
    return SymplecticMap(S, np.zeros(S.shape[0]))


def compose(maps):
    """Compose symplectic maps; list order is application order to the state.

    For two maps, the result is (S2 S1, S2 d1 + d2).
    """
    maps = list(maps)
    if not maps:
        raise ValueError("need at least one map")
    S = maps[0].S
    d = maps[0].d
    for m in maps[1:]:
        if m.num_modes * 2 != S.shape[0]:
            raise ValueError("mode count mismatch in composition")
        S = m.S @ S
        d = m.S @ d + m.d
    return SymplecticMap(S, d, check=False)


def switch_displacement_squeeze(alpha, z):
    """Displacement amplitude beta with D(alpha) S(z) = S(z) D(beta).

    beta = cosh(r) alpha - sinh(r) e^{i theta} conj(alpha), evaluated through
    the Takagi factors of z in the multimode case.
    """
    alpha = _as_complex_vector(alpha)
    C, Z = _bogoliubov_pieces(z)
    # invert alpha = C beta + Z conj(beta), using C cosh-like, Z sinh-like:
    # beta = C alpha - Z conj(alpha) satisfies the relation exactly.
    beta = C @ alpha - Z @ alpha.conj()
    return beta if beta.shape[0] > 1 else beta[0]


def switch_rotation_squeeze(z, phi):
    """Squeeze parameter z0 with S(z) R(phi) = R(phi) S(z0).

    z0 = e^{-i phi} z e^{-i phi^T}.
    """
    z = _as_complex_matrix(z)
    phi = _as_complex_matrix(phi)
    E = matrix_function_hermitian(phi, lambda x: np.exp(-1j * x))
    z0 = E @ z @ E.T
    return z0 if z0.shape[0] > 1 else z0[0, 0]


def switch_rotation_displacement(alpha, phi):
    """Displacement beta with D(alpha) R(phi) = R(phi) D(beta): beta = e^{-i phi} alpha."""
    alpha = _as_complex_vector(alpha)
    phi = _as_complex_matrix(phi)
    E = matrix_function_hermitian(phi, lambda x: np.exp(-1j * x))
    beta = E @ alpha
    return beta if beta.shape[0] > 1 else beta[0]


def generate_pure_state(z, alpha):
    """Squeezed-displaced pure state D(alpha) S(z) |vacuum>."""
    alpha = _as_complex_vector(alpha)
    n = alpha.shape[0]
    smap = compose([squeeze_map(z), displacement_map(alpha)])
    return apply_symplectic(vacuum_state(n), smap)


def generate_mixed_state(z, phi, alpha, sigmas):
    """General Gaussian state D(alpha) R(phi) S(z) applied to a thermal state.

    Args:
        z: complex symmetric squeeze parameter (scalar or N x N)
        phi: Hermitian rotation parameter (scalar or N x N)
        alpha: complex displacement amplitudes (scalar or length N)
        sigmas: thermal variances per mode, each >= 1
    """
    base = thermal_state(sigmas)
    smap = compose([squeeze_map(z), rotation_map(phi), displacement_map(alpha)])
    return apply_symplectic(base, smap)
