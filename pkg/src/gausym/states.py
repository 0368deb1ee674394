"""N-mode Gaussian states in phase space.

A state is the pair (mean, cov) of first and second quadrature moments in the
interleaved ordering (q1, p1, ..., qN, pN). The normalization is hbar = 2, so
the vacuum covariance matrix is the identity and a single-mode thermal state
with variance sigma^2 holds (sigma^2 - 1)/2 photons.
"""

import json
from dataclasses import InitVar, dataclass, field

import numpy as np

from .linalg import hermitian_eigendecomposition

__all__ = [
    "GaussianState",
    "SymplecticMap",
    "GaussianChannel",
    "symplectic_form",
    "symplectic_eigenvalues",
    "vacuum_state",
    "thermal_state",
    "product_state",
    "characteristic_function",
    "apply_symplectic",
    "apply_channel",
    "williamson",
    "mean_photon_number",
    "classical_noise_channel",
    "lossy_channel",
    "amplification_channel",
    "thermal_noise_channel",
]

#: smallest admissible symplectic eigenvalue, 1 - PHYSICALITY_TOL
PHYSICALITY_TOL = 1e-8


def symplectic_form(num_modes):
    """The 2N x 2N symplectic form: block diagonal of [[0, 1], [-1, 0]]."""
    if num_modes < 1:
        raise ValueError("num_modes must be a positive integer")
    omega = np.zeros((2 * num_modes, 2 * num_modes))
    for i in range(num_modes):
        omega[2 * i, 2 * i + 1] = 1.0
        omega[2 * i + 1, 2 * i] = -1.0
    return omega


def symplectic_eigenvalues(cov):
    """Symplectic eigenvalues of a covariance matrix, ascending (length N).

    These are the moduli of the eigenvalues of ``Omega V``, each of which
    occurs in a +/- pair.
    """
    V = np.asarray(cov, dtype=float)
    n_modes = V.shape[0] // 2
    eigs = np.linalg.eigvals(symplectic_form(n_modes) @ V)
    values = np.sort(np.abs(eigs.imag))
    return values[::2].copy()


@dataclass(frozen=True)
class GaussianState:
    """Gaussian state as a (mean, cov) pair in quadrature phase space.

    Args:
        mean: real vector of length 2N, interleaved (q1, p1, ..., qN, pN)
        cov: real symmetric positive-definite 2N x 2N covariance matrix
        check: when True (default), verify symmetry and that all symplectic
            eigenvalues are >= 1 - 1e-8; intermediate constructions may
            disable the check.
    """

    mean: np.ndarray
    cov: np.ndarray
    check: InitVar[bool] = True

    def __post_init__(self, check):
        mean = np.atleast_1d(np.asarray(self.mean, dtype=float))
        cov = np.asarray(self.cov, dtype=float)
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)
        dim = mean.shape[0]
        if dim % 2 != 0 or dim == 0:
            raise ValueError("mean vector must have even positive length 2N")
        if cov.shape != (dim, dim):
            raise ValueError(f"covariance shape {cov.shape} does not match mean length {dim}")
        if not (np.all(np.isfinite(mean)) and np.all(np.isfinite(cov))):
            raise ValueError("state moments must be finite")
        if check:
            asym = np.max(np.abs(cov - cov.T))
            if asym > 1e-10:
                raise ValueError(f"covariance is not symmetric: max asymmetry {asym:.3e}")
            smallest = symplectic_eigenvalues(cov).min()
            if smallest < 1.0 - PHYSICALITY_TOL:
                raise ValueError(
                    f"unphysical covariance: smallest symplectic eigenvalue {smallest:.12f} < 1"
                )

    @property
    def num_modes(self):
        return self.mean.shape[0] // 2

    def to_json(self):
        """Serialize as ``{"modes": N, "mean": [...], "cov": [[...]]}``."""
        return json.dumps(
            {"modes": self.num_modes, "mean": self.mean.tolist(), "cov": self.cov.tolist()}
        )

    @classmethod
    def from_json(cls, text, check=True):
        data = json.loads(text)
        state = cls(np.array(data["mean"], dtype=float), np.array(data["cov"], dtype=float), check=check)
        if state.num_modes != data["modes"]:
            raise ValueError("mode count in JSON does not match the mean vector length")
        return state


@dataclass(frozen=True)
class SymplecticMap:
    """Affine phase-space map ``x -> S x + d`` with ``S`` symplectic."""

    S: np.ndarray
    d: np.ndarray
    check: InitVar[bool] = True

    def __post_init__(self, check):
        S = np.asarray(self.S, dtype=float)
        d = np.atleast_1d(np.asarray(self.d, dtype=float))
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "d", d)
        if S.shape != (d.shape[0], d.shape[0]):
            raise ValueError("S must be square with side len(d)")
        if check:
            omega = symplectic_form(S.shape[0] // 2)
            defect = np.max(np.abs(S @ omega @ S.T - omega))
            if defect > 1e-9:
                raise ValueError(f"matrix is not symplectic: |S Omega S^T - Omega| = {defect:.3e}")

    @property
    def num_modes(self):
        return self.d.shape[0] // 2

    @classmethod
    def identity(cls, num_modes):
        return cls(np.eye(2 * num_modes), np.zeros(2 * num_modes))


@dataclass(frozen=True)
class GaussianChannel:
    """Gaussian channel triplet (E, ell, F).

    Acts on a state as ``mean -> E^T mean + ell`` and ``cov -> E^T V E + F``.
    """

    E: np.ndarray
    ell: np.ndarray
    F: np.ndarray

    def __post_init__(self):
        E = np.asarray(self.E, dtype=float)
        ell = np.atleast_1d(np.asarray(self.ell, dtype=float))
        F = np.asarray(self.F, dtype=float)
        object.__setattr__(self, "E", E)
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "F", F)
        dim = ell.shape[0]
        if E.shape != (dim, dim) or F.shape != (dim, dim):
            raise ValueError("E and F must be square with side len(ell)")
        if np.max(np.abs(F - F.T)) > 1e-10:
            raise ValueError("noise matrix F must be symmetric")
        if np.linalg.eigvalsh((F + F.T) / 2).min() < -1e-10:
            raise ValueError("noise matrix F must be positive semidefinite")

    @property
    def num_modes(self):
        return self.ell.shape[0] // 2


def vacuum_state(num_modes):
    """The N-mode vacuum: zero mean, identity covariance."""
    return GaussianState(np.zeros(2 * num_modes), np.eye(2 * num_modes), check=False)


def thermal_state(sigmas):
    """Product of single-mode thermal states with variances ``sigmas``.

    Args:
        sigmas: per-mode variances sigma^2_k >= 1; mode k holds
            (sigma^2_k - 1)/2 photons.
    """
    sigmas = np.atleast_1d(np.asarray(sigmas, dtype=float))
    if np.any(sigmas < 1.0 - PHYSICALITY_TOL):
        raise ValueError(f"thermal variances must satisfy sigma^2 >= 1, got {sigmas}")
    cov = np.diag(np.repeat(sigmas, 2))
    return GaussianState(np.zeros(2 * sigmas.shape[0]), cov, check=False)


def product_state(states):
    """Tensor product of Gaussian states (block-diagonal covariance)."""
    if not states:
        raise ValueError("need at least one factor state")
    mean = np.concatenate([s.mean for s in states])
    dim = mean.shape[0]
    cov = np.zeros((dim, dim))
    offset = 0
    for s in states:
        k = s.mean.shape[0]
        cov[offset : offset + k, offset : offset + k] = s.cov
        offset += k
    return GaussianState(mean, cov, check=False)


def characteristic_function(state, point):
    """Characteristic function of the state at an interleaved real point.

    chi(w) = exp(-1/2 w^T Omega V Omega^T w - i (Omega mean)^T w)
    """
    w = np.atleast_1d(np.asarray(point, dtype=float))
    if w.shape[0] != 2 * state.num_modes:
        raise ValueError("point must have length 2N")
    omega = symplectic_form(state.num_modes)
    quad = w @ (omega @ state.cov @ omega.T) @ w
    lin = (omega @ state.mean) @ w
    return np.exp(-0.5 * quad - 1j * lin)


def apply_symplectic(state, smap, check=True):
    """Apply a symplectic map: ``mean -> S mean + d``, ``cov -> S V S^T``."""
    if smap.num_modes != state.num_modes:
        raise ValueError("mode count mismatch between state and map")
    return GaussianState(
        smap.S @ state.mean + smap.d, smap.S @ state.cov @ smap.S.T, check=check
    )


def apply_channel(state, channel, tol=1e-6):
    """Send a state through a Gaussian channel.

    The output must remain physical: symplectic eigenvalues below ``1 - tol``
    raise, flagging an invalid channel/state pair.
    """
    if channel.num_modes != state.num_modes:
        raise ValueError("mode count mismatch between state and channel")
    mean = channel.E.T @ state.mean + channel.ell
    cov = channel.E.T @ state.cov @ channel.E + channel.F
    out = GaussianState(mean, cov, check=False)
    smallest = symplectic_eigenvalues(cov).min()
    if smallest < 1.0 - tol:
        raise ValueError(
            f"channel output is unphysical: smallest symplectic eigenvalue {smallest:.9f}"
        )
    return out


def williamson(cov, tol=1e-10):
    """Williamson normal form of a positive-definite covariance matrix.

    Finds the symplectic eigenvalues sigma^2_i (ascending) and a symplectic
    ``S_w`` with ``V = S_w diag(s1, s1, ..., sN, sN) S_w^T``. The construction
    block-diagonalizes the skew-symmetric matrix ``V^{1/2} Omega V^{1/2}``.

    Returns:
        tuple[array, SymplecticMap]: the symplectic eigenvalues and the map
        (S_w, 0).
    """
    from .linalg import skew_block_diagonalize

    V = np.asarray(cov, dtype=float)
    dim = V.shape[0]
    if dim % 2 != 0:
        raise ValueError("covariance must have even dimension")
    if np.max(np.abs(V - V.T)) > tol:
        raise ValueError("covariance must be symmetric")
    w, U = hermitian_eigendecomposition(V, tol=tol)
    if w.min() <= 0:
        raise ValueError(f"covariance must be positive definite, smallest eigenvalue {w.min():.3e}")
    root = (U * np.sqrt(w)) @ U.T

    skew = root @ symplectic_form(dim // 2) @ root
    sigmas, O = skew_block_diagonalize(skew, tol=max(tol, 1e-9 * max(1.0, np.max(np.abs(skew)))))
    S_w = root @ O @ np.diag(1.0 / np.sqrt(np.repeat(sigmas, 2)))
    return sigmas, SymplecticMap(S_w, np.zeros(dim))


def mean_photon_number(state):
    """Total mean photon number: (tr V - 2N)/4 + |mean|^2 / 4."""
    n = state.num_modes
    return (np.trace(state.cov) - 2 * n) / 4 + np.dot(state.mean, state.mean) / 4


# ---------------------------------------------------------------------------
# rotation-covariant channel catalog
# ---------------------------------------------------------------------------


def classical_noise_channel(num_modes, noise):
    """Adds isotropic classical noise: E = I, F = noise * I (noise >= 0)."""
    if noise < 0:
        raise ValueError("noise must be non-negative")
    dim = 2 * num_modes
    return GaussianChannel(np.eye(dim), np.zeros(dim), noise * np.eye(dim))


def lossy_channel(num_modes, eta):
    """Attenuation with transmissivity eta <= 1: V -> eta V + (1 - eta) I."""
    if not 0 <= eta <= 1:
        raise ValueError("transmissivity must lie in [0, 1]")
    dim = 2 * num_modes
    return GaussianChannel(np.sqrt(eta) * np.eye(dim), np.zeros(dim), (1 - eta) * np.eye(dim))


def amplification_channel(num_modes, gain):
    """Amplification with gain >= 1: V -> gain V + (gain - 1) I."""
    if gain < 1:
        raise ValueError("gain must be >= 1")
    dim = 2 * num_modes
    return GaussianChannel(np.sqrt(gain) * np.eye(dim), np.zeros(dim), (gain - 1) * np.eye(dim))


def thermal_noise_channel(num_modes, eta, sigma2):
    """Attenuation into a thermal background: V -> eta V + (1 - eta) sigma2 I."""
    if not 0 <= eta <= 1:
        raise ValueError("transmissivity must lie in [0, 1]")
    if sigma2 < 1:
        raise ValueError("background variance must satisfy sigma^2 >= 1")
    dim = 2 * num_modes
    return GaussianChannel(
        np.sqrt(eta) * np.eye(dim), np.zeros(dim), (1 - eta) * sigma2 * np.eye(dim)
    )
