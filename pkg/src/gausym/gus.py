"""Geometrically uniform constellations and their symmetry machinery.

A constellation of K states has geometrically uniform symmetry (GUS) when all
states are generated from the first by powers of a single order-K symmetry
operator. Two representations of the operator are supported: a phase-space
symplectic map (states stored as Gaussian moments) and an explicit unitary
matrix on a truncated Hilbert space (states stored as complex vectors).
"""

import cmath
import json
from dataclasses import dataclass, field

import numpy as np

from .linalg import matrix_function_hermitian
from .overlaps import SingleModeParams
from .states import GaussianState, SymplecticMap, apply_channel, apply_symplectic, product_state
from .unitaries import generate_pure_state, rotation_map

__all__ = [
    "SizeLimitError",
    "Constellation",
    "SymmetryDescriptor",
    "GusReport",
    "ClosureReport",
    "rotate_params",
    "build_psk",
    "mode_cycle_map",
    "ppm_symmetry_operator",
    "ppm_projectors",
    "ppm_phase_matrix",
    "verify_gus",
    "closure_phase_grid",
    "channel_closure_check",
]

PHASE_SPACE = "phase-space-symplectic"
HILBERT = "hilbert-permutation"

#: largest admissible Hilbert dimension n^K for explicit PPM operators
PPM_DIMENSION_CAP = 4096


class SizeLimitError(ValueError):
    """Raised when an explicit operator would exceed the dimension cap."""


@dataclass(frozen=True)
class Constellation:
    """K-state constellation with uniform (default) prior probabilities.

    ``states`` holds either Gaussian states (phase-space representation) or
    complex vectors (truncated Hilbert representation). When available,
    ``params`` carries the per-mode squeezed-displaced parameters of each
    state, which is what the analytic Gram-matrix path consumes.
    """

    states: tuple
    params: tuple = None
    priors: np.ndarray = None

    def __post_init__(self):
        states = tuple(self.states)
        if not states:
            raise ValueError("constellation needs at least one state")
        object.__setattr__(self, "states", states)
        if self.params is not None:
            params = tuple(tuple(p) for p in self.params)
            if len(params) != len(states):
                raise ValueError("params and states must have equal length")
            object.__setattr__(self, "params", params)
        priors = self.priors
        if priors is None:
            priors = np.full(len(states), 1.0 / len(states))
        else:
            priors = np.asarray(priors, dtype=float)
            if priors.shape != (len(states),):
                raise ValueError("priors must have one entry per state")
            if abs(priors.sum() - 1.0) > 1e-12:
                raise ValueError("priors must sum to 1")
        object.__setattr__(self, "priors", priors)

    @property
    def order(self):
        return len(self.states)

    @property
    def num_modes(self):
        first = self.states[0]
        if isinstance(first, GaussianState):
            return first.num_modes
        if self.params is not None:
            return len(self.params[0])
        raise ValueError("mode count is undefined for bare Hilbert vectors")

    def to_json(self):
        """Serialize per-mode parameters as
        ``{"K":..., "modes":..., "symbols": [[{"z": [re, im], "alpha": [re, im]}, ...], ...]}``.
        """
        if self.params is None:
            raise ValueError("constellation has no parameter representation")
        symbols = [
            [
                {"z": [p.z.real, p.z.imag], "alpha": [complex(p.alpha).real, complex(p.alpha).imag]}
                for p in mode_params
            ]
            for mode_params in self.params
        ]
        return json.dumps({"K": self.order, "modes": self.num_modes, "symbols": symbols})

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        symbols = data["symbols"]
        if len(symbols) != data["K"]:
            raise ValueError("symbol count does not match K")
        params = []
        for entry in symbols:
            if len(entry) != data["modes"]:
                raise ValueError("per-symbol mode count does not match modes")
            mode_params = []
            for mode in entry:
                z = complex(mode["z"][0], mode["z"][1])
                alpha = complex(mode["alpha"][0], mode["alpha"][1])
                mode_params.append(SingleModeParams.from_z(z, alpha))
            params.append(mode_params)
        states = [_state_from_mode_params(p) for p in params]
        return cls(tuple(states), tuple(tuple(p) for p in params))


def _state_from_mode_params(mode_params):
    return product_state([generate_pure_state(p.z, p.alpha) for p in mode_params])


@dataclass(frozen=True)
class SymmetryDescriptor:
    """Order-K symmetry operator in one of its two representations."""

    kind: str
    order: int
    map: SymplecticMap = None
    matrix: np.ndarray = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("symmetry order must be positive")
        if self.kind == PHASE_SPACE:
            if self.map is None:
                raise ValueError("phase-space symmetry needs a symplectic map")
            S, d = np.eye(self.map.S.shape[0]), np.zeros(self.map.d.shape[0])
            for _ in range(self.order):
                d = self.map.S @ d + self.map.d
                S = self.map.S @ S
            defect = max(np.max(np.abs(S - np.eye(S.shape[0]))), np.max(np.abs(d)))
            if defect > 1e-9:
                raise ValueError(f"map is not of order {self.order}: defect {defect:.3e}")
        elif self.kind == HILBERT:
            if self.matrix is None:
                raise ValueError("Hilbert symmetry needs an operator matrix")
            Q = np.asarray(self.matrix)
            object.__setattr__(self, "matrix", Q)
            power = np.linalg.matrix_power(Q, self.order)
            eye = np.eye(Q.shape[0], dtype=Q.dtype)
            if np.issubdtype(Q.dtype, np.integer):
                if not np.array_equal(power, eye):
                    raise ValueError(f"operator is not of order {self.order}")
            elif np.max(np.abs(power - eye)) > 1e-10:
                raise ValueError(f"operator is not of order {self.order}")
        else:
            raise ValueError(f"unknown symmetry kind {self.kind!r}")


@dataclass(frozen=True)
class GusReport:
    """Outcome of a GUS verification: deviations and located violations."""

    ok: bool
    max_deviation: float
    violations: tuple = ()

    def __bool__(self):
        return self.ok


def rotate_params(z, alpha, phi):
    """Parameters of a rotated squeezed-displaced state.

    R(phi) D(alpha) S(z) |0> = D(alpha') S(z') |0> with
    z' = e^{i phi} z e^{i phi^T} and alpha' = e^{i phi} alpha; single mode:
    z' = e^{2 i phi} z, alpha' = e^{i phi} alpha.
    """
    z_mat = np.asarray(z, dtype=complex)
    alpha_vec = np.atleast_1d(np.asarray(alpha, dtype=complex))
    scalar = z_mat.ndim == 0
    if scalar:
        z_mat = z_mat.reshape(1, 1)
    phi_mat = np.asarray(phi, dtype=complex)
    if phi_mat.ndim == 0:
        phi_mat = phi_mat * np.eye(z_mat.shape[0])
    E = matrix_function_hermitian(phi_mat, lambda x: np.exp(1j * x))
    z_new = E @ z_mat @ E.T
    alpha_new = E @ alpha_vec
    if scalar:
        return z_new[0, 0], alpha_new[0]
    return z_new, alpha_new


def build_psk(order, z, alpha):
    """K-ary PSK constellation of single-mode squeezed-displaced states.

    State i carries the reference parameters rotated by ``2 pi i / K``; the
    symmetry operator is the rotation by ``2 pi / K``.

    Returns:
        tuple[Constellation, SymmetryDescriptor]
    """
    if order < 2:
        raise ValueError("PSK needs at least two states")
    params = []
    states = []
    for i in range(order):
        zi, ai = rotate_params(complex(z), complex(alpha), 2 * np.pi * i / order)
        params.append((SingleModeParams.from_z(zi, ai),))
        states.append(generate_pure_state(zi, ai))
    descriptor = SymmetryDescriptor(
        PHASE_SPACE, order, map=rotation_map(2 * np.pi / order)
    )
    return Constellation(tuple(states), tuple(params)), descriptor


def mode_cycle_map(num_modes):
    """Symplectic permutation advancing mode k to mode k+1 (mod N)."""
    dim = 2 * num_modes
    S = np.zeros((dim, dim))
    for k in range(num_modes):
        target = (k + 1) % num_modes
        S[2 * target, 2 * k] = 1.0
        S[2 * target + 1, 2 * k + 1] = 1.0
    return SymplecticMap(S, np.zeros(dim))


def ppm_symmetry_operator(order, dim_per_slot):
    """Cyclic-shift symmetry operator of order-K PPM on K slots of dimension n.

    Q = sum_k w_n(k) (x) I_{n^{K-1}} (x) w_n(k)^T with the first Kronecker
    factor varying fastest, which is the exact 0/1 permutation matrix that
    shifts slot contents cyclically. Integer arithmetic throughout, so
    ``Q^K = I`` holds exactly.
    """
    n, K = dim_per_slot, order
    total = n**K
    if total > PPM_DIMENSION_CAP:
        raise SizeLimitError(f"dimension n^K = {total} exceeds cap {PPM_DIMENSION_CAP}")
    middle = np.eye(n ** (K - 1), dtype=np.int64) if K > 1 else np.eye(1, dtype=np.int64)
    Q = np.zeros((total, total), dtype=np.int64)
    for k in range(n):
        w = np.zeros((n, 1), dtype=np.int64)
        w[k, 0] = 1
        Q += np.kron(np.kron(w.T, middle), w)
    return Q


def ppm_projectors(Q, order):
    """Spectral projectors of an order-K symmetry operator.

    P_m = (1/K) sum_k W_K^{-mk} Q^k, the inverse DFT of the operator powers.
    """
    Q = np.asarray(Q, dtype=complex)
    powers = [np.eye(Q.shape[0], dtype=complex)]
    for _ in range(order - 1):
        powers.append(powers[-1] @ Q)
    closure = np.max(np.abs(powers[-1] @ Q - powers[0]))
    if closure > 1e-10:
        raise ValueError(f"operator is not of order {order}: |Q^K - I| = {closure:.3e}")
    projectors = []
    for m in range(order):
        P = np.zeros_like(Q)
        for k in range(order):
            P += cmath.exp(-2j * np.pi * m * k / order) * powers[k]
        projectors.append(P / order)
    return projectors


def ppm_phase_matrix(Q, order):
    """Hermitian phase phi with exp(i phi) = Q and eigenvalues 2 pi m / K.

    phi = sum_m (2 pi m / K) P_m over the spectral projectors of Q. The
    reconstruction exp(i phi) = Q is verified to 1e-8 before returning.
    """
    projectors = ppm_projectors(Q, order)
    phi = np.zeros_like(projectors[0])
    for m, P in enumerate(projectors):
        phi += (2 * np.pi * m / order) * P
    phi = (phi + phi.conj().T) / 2
    reconstructed = matrix_function_hermitian(phi, lambda x: np.exp(1j * x))
    residual = np.max(np.abs(reconstructed - np.asarray(Q, dtype=complex)))
    if residual > 1e-8:
        raise ValueError(f"phase matrix inconsistent: |exp(i phi) - Q| = {residual:.3e}")
    return phi


def _phase_insensitive_mismatch(u, v):
    """1 - |<u|v>| / (|u| |v|): zero iff the vectors match up to a phase."""
    norm = np.linalg.norm(u) * np.linalg.norm(v)
    if norm == 0:
        raise ValueError("zero vector in constellation")
    return 1.0 - abs(np.vdot(u, v)) / norm


def verify_gus(constellation, symmetry, tol=1e-9):
    """Check that state_i equals the i-th symmetry power applied to state_0.

    Phase-space symmetries compare means and covariances entrywise; Hilbert
    symmetries compare vectors up to a global phase. Returns a report with the
    worst deviation and one entry per violating state.
    """
    states = constellation.states
    if constellation.order != symmetry.order:
        return GusReport(
            False,
            float("inf"),
            (f"constellation order {constellation.order} != symmetry order {symmetry.order}",),
        )
    violations = []
    worst = 0.0
    if symmetry.kind == PHASE_SPACE:
        current = states[0]
        for i, expected in enumerate(states):
            dev = max(
                np.max(np.abs(expected.mean - current.mean)),
                np.max(np.abs(expected.cov - current.cov)),
            )
            worst = max(worst, dev)
            if dev > tol:
                violations.append(f"state {i}: phase-space deviation {dev:.3e}")
            current = apply_symplectic(current, symmetry.map, check=False)
    else:
        current = np.asarray(states[0], dtype=complex)
        for i, expected in enumerate(states):
            dev = _phase_insensitive_mismatch(np.asarray(expected, dtype=complex), current)
            worst = max(worst, dev)
            if dev > tol:
                violations.append(f"state {i}: vector mismatch {dev:.3e}")
            current = symmetry.matrix @ current
    return GusReport(not violations, worst, tuple(violations))


@dataclass(frozen=True)
class ClosureReport:
    """Outcome of the rotation-covariance check for a Gaussian channel."""

    ok: bool
    commutes: bool
    isotropic_noise: bool
    samples_ok: bool
    max_commutator: float
    max_anisotropy: float
    max_sample_deviation: float

    def __bool__(self):
        return self.ok


def closure_phase_grid(order, num_random=8, seed=1234):
    """Angles 2 pi k / K plus a few seeded random angles."""
    rng = np.random.default_rng(seed)
    base = [2 * np.pi * k / order for k in range(order)]
    return base + list(rng.uniform(0, 2 * np.pi, size=num_random))


def channel_closure_check(channel, phi_grid, tol=1e-9):
    """Test whether a channel maps rotation-covariant families to themselves.

    Requires E to commute with every grid rotation and F to be a multiple of
    the identity; additionally verifies on sample covariances that
    channel-then-rotate equals rotate-then-channel.
    """
    n = channel.num_modes
    dim = 2 * n
    max_comm = 0.0
    sample_covs = [np.eye(dim)]
    base = np.diag([np.e, 1 / np.e] * n)
    sample_covs.append(base)
    for phi in phi_grid:
        S = rotation_map(phi * np.eye(n)).S
        max_comm = max(max_comm, np.max(np.abs(channel.E @ S - S @ channel.E)))
    mean_noise = np.trace(channel.F) / dim
    max_aniso = np.max(np.abs(channel.F - mean_noise * np.eye(dim)))
    commutes = max_comm < tol
    isotropic = max_aniso < tol

    max_sample = 0.0
    for phi in phi_grid:
        S = rotation_map(phi * np.eye(n)).S
        for V in sample_covs:
            through_then_rotate = S @ (channel.E.T @ V @ channel.E + channel.F) @ S.T
            rotate_then_through = channel.E.T @ (S @ V @ S.T) @ channel.E + channel.F
            max_sample = max(max_sample, np.max(np.abs(through_then_rotate - rotate_then_through)))
    samples_ok = max_sample < max(tol, 1e-8)

    ok = commutes and isotropic and samples_ok
    return ClosureReport(ok, commutes, isotropic, samples_ok, max_comm, max_aniso, max_sample)
