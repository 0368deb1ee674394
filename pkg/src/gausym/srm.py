"""Square-root measurement on pure-state constellations.

Given the K x K Gram matrix G of constellation inner products, the
square-root measurement has transition probabilities |(G^{1/2})_{ij}|^2 and
correct-decision probability (1/K) sum_i |(G^{1/2})_{ii}|^2 under uniform
priors. For a circulant Gram matrix (any GUS constellation) the same
quantities follow from the DFT of the first row alone; both paths are
implemented and must agree, which the tests enforce.
"""

import json
from dataclasses import dataclass

import numpy as np

from .linalg import hermitian_eigendecomposition
from .overlaps import multimode_gram_entry

__all__ = [
    "InvalidGramError",
    "DetectionReport",
    "MeasurementFrame",
    "gram_from_constellation",
    "is_circulant",
    "srm_generic",
    "srm_circulant",
    "measurement_vectors",
    "gram_to_json",
    "gram_from_json",
]

#: Gram eigenvalues in (-HARD_BOUND, 0) are treated as rounding noise and
#: clamped to zero; anything below -HARD_BOUND rejects the matrix as not PSD
HARD_BOUND = 1e-8

#: relative threshold under which eigenvalues count as zero for G^{-1/2}
PSEUDO_INVERSE_CUT = 1e-12


class InvalidGramError(ValueError):
    """Raised for Gram matrices that are not Hermitian positive semidefinite."""

    def __init__(self, message, most_negative=None):
        super().__init__(message)
        self.most_negative = most_negative


@dataclass(frozen=True)
class DetectionReport:
    """Transition statistics of a square-root measurement.

    Attributes:
        transition: K x K matrix of p_correct(j | i)
        pc: correct-decision probability under uniform priors
        pe: error probability 1 - pc
        lambdas: Gram eigenvalues (DFT order on the circulant path,
            ascending on the generic path)
        path: "generic" or "circulant"
        rank: numerical rank of the Gram matrix
    """

    transition: np.ndarray
    pc: float
    pe: float
    lambdas: np.ndarray
    path: str
    rank: int

    def to_json(self):
        return json.dumps(
            {
                "pc": self.pc,
                "pe": self.pe,
                "lambdas": self.lambdas.tolist(),
                "transition": self.transition.tolist(),
                "path": self.path,
                "rank": self.rank,
            }
        )


@dataclass(frozen=True)
class MeasurementFrame:
    """Measurement vectors expressed in the constellation frame.

    ``coefficients[i, j]`` is the weight of state j in measurement vector i,
    i.e. the matrix G^{-1/2} (pseudo-inverse on the null space).
    """

    coefficients: np.ndarray
    rank: int
    identity_residual: float


def gram_from_constellation(constellation):
    """Gram matrix G[i, j] = <gamma_i | gamma_j> from per-mode parameters."""
    if constellation.params is None:
        raise ValueError(
            "constellation has no parameter representation; "
            "the analytic Gram path needs per-mode squeezed-displaced parameters"
        )
    K = constellation.order
    G = np.empty((K, K), dtype=complex)
    for i in range(K):
        G[i, i] = 1.0
        for j in range(i + 1, K):
            entry = multimode_gram_entry(constellation.params[i], constellation.params[j])
            G[i, j] = entry
            G[j, i] = entry.conjugate()
    return G


def _validated_eigensystem(G):
    G = np.asarray(G, dtype=complex)
    if G.ndim != 2 or G.shape[0] != G.shape[1]:
        raise InvalidGramError("Gram matrix must be square")
    try:
        w, U = hermitian_eigendecomposition(G, tol=1e-10)
    except ValueError as exc:
        raise InvalidGramError(str(exc)) from exc
    most_negative = float(w.min())
    if most_negative < -HARD_BOUND:
        raise InvalidGramError(
            f"Gram matrix is not positive semidefinite: eigenvalue {most_negative:.3e}",
            most_negative=most_negative,
        )
    return np.where(w < 0, 0.0, w), U


def is_circulant(G, tol=1e-12):
    """True when every row is the previous row rotated right by one entry."""
    G = np.asarray(G)
    K = G.shape[0]
    first = G[0]
    deviation = 0.0
    for i in range(1, K):
        deviation = max(deviation, np.max(np.abs(G[i] - np.roll(first, i))))
    return deviation <= tol


def srm_generic(G):
    """Square-root measurement from a full Gram matrix.

    G^{1/2} is formed through the Hermitian eigendecomposition; tiny negative
    eigenvalues from rounding are clamped to zero.
    """
    w, U = _validated_eigensystem(G)
    K = w.shape[0]
    root = (U * np.sqrt(w)) @ U.conj().T
    transition = np.abs(root) ** 2
    pc = float(np.sum(np.abs(np.diag(root)) ** 2) / K)
    rank = int(np.sum(w > PSEUDO_INVERSE_CUT * max(w.max(), 1e-300)))
    return DetectionReport(transition, pc, 1.0 - pc, w, "generic", rank)


def srm_circulant(first_row):
    """Square-root measurement of a circulant Gram matrix from its first row.

    The eigenvalues are the plain DFT of the row,
    lambda_p = sum_q G_0q W_K^{-pq}; the transition probabilities are
    p(j | i) = |(1/K) sum_p sqrt(lambda_p) W_K^{-p(i-j)}|^2 and the
    correct-decision probability is ((1/K) sum_p sqrt(lambda_p))^2.
    """
    row = np.asarray(first_row, dtype=complex)
    K = row.shape[0]
    lambdas = np.fft.fft(row)
    if np.max(np.abs(lambdas.imag)) > 1e-8:
        raise InvalidGramError("circulant row is not Hermitian: complex eigenvalues")
    lambdas = lambdas.real
    most_negative = float(lambdas.min())
    if most_negative < -HARD_BOUND:
        raise InvalidGramError(
            f"circulant Gram is not positive semidefinite: eigenvalue {most_negative:.3e}",
            most_negative=most_negative,
        )
    lambdas = np.where(lambdas < 0, 0.0, lambdas)
    roots = np.sqrt(lambdas)
    # first row of G^{1/2}: inverse DFT of the eigenvalue square roots
    half_row = np.fft.ifft(roots.astype(complex))
    profile = np.abs(half_row) ** 2  # p(j | i) depends only on (i - j) mod K
    idx = (np.arange(K)[:, None] - np.arange(K)[None, :]) % K
    transition = profile[idx]
    pc = float((roots.sum() / K) ** 2)
    rank = int(np.sum(lambdas > PSEUDO_INVERSE_CUT * max(lambdas.max(), 1e-300)))
    return DetectionReport(transition, pc, 1.0 - pc, lambdas, "circulant", rank)


def measurement_vectors(G):
    """Coefficients of the measurement vectors in the state frame: G^{-1/2}.

    On a rank-deficient Gram matrix the pseudo-inverse is used and the rank is
    reported; the identity is then resolved only on the span of the states,
    which is checked through the residual |G^{-1/2} G G^{-1/2} - P_range|.
    """
    w, U = _validated_eigensystem(G)
    cut = PSEUDO_INVERSE_CUT * max(w.max(), 1e-300)
    inv_roots = np.where(w > cut, 1.0 / np.sqrt(np.where(w > cut, w, 1.0)), 0.0)
    coefficients = (U * inv_roots) @ U.conj().T
    rank = int(np.sum(w > cut))
    projector = (U * (w > cut)) @ U.conj().T
    residual = float(np.max(np.abs(coefficients @ np.asarray(G, dtype=complex) @ coefficients - projector)))
    if residual > 1e-9:
        raise InvalidGramError(f"measurement frame inconsistent: residual {residual:.3e}")
    return MeasurementFrame(coefficients, rank, residual)


def gram_to_json(G):
    """Serialize a complex matrix as ``{"re": [[...]], "im": [[...]]}``."""
    G = np.asarray(G, dtype=complex)
    return json.dumps({"re": G.real.tolist(), "im": G.imag.tolist()})


def gram_from_json(text):
    data = json.loads(text)
    re = np.array(data["re"], dtype=float)
    im = np.array(data.get("im", np.zeros_like(re).tolist()), dtype=float)
    if re.shape != im.shape:
        raise ValueError("re and im parts must have equal shapes")
    return re + 1j * im
