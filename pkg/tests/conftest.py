import numpy as np
import pytest

from gausym import compose, rotation_map, squeeze_map


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)


def random_hermitian(rng, n, scale=1.0):
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return scale * (m + m.conj().T) / 2


def random_complex_symmetric(rng, n, scale=1.0):
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return scale * (m + m.T) / 2


def random_symplectic(rng, n_modes, scale=0.5):
    """Random symplectic via rotation-squeeze-rotation composition."""
    return compose(
        [
            rotation_map(random_hermitian(rng, n_modes)),
            squeeze_map(random_complex_symmetric(rng, n_modes, scale)),
            rotation_map(random_hermitian(rng, n_modes)),
        ]
    )
