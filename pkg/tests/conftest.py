import numpy as np
import pytest
from hypothesis import settings
from scipy.linalg import expm

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def pade_walk(adjacency, t, gamma=1.0):
    """Independent reference: scipy's Pade exponential of -i t gamma A."""
    return expm(-1j * t * gamma * np.asarray(adjacency, dtype=float))


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)
