import numpy as np
import pytest

from cubeheat.boolfn import make_function


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_positive_function(rng, n, low=0.05, high=1.0, normalize=True):
    """Strictly positive random table, optionally normalized to unit mean."""
    values = rng.uniform(low, high, size=2**n)
    return make_function(values, n, normalize=normalize)


def random_interior_point(rng, n, radius=0.95):
    return rng.uniform(-radius, radius, size=n)


@pytest.fixture
def make_positive():
    return random_positive_function


@pytest.fixture
def make_interior():
    return random_interior_point
