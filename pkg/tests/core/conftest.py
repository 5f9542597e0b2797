import numpy as np
import pytest

from wittengap import build_icosphere
from wittengap import build_weighted_circle
from wittengap import circle_shrinker
from wittengap import find_abresch_langer


@pytest.fixture(scope="session")
def unit_circle():
    return build_weighted_circle(1000, 1.0)


@pytest.fixture(scope="session")
def icosphere_3():
    return build_icosphere(3)


@pytest.fixture(scope="session")
def icosphere_5():
    return build_icosphere(5)


@pytest.fixture(scope="session")
def al_curve():
    """AL(2, 3) at lambda = 1 on the default 4096 point resolution; shot once per session."""
    return find_abresch_langer(1.0, 2, 3)


@pytest.fixture(scope="session")
def round_curve():
    return circle_shrinker(1.0, 1000)


@pytest.fixture
def rng():
    return np.random.default_rng(2012)
