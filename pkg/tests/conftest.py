import math

import numpy as np
import pytest

from motsp.core import MotspInstance
from motsp.tsplib import build_matrix, bundled_path, read_tsplib

SQUARE = [(0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0)]


def coords_matrix(coords):
    n = len(coords)
    return np.array([[math.dist(coords[i], coords[j]) for j in range(n)] for i in range(n)])


@pytest.fixture
def square_matrix():
    return coords_matrix(SQUARE)


@pytest.fixture
def square_instance(square_matrix):
    return MotspInstance((square_matrix,))


@pytest.fixture(scope="session")
def kro_files():
    return read_tsplib(bundled_path("kroA100")), read_tsplib(bundled_path("kroB100"))


@pytest.fixture(scope="session")
def kroab(kro_files):
    a, b = kro_files
    return MotspInstance((build_matrix(a), build_matrix(b)), names=("kroA100", "kroB100"))


def random_instance(n, m, rng, integer=True):
    mats = []
    for _ in range(m):
        xy = rng.uniform(0, 1000, size=(n, 2))
        d = coords_matrix([tuple(p) for p in xy])
        mats.append(np.floor(d + 0.5) if integer else d)
    for d in mats:
        np.fill_diagonal(d, 0.0)
    return MotspInstance(tuple(mats))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
