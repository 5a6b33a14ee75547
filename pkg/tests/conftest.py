import numpy as np
import pytest

from qgabor import GridSpec, QSignal2D


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_signal(rng, n1, n2, h1=1.0, h2=1.0, centered=True) -> QSignal2D:
    spec = GridSpec(n1, n2, h1, h2, centered)
    return QSignal2D(spec, rng.standard_normal((n1, n2, 4)))


def random_unit_quaternion(rng):
    q = rng.standard_normal(4)
    return q / np.linalg.norm(q)
