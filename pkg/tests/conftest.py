import numpy as np
import pytest

from tccss.io_cli import figure_spectrum
from tccss.soliton import FieldSample, make_evaluator


@pytest.fixture(scope="session")
def breather_cfg():
    return figure_spectrum(1)


@pytest.fixture(scope="session")
def collision_cfg():
    return figure_spectrum(2)


@pytest.fixture(scope="session")
def one_soliton_cfg():
    return figure_spectrum(3)


@pytest.fixture(scope="session")
def two_soliton_cfg():
    return figure_spectrum(4)


@pytest.fixture(scope="session")
def one_soliton_field(one_soliton_cfg):
    return make_evaluator(one_soliton_cfg)


@pytest.fixture(scope="session")
def two_soliton_field(two_soliton_cfg):
    return make_evaluator(two_soliton_cfg)


@pytest.fixture
def zero_field():
    def f(x, t):
        return FieldSample(0.0, 0.0, 0.0)

    return f


def max_field_diff(a: FieldSample, b: FieldSample) -> float:
    return float(np.max(np.abs(a.as_array() - b.as_array())))
