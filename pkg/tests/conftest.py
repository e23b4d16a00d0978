import numpy as np
import pytest


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20250808)


def rel_err(got, want):
    return abs(got - want) / max(abs(want), 1e-300)
