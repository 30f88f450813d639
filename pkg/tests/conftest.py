import numpy as np
import pytest

from lie2.liealg import LieAlgebraPresentation, su2


@pytest.fixture
def g():
    return su2()


@pytest.fixture
def g6():
    """su(2) + su(2): the smallest bundled-style algebra on which the 4-argument
    cocycle condition is not vacuous (alternating 4-forms vanish in dim 3)."""
    block = su2().structure
    c6 = np.zeros((6, 6, 6))
    c6[:3, :3, :3] = block
    c6[3:, 3:, 3:] = block
    return LieAlgebraPresentation("su2+su2", 6, c6, np.eye(6))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
