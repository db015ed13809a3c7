import pytest

from codesig.goppa import nr_keygen
from codesig.rng import Rng


@pytest.fixture
def rng():
    return Rng(0xC0DE)


# session-scoped desk keys: Goppa keygen is the only genuinely slow setup
@pytest.fixture(scope="session")
def kp_m6t2():
    return nr_keygen(6, 2, Rng(1001))


@pytest.fixture(scope="session")
def kp_m5t2():
    return nr_keygen(5, 2, Rng(1002))


@pytest.fixture(scope="session")
def ring_kps_m5t2():
    rng = Rng(1003)
    return [nr_keygen(5, 2, rng) for _ in range(4)]
