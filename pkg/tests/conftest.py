import pytest

from diskvort import j1_zeros
from diskvort.quadrature import default_rule


@pytest.fixture(scope="session")
def rule():
    return default_rule()


@pytest.fixture(scope="session")
def zeros8():
    return j1_zeros(8)


@pytest.fixture(scope="session")
def zeros20():
    return j1_zeros(20)


@pytest.fixture(scope="session")
def zeros64():
    return j1_zeros(64)
