import pytest

from zgcentral.catalog import (
    alternating4,
    cyclic,
    dihedral,
    quaternion8,
    symmetric,
)


@pytest.fixture(scope="session")
def s3():
    return symmetric(3)


@pytest.fixture(scope="session")
def s4():
    return symmetric(4)


@pytest.fixture(scope="session")
def a4():
    return alternating4()


@pytest.fixture(scope="session")
def c4():
    return cyclic(4)


@pytest.fixture(scope="session")
def c5():
    return cyclic(5)


@pytest.fixture(scope="session")
def q8():
    return quaternion8()


@pytest.fixture(scope="session")
def d4():
    return dihedral(4)


@pytest.fixture(scope="session")
def d5():
    return dihedral(5)
