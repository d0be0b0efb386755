import pytest

from avec.generators import ChainSpec, chain, reiman


@pytest.fixture(scope="session")
def reiman2():
    return reiman(2)


@pytest.fixture(scope="session")
def reiman3():
    return reiman(3)


@pytest.fixture(scope="session")
def reiman4():
    return reiman(4)


@pytest.fixture(scope="session")
def chain32():
    return chain(ChainSpec(3, 2))


@pytest.fixture(scope="session")
def chain34():
    return chain(ChainSpec(3, 4))
