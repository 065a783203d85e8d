import pytest

from ifsmodel import load_example


@pytest.fixture(scope="session")
def flower_system():
    return load_example("flower").to_system()


@pytest.fixture(scope="session")
def maple_system():
    return load_example("maple").to_system()


@pytest.fixture(scope="session")
def sierpinski_system():
    return load_example("sierpinski").to_system()
