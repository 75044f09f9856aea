import pytest

from crystalkit.rootsys import cartan_data


@pytest.fixture(scope="session")
def a1():
    return cartan_data("A1")


@pytest.fixture(scope="session")
def a2():
    return cartan_data("A2")


@pytest.fixture(scope="session")
def a3():
    return cartan_data("A3")


@pytest.fixture(scope="session")
def a4():
    return cartan_data("A4")


@pytest.fixture(scope="session")
def a5():
    return cartan_data("A5")


@pytest.fixture(scope="session")
def d4():
    return cartan_data("D4")
