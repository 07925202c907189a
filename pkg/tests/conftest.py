import pytest

from rankmet.fields import make_field


@pytest.fixture(scope="session")
def f4():
    return make_field(2, 1, 2)


@pytest.fixture(scope="session")
def f8():
    return make_field(2, 1, 3)


@pytest.fixture(scope="session")
def f16():
    return make_field(2, 1, 4)


@pytest.fixture(scope="session")
def f9():
    return make_field(3, 1, 2)


@pytest.fixture(scope="session")
def f64_tower():
    # q = 4, middle field F_4 inside F_64
    return make_field(2, 2, 3)
