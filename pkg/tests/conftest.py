import pytest

from smallq.uqsl2 import UqSL2


@pytest.fixture(scope="session")
def u3() -> UqSL2:
    return UqSL2(3)


@pytest.fixture(scope="session")
def u5() -> UqSL2:
    return UqSL2(5)
