import pytest

from src.coxeter.bruhat import build_bruhat_poset
from src.rank_order.hasse import involution_poset


@pytest.fixture(scope="session")
def bruhat_c2():
    return build_bruhat_poset(2, "C")


@pytest.fixture(scope="session")
def bruhat_c3():
    return build_bruhat_poset(3, "C")


@pytest.fixture(scope="session")
def involutions_c3(bruhat_c3):
    return involution_poset(3, "C", poset=bruhat_c3)
