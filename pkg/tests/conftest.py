import pytest

from raybundles import FREE_PS, GAMMA, build_ball


@pytest.fixture(scope="session")
def gamma_r4():
    return build_ball(GAMMA, 4)


@pytest.fixture(scope="session")
def gamma_r6():
    return build_ball(GAMMA, 6)


@pytest.fixture(scope="session")
def gamma_r8():
    return build_ball(GAMMA, 8)


@pytest.fixture(scope="session")
def tree_r4():
    return build_ball(FREE_PS, 4)
