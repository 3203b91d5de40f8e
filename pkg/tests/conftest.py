import pytest

from fixauth.sim.hash_family import HashFamilyParams


@pytest.fixture
def tiny_params():
    # p = 11, |T| = 4
    return HashFamilyParams.from_sizes(8, 4)


@pytest.fixture
def small_params():
    # p = 67, |T| = 8
    return HashFamilyParams.from_bits(6, 3)


@pytest.fixture
def default_params():
    # p = 521, |T| = 128
    return HashFamilyParams.from_bits(9, 7)
