import pytest

from toadasm import enumerate_pairs


@pytest.fixture(scope="session")
def fibers_by_order():
    """enumerate_pairs(n) for n = 1..3: larger ASM -> set of smaller ASMs."""
    return {n: enumerate_pairs(n) for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def fibers4():
    """enumerate_pairs(4); kept separate because it walks 1024 tilings."""
    return enumerate_pairs(4)
