import pytest

from rackhom.shelf import CoefficientSystem, dihedral, permutation, trivial


@pytest.fixture(scope="session")
def d3():
    return dihedral(3)


@pytest.fixture(scope="session")
def d4():
    return dihedral(4)


@pytest.fixture(scope="session")
def t2():
    return trivial(2)


@pytest.fixture(scope="session")
def swap():
    """The permutation rack x◁y = σ(x) with σ = (0 1); not a spindle."""
    return permutation([1, 0])


@pytest.fixture(scope="session")
def singleton():
    return trivial(1)


@pytest.fixture
def trivial_coeff():
    def make(shelf, modulus=None):
        return CoefficientSystem.trivial(shelf, modulus)

    return make
