import pytest

from ratcirc import DivisorLattice, poset_from_pairs

STRIKING_ELEMENTS = (1, 2, 3, 4, 6, 12, 18, 36)


@pytest.fixture
def striking_lattice() -> DivisorLattice:
    """The rank-8 sublattice of the divisors of 36 used throughout."""
    return DivisorLattice(36, STRIKING_ELEMENTS)


@pytest.fixture
def poset_n():
    """The 4-node N poset (1<3, 2<3, 2<4) with weights 3,2,3,2; 0-based pairs."""
    return poset_from_pairs((3, 2, 3, 2), [(0, 2), (1, 2), (1, 3)])
