from fractions import Fraction

import pytest

from mixmult.ideals import minimalize


def ideal(*gens, dim=None):
    """Shorthand: ideal((2,0),(0,1)) in the dimension of its vectors."""
    if dim is None:
        dim = len(gens[0])
    return minimalize(gens, dim)


def frac(s):
    return Fraction(s)


@pytest.fixture
def running_pair():
    """The (x^2, y), (x, y^2) pair used across modules."""
    return ideal((2, 0), (0, 1)), ideal((1, 0), (0, 2))
