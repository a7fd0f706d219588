from fractions import Fraction

import pytest

from deltastar.core import Params

# two generic parameter sets (k1, k2, c)
GENERIC = [
    (Fraction(3, 2), Fraction(5, 7), Fraction(2)),
    (Fraction(7, 3), Fraction(1, 2), Fraction(-5, 4)),
]


def make(n, which=0):
    return Params(n, *GENERIC[which])


@pytest.fixture
def p3():
    return make(3)


@pytest.fixture
def p4():
    return make(4)


@pytest.fixture(params=[0, 1], ids=["P1", "P2"])
def which(request):
    return request.param
