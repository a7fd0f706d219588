from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from conftest import make
from deltastar.basis import generators
from deltastar.linalg import RatMatrix, in_rowspace, nullspace, rank, rowspace_equal, rref, solve_in_rowspace
from deltastar.solutions import assemble_constraints

small = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def matrices(draw, max_rows=6, max_cols=6):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    # bias toward zeros so rank deficiency is common
    entry = st.one_of(st.just(Fraction(0)), small)
    return RatMatrix([[draw(entry) for _ in range(c)] for _ in range(r)], c)


def test_rref_examples():
    red, rk, piv = rref(RatMatrix.identity(2))
    assert red == RatMatrix.identity(2) and rk == 2 and piv == [0, 1]
    red, rk, piv = rref(RatMatrix([[1, 2], [2, 4]]))
    assert red.tolist() == [[1, 2], [0, 0]] and rk == 1


def test_nullspace_examples():
    assert nullspace(RatMatrix.identity(3)).rows == 0
    assert nullspace(RatMatrix.zeros(3, 3)).rows == 3


def test_rowspace_examples():
    a = RatMatrix([[1, 2, 3], [0, 1, 1]])
    assert rowspace_equal(a, a)
    assert not rowspace_equal(RatMatrix([[1, 0]]), RatMatrix([[0, 1]]))
    assert in_rowspace([0, 0], RatMatrix([[0, 1]]))
    assert not in_rowspace([1, 0], RatMatrix([[0, 1]]))
    with pytest.raises(ValueError):
        rowspace_equal(RatMatrix([[1, 0]]), RatMatrix([[1]]))
    with pytest.raises(ValueError):
        in_rowspace([1], RatMatrix([[0, 1]]))


def test_solve_in_rowspace():
    a = RatMatrix([[1, 0, 1], [0, 1, 1]])
    assert solve_in_rowspace([2, 3, 5], a) == [2, 3]
    assert solve_in_rowspace([1, 0, 0], a) is None


def test_constraint_rank_n3_against_sympy():
    p = make(3)
    m = assemble_constraints([w for _, w in generators(p)])
    assert (m.rows, m.cols) == (24, 26)
    assert rank(m) == 14
    # independent elimination
    assert sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m.data]).rank() == 14
    assert nullspace(m).rows == 12


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel(m):
    ker = nullspace(m)
    assert rank(m) + ker.rows == m.cols
    for v in ker.data:
        assert all(x == 0 for x in m.apply(v))
    red, _, _ = rref(m)
    assert rref(red)[0] == red


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_sympy(m):
    sm = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m.data])
    assert rank(m) == sm.rank()
