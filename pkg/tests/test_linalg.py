"""Exact elimination: rank, nullspace, solve."""
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from symgames.linalg import canonical_basis, nullspace, rank, rref, same_span, solve
from symgames.stp_core import RationalMatrix

small = st.integers(-3, 3).map(Fraction)


@st.composite
def matrices(draw, max_dim=5):
    m = draw(st.integers(1, max_dim))
    n = draw(st.integers(1, max_dim))
    return RationalMatrix([[draw(small) for _ in range(n)] for _ in range(m)])


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity(a):
    null = nullspace(a)
    assert rank(a) + len(null) == a.cols
    for v in null:
        assert (a @ RationalMatrix.column(v)).flat() == (0,) * a.rows


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_of_transpose(a):
    assert rank(a) == rank(a.T)


@settings(max_examples=80, deadline=None)
@given(matrices(), st.data())
def test_solve_consistent_systems(a, data):
    x = [data.draw(small) for _ in range(a.cols)]
    b = (a @ RationalMatrix.column(x)).flat()
    sol = solve(a, b)
    assert sol is not None
    assert (a @ RationalMatrix.column(sol)).flat() == b
    order = list(reversed(range(a.cols)))
    sol2 = solve(a, b, column_order=order)
    assert (a @ RationalMatrix.column(sol2)).flat() == b


def test_solve_reports_inconsistency():
    a = RationalMatrix([[1, 1], [2, 2]])
    assert solve(a, [1, 3]) is None


def test_free_variables_are_zero():
    a = RationalMatrix([[1, 1, 0]])
    assert solve(a, [4]) == (4, 0, 0)
    assert solve(a, [4], column_order=[1, 0, 2]) == (0, 4, 0)


def test_rref_shape_and_pivots():
    r, pivots = rref(RationalMatrix([[2, 4], [1, 3]]))
    assert r == RationalMatrix.identity(2)
    assert pivots == [0, 1]


@settings(max_examples=50, deadline=None)
@given(matrices())
def test_canonical_basis_identifies_spans(a):
    rows = [a[i, :].flat() for i in range(a.rows)]
    basis = canonical_basis(rows)
    assert len(basis) == rank(a)
    assert same_span(basis, rows)
    assert canonical_basis(list(reversed(rows))) == basis


def test_same_span_detects_difference():
    assert not same_span([(1, 0, 0)], [(0, 1, 0)])
    assert same_span([(1, 1, 0), (1, -1, 0)], [(1, 0, 0), (0, 1, 0)])
