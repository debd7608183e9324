from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grasspec.exact import (
    GaussRat,
    Matrix,
    char_poly,
    format_gauss,
    format_rat,
    lincomb,
    mat_kernel,
    rank,
    rref,
    solve_linear,
    LinearSolver,
)

rats = st.fractions(min_value=-8, max_value=8, max_denominator=6)
gauss = st.builds(GaussRat, rats, rats)


@given(gauss, gauss)
def test_add_sub_roundtrip(a, b):
    assert (a + b) - b == a


@given(gauss, gauss, gauss)
def test_mul_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(gauss)
def test_division_inverts(a):
    if a:
        assert (a / a) == GaussRat(1)
        assert (GaussRat(1) / a) * a == GaussRat(1)


def test_conj_and_rational():
    z = GaussRat(Q(1, 2), Q(-3, 4))
    assert z.conj() == GaussRat(Q(1, 2), Q(3, 4))
    assert (z * z.conj()).is_rational()
    with pytest.raises(ValueError):
        z.rational()


def test_formatting():
    assert format_rat(Q(3)) == "3"
    assert format_rat(Q(-1, 2)) == "-1/2"
    assert format_gauss(GaussRat(0)) == "0"
    assert format_gauss(GaussRat(1, 1)) == "1+1*i"
    assert format_gauss(GaussRat(0, Q(-1, 2))) == "-1/2*i"
    assert format_gauss(GaussRat(Q(2, 3))) == "2/3"


def test_kernel_zero_map():
    assert [v.flatten() for v in mat_kernel(Matrix([[0]]))] == [[GaussRat(1)]]


def test_kernel_injective():
    assert mat_kernel(Matrix.identity(3)) == []


def test_solve_identity_and_inconsistent():
    b = [1, Q(2, 3), GaussRat(0, 1)]
    assert solve_linear(Matrix.identity(3), b) == [GaussRat.of(x) for x in b]
    m = Matrix([[1, 1], [1, 1]])
    assert solve_linear(m, [1, 2]) is None
    assert solve_linear(m, [2, 2]) is not None


def test_linear_solver_matches_solve_linear():
    m = Matrix([[1, 2, 0], [0, 1, 1], [1, 3, 1], [2, 5, 1]])
    solver = LinearSolver(m)
    for b in ([1, 1, 2, 3], [0, 0, 0, 0], [1, 0, 0, 0]):
        assert solver.solve(b) == solve_linear(m, b)


def test_char_poly_small():
    assert char_poly(Matrix.zeros(2, 2)).coeffs == (Q(0), Q(0), Q(1))
    assert char_poly(Matrix.diagonal([2, 3])).coeffs == (Q(6), Q(-5), Q(1))
    with pytest.raises(ValueError):
        char_poly(Matrix([[GaussRat(0, 1)]]))


small_mats = st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.lists(
        st.lists(rats, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(Matrix)
)


@settings(max_examples=40, deadline=None)
@given(small_mats)
def test_rank_nullity(m):
    assert len(mat_kernel(m)) + rank(m) == m.cols


@settings(max_examples=25, deadline=None)
@given(small_mats)
def test_cayley_hamilton(m):
    p = char_poly(m)
    acc = Matrix.zeros(m.rows, m.rows)
    power = Matrix.identity(m.rows)
    for c in p.coeffs:
        acc = acc + power.scale(c)
        power = power @ m
    assert acc.is_zero()


@settings(max_examples=30, deadline=None)
@given(small_mats)
def test_kernel_vectors_annihilated(m):
    for v in mat_kernel(m):
        assert (m @ v).is_zero()


def test_lincomb_matches_dense():
    a = Matrix([[1, 0], [0, 2]])
    b = Matrix([[0, GaussRat(0, 1)], [1, 0]])
    got = lincomb([(Q(1, 2), a), (GaussRat(0, 1), b)], 2, 2)
    want = a.scale(Q(1, 2)) + b.scale(GaussRat(0, 1))
    assert got == want


def test_rref_idempotent():
    m = Matrix([[2, 4, 1], [1, 2, 0], [0, 0, 3]])
    red, pivots = rref(m)
    red2, pivots2 = rref(red)
    assert red == red2 and pivots == pivots2
