from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grasspec.poly import (
    IsolatingInterval,
    RatPoly,
    cauchy_bound,
    rational_roots,
    refine_root,
    sturm_chain,
    sturm_count,
    sturm_isolate,
)

X = RatPoly.x()


def poly_from_roots(roots):
    p = RatPoly([1])
    for r in roots:
        p = p * RatPoly([-r, 1])
    return p


def test_arith_and_eval():
    p = RatPoly([8, 0, 0, 0, Q(-5, 2), 1])  # x^5 - 5/2 x^4 + 8
    assert p.degree == 5
    assert p(2) == 0
    assert p(0) == 8
    q, r = divmod(p, RatPoly([-2, 1]))
    assert r.is_zero()
    assert q * RatPoly([-2, 1]) == p


def test_derivative_structure_quintic():
    # f(x) = x^5 - 5/2 x^4 + 8 has f'(x) = 5x^3(x-2), an exact identity
    f = RatPoly([8, 0, 0, 0, Q(-5, 2), 1])
    want = RatPoly([0, 0, 0, -10, 5])
    assert f.derivative() == want
    assert want == RatPoly([0, 0, 0, 1]).scale(5) * RatPoly([-2, 1])


def test_squarefree_and_rational_roots():
    p = poly_from_roots([2, 2, Q(-1, 3)])
    sf = p.squarefree_part()
    assert sf == poly_from_roots([2, Q(-1, 3)]).monic()
    assert rational_roots(p) == [Q(-1, 3), Q(2)]


def test_isolate_quintic_single_positive_root():
    # unique positive root at exactly x = 2 (a double root of the quintic)
    f = RatPoly([8, 0, 0, 0, Q(-5, 2), 1])
    ivs = sturm_isolate(f, "positive")
    assert len(ivs) == 1
    assert ivs[0].exact and ivs[0].lo == 2


def test_isolate_radius_quintic_two_positive_roots():
    # x(20 - x^2)^2 - 512 = x^5 - 40x^3 + 400x - 512
    f = RatPoly([-512, 400, 0, -40, 0, 1])
    ivs = sturm_isolate(f, "positive")
    assert len(ivs) == 2
    assert ivs[0].exact and ivs[0].lo == 2
    second = ivs[1]
    assert not second.exact
    refined = refine_root(f, second, Q(1, 10**8))
    assert refined.width() <= Q(1, 10**8)
    # value reported to 9 significant digits: 5.44915345
    target = Q("5.44915345")
    assert refined.lo - Q(1, 10**8) <= target <= refined.hi + Q(1, 10**8)


def test_isolate_no_real_roots():
    assert sturm_isolate(RatPoly([1, 0, 1]), "positive") == []


def test_isolate_open_interval_domain():
    p = poly_from_roots([1, 3, 5])
    ivs = sturm_isolate(p, (0, 4))
    assert [iv.lo for iv in ivs] == [1, 3]
    ivs = sturm_isolate(p, (None, None))
    assert len(ivs) == 3


def test_refine_bisection_contract():
    p = RatPoly([-2, 0, 1])  # x^2 - 2
    iv = IsolatingInterval(Q(1), Q(2), False)
    out = refine_root(p, iv, Q(1, 10**6))
    assert out.width() <= Q(1, 10**6)
    assert out.lo < Q(141421356, 10**8) < out.hi + Q(1, 10**6)
    # refining an interval holding a rational root collapses to exact
    f = RatPoly([-512, 400, 0, -40, 0, 1])
    out = refine_root(f, IsolatingInterval(Q(1), Q(3), False), Q(1, 100))
    assert out.exact and out.lo == 2


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        sturm_isolate(RatPoly.zero())


def test_is_multiple_of():
    f = RatPoly([8, 0, 0, 0, Q(-5, 2), 1])
    assert f.scale(-54).is_multiple_of(f)
    assert not f.is_multiple_of(f * X)


small_roots = st.lists(
    st.fractions(min_value=-6, max_value=6, max_denominator=4),
    min_size=1,
    max_size=4,
)


@settings(max_examples=40, deadline=None)
@given(small_roots)
def test_isolation_finds_all_distinct_roots(roots):
    p = poly_from_roots(roots)
    distinct = sorted(set(roots))
    ivs = sturm_isolate(p, (None, None))
    assert len(ivs) == len(distinct)
    for iv, r in zip(ivs, distinct):
        assert iv.lo <= r <= iv.hi
        if iv.exact:
            assert iv.lo == r


@settings(max_examples=40, deadline=None)
@given(small_roots)
def test_interval_counts_sum_to_domain_count(roots):
    # per-interval Sturm counts add up to the count over the whole domain
    p = poly_from_roots(roots)
    sf = p.squarefree_part()
    chain = sturm_chain(sf)
    bound = cauchy_bound(sf)
    total = sturm_count(chain, -bound, bound)
    ivs = sturm_isolate(p, (None, None))
    assert total == len(ivs) == len(set(roots))
    for iv in ivs:
        if not iv.exact:
            assert sturm_count(chain, iv.lo, iv.hi) == 1


@settings(max_examples=30, deadline=None)
@given(small_roots, st.fractions(min_value=-6, max_value=6, max_denominator=4))
def test_eval_exact(roots, x):
    p = poly_from_roots(roots)
    direct = Q(1)
    for r in roots:
        direct *= x - r
    assert p(x) == direct
