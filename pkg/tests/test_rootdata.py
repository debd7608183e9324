from fractions import Fraction as Q

import pytest

from grasspec.rootdata import (
    builtin_systems,
    casimir_scalar,
    dual_pairing,
    enumerate_dominant_by_dim,
    weight,
    weight_scale,
    weyl_dim,
)

SYS = builtin_systems()
B3 = SYS["b3"]
G2 = SYS["g2"]
A2 = SYS["a2_in_g2"]
A1A1 = SYS["a1xa1"]


def test_rho_values():
    assert weight_scale(2, B3.rho()) == weight(5, 3, 1)
    assert G2.rho() == weight(3, -1, -2)
    assert A2.rho() == weight(2, -1, -1)


def test_dual_pairing():
    e1 = weight(1, 0, 0)
    e2 = weight(0, 1, 0)
    assert dual_pairing(B3, e1, e1) == Q(1, 10)
    assert dual_pairing(G2, e1, e2) == 0
    assert dual_pairing(A2, e1, e1) == Q(1, 18)
    assert dual_pairing(B3, e1, weight(0, 0, 0)) == 0


def test_fundamental_coroot_duality():
    for sys in SYS.values():
        for i, w in enumerate(sys.fundamental_weights):
            for j, a in enumerate(sys.simple_roots):
                assert sys.coroot_pairing(w, a) == (1 if i == j else 0)


def test_casimir_scalars_b3():
    w1, w2, w3 = B3.fundamental_weights
    assert casimir_scalar(B3, w3) == Q(21, 40)
    assert casimir_scalar(B3, weight(Q(3, 2), Q(1, 2), Q(1, 2))) == Q(49, 40)
    assert casimir_scalar(B3, weight_scale(2, w1)) == Q(7, 5)
    assert casimir_scalar(B3, w1) == Q(3, 5)
    assert casimir_scalar(B3, weight_scale(2, w3)) == Q(6, 5)
    assert casimir_scalar(B3, w2) == 1


def test_casimir_scalars_g2_and_a2():
    w1, w2 = G2.fundamental_weights
    assert casimir_scalar(G2, w1) == Q(1, 2)
    assert casimir_scalar(G2, w2) == 1
    # restricted-form scale 4/5 used when this algebra sits inside so(7)
    assert casimir_scalar(G2, weight_scale(2, w1), Q(4, 5)) == Q(14, 15)
    assert casimir_scalar(G2, w1, Q(4, 5)) == Q(2, 5)
    assert casimir_scalar(G2, w2, Q(4, 5)) == Q(4, 5)
    # su(3) adjoint has scalar 1 in its own normalization, 3/4 restricted
    nu1, nu2 = A2.fundamental_weights
    adj = weight(2, -1, -1)
    assert casimir_scalar(A2, adj) == 1
    assert casimir_scalar(A2, adj, Q(3, 4)) == Q(3, 4)
    assert casimir_scalar(A2, nu1) == Q(4, 9)


def test_casimir_rejects_non_dominant():
    with pytest.raises(ValueError):
        casimir_scalar(B3, weight(-1, 0, 0))
    with pytest.raises(ValueError):
        weyl_dim(G2, weight(0, 1, -1))  # a short root is not dominant


def test_weyl_dims():
    w1, w2 = G2.fundamental_weights
    assert weyl_dim(G2, w1) == 7
    assert weyl_dim(G2, w2) == 14
    assert weyl_dim(G2, weight_scale(2, w1)) == 27
    b1, b2, b3 = B3.fundamental_weights
    assert weyl_dim(B3, b3) == 8
    assert weyl_dim(B3, weight(Q(3, 2), Q(1, 2), Q(1, 2))) == 48
    assert weyl_dim(B3, weight(0, 0, 0)) == 1
    assert weyl_dim(B3, weight_scale(2, b1)) == 27
    assert weyl_dim(B3, weight_scale(2, b3)) == 35
    assert weyl_dim(B3, b2) == 21
    nu1, nu2 = A2.fundamental_weights
    assert weyl_dim(A2, nu1) == 3
    assert weyl_dim(A2, nu2) == 3
    assert weyl_dim(A2, weight(2, -1, -1)) == 8
    assert weyl_dim(A1A1, weight(3, 1)) == 8


def test_dim_one_iff_zero():
    for sys in (B3, G2, A2, A1A1):
        zero = weight(*([0] * sys.coords))
        assert weyl_dim(sys, zero) == 1
        for lam, d in enumerate_dominant_by_dim(sys, 30):
            assert (d == 1) == (lam == zero)
            if lam != zero:
                assert casimir_scalar(sys, lam) > 0


def test_enumerate_g2_dim_at_most_21():
    got = enumerate_dominant_by_dim(G2, 21)
    w1, w2 = G2.fundamental_weights
    assert got == [
        (weight(0, 0, 0), 1),
        (w1, 7),
        (w2, 14),
    ]


def test_enumerate_b3_dim_at_most_56():
    got = enumerate_dominant_by_dim(B3, 56)
    w1, w2, w3 = B3.fundamental_weights
    want = {
        (weight(0, 0, 0), 1),
        (w1, 7),
        (w3, 8),
        (w2, 21),
        (weight_scale(2, w1), 27),
        (weight_scale(2, w3), 35),
        (weight(Q(3, 2), Q(1, 2), Q(1, 2)), 48),
    }
    assert set(got) == want


def test_enumerate_matches_plain_box_sweep():
    # independent oracle: sweep a coefficient box large enough to be sure
    # nothing at the boundary still fits under the bound
    for sys, bound in ((G2, 21), (B3, 56)):
        box = set()
        rng = range(0, 7)
        import itertools

        for coeffs in itertools.product(rng, repeat=len(sys.fundamental_weights)):
            lam = sys.fundamental_combo(coeffs)
            d = weyl_dim(sys, lam)
            if d <= bound:
                assert any(c < 6 for c in coeffs)  # box is genuinely larger
                box.add((lam, d))
        assert set(enumerate_dominant_by_dim(sys, bound)) == box


def test_enumerate_bound_zero_empty():
    assert enumerate_dominant_by_dim(B3, 0) == []
