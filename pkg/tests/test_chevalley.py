from fractions import Fraction as Q

import pytest

from grasspec.chevalley import (
    SubalgebraBasis,
    build_g2_subalgebra,
    build_isotropy_case,
    build_so7_chevalley,
    g2_coroot_values,
    g2_pairing,
    g2_root_in_eps,
    is_antisymmetric,
    real_form_basis,
    so7_pairing,
    so7_positive_roots,
    verify_chevalley,
)
from grasspec.exact import GaussRat, Matrix, bracket, lincomb

CHEV = build_so7_chevalley()
G2 = build_g2_subalgebra(CHEV)

i_ = GaussRat(0, 1)
H = Q(1, 2)


def M7(entries):
    m = Matrix.zeros(7, 7)
    for (r, c), v in entries.items():
        m.data[r][c] = GaussRat.of(v)
    m._nz = None
    return m


# the six reference generators, entry by entry
REFERENCE = {
    (1, -1, 0): M7({(0, 2): H, (0, 3): H * i_, (1, 2): -H * i_, (1, 3): H,
                    (2, 0): -H, (2, 1): H * i_, (3, 0): -H * i_, (3, 1): -H}),
    (-1, 1, 0): M7({(0, 2): -H, (0, 3): H * i_, (1, 2): -H * i_, (1, 3): -H,
                    (2, 0): H, (2, 1): H * i_, (3, 0): -H * i_, (3, 1): H}),
    (1, 1, 0): M7({(0, 2): H, (0, 3): -H * i_, (1, 2): -H * i_, (1, 3): -H,
                   (2, 0): -H, (2, 1): H * i_, (3, 0): H * i_, (3, 1): H}),
    (-1, -1, 0): M7({(0, 2): -H, (0, 3): -H * i_, (1, 2): -H * i_, (1, 3): H,
                     (2, 0): H, (2, 1): H * i_, (3, 0): H * i_, (3, 1): -H}),
    (1, 0, 0): M7({(0, 6): 1, (1, 6): -i_, (6, 0): -1, (6, 1): i_}),
    (-1, 0, 0): M7({(0, 6): -1, (1, 6): -i_, (6, 0): 1, (6, 1): i_}),
}


def test_reference_matrices_entry_by_entry():
    for root, want in REFERENCE.items():
        assert CHEV.root_vectors[root] == want, f"mismatch at {root}"


def test_all_eighteen_roots_built_and_antisymmetric():
    assert len(CHEV.root_vectors) == 18
    assert len(so7_positive_roots()) == 9
    for m in list(CHEV.root_vectors.values()) + CHEV.cartan:
        assert is_antisymmetric(m)


def test_certification_report_clean():
    report = verify_chevalley(CHEV)
    assert report.ok, report.summary()


def test_coroot_brackets():
    X = CHEV.root_vectors
    h1, h2, h3 = CHEV.cartan
    assert bracket(X[(1, 0, 0)], X[(-1, 0, 0)]) == h1.scale(2)
    assert bracket(X[(1, -1, 0)], X[(-1, 1, 0)]) == h1 - h2
    assert bracket(X[(0, 1, 1)], X[(0, -1, -1)]) == h2 + h3


def test_killing_values():
    X = CHEV.root_vectors
    for i in range(3):
        for j in range(3):
            assert so7_pairing(CHEV.cartan[i], CHEV.cartan[j]) == GaussRat(10 if i == j else 0)
    for r in so7_positive_roots():
        want = GaussRat(10 if sum(abs(c) for c in r) == 2 else 20)
        assert so7_pairing(X[r], X[tuple(-c for c in r)]) == want


def test_structure_constant_samples():
    X = CHEV.root_vectors
    # adjacent long roots: string length 0, constant +-1
    assert bracket(X[(1, -1, 0)], X[(0, 1, -1)]) == X[(1, 0, -1)]
    assert CHEV.string_m((1, -1, 0), (0, 1, -1)) == 0
    # two short roots: string length 1, constant +-2
    assert bracket(X[(0, 1, 0)], X[(0, 0, 1)]) == X[(0, 1, 1)].scale(-2)
    assert CHEV.string_m((0, 1, 0), (0, 0, 1)) == 1
    # 2 e1 is not a root
    assert bracket(X[(1, 0, 0)], X[(1, 0, 0)]).is_zero()


def test_jacobi_identity_exhaustive():
    elems = CHEV.algebra.elements
    n = len(elems)
    for a in range(n):
        for b in range(a, n):
            ab = bracket(elems[a], elems[b])
            for c in range(b, n):
                lhs = bracket(elems[a], bracket(elems[b], elems[c]))
                mid = bracket(elems[b], bracket(elems[c], elems[a]))
                rhs = bracket(elems[c], ab)
                assert (lhs + mid + rhs).is_zero()


def test_g2_embedding():
    assert G2.algebra.dim == 14
    X = CHEV.root_vectors
    assert G2.root_vectors[(3, 2)] == X[(1, 1, 0)].scale(-1)
    assert G2.root_vectors[(1, 0)] == X[(1, -1, 0)] + X[(0, 0, 1)]
    # long simple root pairs to 2 against its own coroot
    y = G2.root_vectors[(0, 1)]
    assert bracket(G2.cartan[1], y) == y.scale(2)
    assert g2_coroot_values((0, 1)) == (-3, 2)
    # conversion to the sum-zero epsilon coordinates of the abstract record
    assert g2_root_in_eps((1, 1)) == (1, -1, 0)
    assert g2_root_in_eps((3, 1)) == (1, 1, -2)
    assert g2_root_in_eps((3, 2)) == (2, -1, -1)
    assert g2_root_in_eps((2, 1)) == (1, 0, -1)


def test_g2_killing_is_four_fifths_of_ambient():
    for a in G2.algebra.elements[:6]:
        for b in G2.algebra.elements[:6]:
            assert g2_pairing(a, b) == so7_pairing(a, b) * Q(4, 5)


def test_case_dimensions():
    c27 = build_isotropy_case("gr27")
    c38 = build_isotropy_case("gr38")
    assert (c27.h.dim, c27.p1.dim, c27.p2.dim, c27.p3.dim) == (4, 4, 2, 4)
    assert (c38.h.dim, c38.p1.dim, c38.p2.dim, c38.p3.dim) == (6, 4, 3, 8)
    assert c27.k.dim == 8 and c38.k.dim == 14


def test_gr38_isotropy_bracket_closes_into_p2():
    # the bracket of Y_a1 with the lowering generator of p2 lands on the
    # Cartan direction H1 - H2 - H3 inside p2 (not on the isotropy Cartan)
    X = CHEV.root_vectors
    h1, h2, h3 = CHEV.cartan
    a_minus = lincomb([(1, X[(-1, 1, 0)]), (Q(-1, 2), X[(0, 0, -1)])], 7, 7)
    z = lincomb([(1, h1), (-1, h2), (-1, h3)], 7, 7)
    got = bracket(G2.root_vectors[(1, 0)], a_minus)
    assert got == z
    # and acting once more gives the raising generator, the spin-2 string
    a_plus = lincomb([(1, X[(1, -1, 0)]), (Q(-1, 2), X[(0, 0, 1)])], 7, 7)
    assert bracket(G2.root_vectors[(1, 0)], z) == a_plus.scale(-2)


def test_gr38_orthogonality_example():
    X = CHEV.root_vectors
    v = lincomb([(1, X[(0, 1, 1)]), (Q(-1, 2), X[(1, 0, 0)])], 7, 7)
    assert so7_pairing(v, G2.root_vectors[(-2, -1)]) == GaussRat(0)


def test_dual_basis():
    cart = SubalgebraBasis("t", CHEV.cartan, so7_pairing)
    duals = cart.dual_basis()
    for i in range(3):
        assert duals[i] == CHEV.cartan[i].scale(Q(1, 10))
    single = SubalgebraBasis("x", [CHEV.root_vectors[(1, -1, 0)]], so7_pairing)
    # B(X, X) = 0 for a root vector: Gram is degenerate
    with pytest.raises(ValueError):
        single.dual_basis()
    pair = SubalgebraBasis(
        "xpm", [CHEV.root_vectors[(1, -1, 0)], CHEV.root_vectors[(-1, 1, 0)]], so7_pairing
    )
    d = pair.dual_basis()
    assert d[0] == CHEV.root_vectors[(-1, 1, 0)].scale(Q(1, 10))
    c38 = build_isotropy_case("gr38")
    for i, bi in enumerate(c38.p2.elements):
        for j, bj in enumerate(c38.p2.dual_basis()):
            assert so7_pairing(bi, bj) == GaussRat(1 if i == j else 0)


def test_real_form_dimensions():
    c38 = build_isotropy_case("gr38")
    for sub in (c38.h, c38.p1, c38.p2, c38.p3):
        real = real_form_basis(sub.elements)
        assert len(real) == sub.dim
        for m in real:
            assert m.is_real() and is_antisymmetric(m)


def test_element_lookup():
    assert CHEV.element("H1") == CHEV.cartan[0]
    assert G2.element("Y[a1]") == G2.root_vectors[(1, 0)]
