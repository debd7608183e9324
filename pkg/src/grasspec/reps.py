"""Concrete finite-dimensional representations of so(7,C) and its embedded
subalgebras: the standard and spin representations, tensor / symmetric /
alternating square functors, restriction, invariant subspaces, Casimir-type
operators through dual bases, and the three-term Laplace operator on the
isotropy-invariant vectors.

Every representation is certified at or shortly after construction:
the homomorphism identity rho([X,Y]) = [rho(X), rho(Y)] on all generator
pairs, and compatibility with a positive Hermitian form under which the
compact real form acts skew-Hermitian (rho(X)^* P = -P rho(sigma(X)) with
sigma the entrywise conjugation fixing the compact points). The latter is
what makes the restricted Laplace blocks symmetrizable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chevalley import (
    AlgebraBasis,
    ChevalleyBasis,
    G2Subalgebra,
    IsotropyCase,
    SubalgebraBasis,
    VerificationReport,
)
from .exact import (
    GR_ONE,
    GR_ZERO,
    GaussRat,
    LinearSolver,
    Matrix,
    as_rat,
    bracket,
    conj_matrix,
    kron,
    lincomb,
    mat_kernel,
)
from .poly import RatPoly

HALF = Fraction(1, 2)


class Representation:
    """A module over a coordinatized algebra of 7x7 matrices."""

    def __init__(self, name: str, algebra: AlgebraBasis, gens: Sequence[Matrix],
                 labels: Sequence[str], hermitian: Matrix | None = None):
        self.name = name
        self.algebra = algebra
        self.gens = list(gens)
        self.labels = list(labels)
        self.hermitian = hermitian
        self.dim = self.gens[0].rows if self.gens else len(labels)
        self._act_cache: dict[Matrix, Matrix] = {}

    def act(self, x: Matrix) -> Matrix:
        got = self._act_cache.get(x)
        if got is None:
            coords = self.algebra.coordinates(x)
            got = lincomb(
                [(c, g) for c, g in zip(coords, self.gens) if c], self.dim, self.dim
            )
            self._act_cache[x] = got
        return got

    def describe_vector(self, column: Matrix) -> str:
        from .exact import format_gauss

        parts = []
        for i in range(self.dim):
            v = column.data[i][0]
            if v:
                parts.append(f"({format_gauss(v)})*{self.labels[i]}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"Representation({self.name}, dim={self.dim})"


def verify_homomorphism(rep: Representation) -> VerificationReport:
    """rho([b_i, b_j]) = [rho(b_i), rho(b_j)] for every generator pair."""
    out = VerificationReport(f"homomorphism({rep.name})")
    elems = rep.algebra.elements
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            lhs = rep.act(bracket(elems[i], elems[j]))
            rhs = bracket(rep.gens[i], rep.gens[j])
            out.add(
                "homomorphism",
                f"({rep.algebra.labels[i]},{rep.algebra.labels[j]})",
                lhs == rhs,
            )
    return out


def verify_unitary_structure(rep: Representation) -> VerificationReport:
    """rho(X)^* P = -P rho(sigma(X)) for all generators, P the Hermitian form."""
    out = VerificationReport(f"unitary({rep.name})")
    p = rep.hermitian
    if p is None:
        out.add("unitary", "no Hermitian form attached", False)
        return out
    for i, b in enumerate(rep.algebra.elements):
        lhs = rep.gens[i].conj_transpose() @ p
        rhs = -(p @ rep.act(conj_matrix(b)))
        out.add("skew-hermitian", rep.algebra.labels[i], lhs == rhs)
    return out


# ---------------------------------------------------------------------------
# the standard representation (weight basis of C^7)

STANDARD_LABELS = ["u[e1]", "u[e2]", "u[e3]", "u[-e1]", "u[-e2]", "u[-e3]", "u[0]"]


def _standard_u_basis() -> Matrix:
    cols = []
    I = GaussRat(0, 1)
    for k in range(3):
        v = [GR_ZERO] * 7
        v[2 * k] = GR_ONE
        v[2 * k + 1] = -I
        cols.append(v)
    for k in range(3):
        v = [GR_ZERO] * 7
        v[2 * k] = GR_ONE
        v[2 * k + 1] = I
        cols.append(v)
    v = [GR_ZERO] * 7
    v[6] = GR_ONE
    cols.append(v)
    return Matrix(cols).transpose()


def standard_rep(chev: ChevalleyBasis) -> Representation:
    """Defining action of so(7,C) written in the weight basis u_mu."""
    u = _standard_u_basis()
    solver = LinearSolver(u)
    gens = []
    for x in chev.algebra.elements:
        img = x @ u
        cols = [solver.solve(img.col(j)) for j in range(7)]
        gens.append(Matrix(cols).transpose())
    herm = Matrix.diagonal([2, 2, 2, 2, 2, 2, 1])
    rep = Representation("standard", chev.algebra, gens, STANDARD_LABELS, herm)
    r1 = verify_homomorphism(rep)
    r2 = verify_unitary_structure(rep)
    if not (r1.ok and r2.ok):
        raise RuntimeError(r1.summary() + "\n" + r2.summary())
    return rep


# ---------------------------------------------------------------------------
# the spin representation (dimension 8, given by its action table)

SPIN_LABELS = ["v[w]", "v[w-e1]", "v[w-e2]", "v[w-e3]",
               "v[e1-w]", "v[e2-w]", "v[e3-w]", "v[-w]"]

SPIN_WEIGHTS = {
    "v[w]": (HALF, HALF, HALF),
    "v[w-e1]": (-HALF, HALF, HALF),
    "v[w-e2]": (HALF, -HALF, HALF),
    "v[w-e3]": (HALF, HALF, -HALF),
    "v[e1-w]": (HALF, -HALF, -HALF),
    "v[e2-w]": (-HALF, HALF, -HALF),
    "v[e3-w]": (-HALF, -HALF, HALF),
    "v[-w]": (-HALF, -HALF, -HALF),
}

# action table of the root vectors: root -> list of (input, coefficient, output)
SPIN_TABLE: dict[tuple[int, int, int], list[tuple[str, Fraction, str]]] = {
    (1, 0, 0): [("v[w-e1]", Fraction(-2), "v[w]"),
                ("v[e3-w]", Fraction(-2), "v[w-e2]"),
                ("v[e2-w]", Fraction(-2), "v[w-e3]"),
                ("v[-w]", Fraction(-2), "v[e1-w]")],
    (0, 1, 0): [("v[w-e2]", Fraction(-2), "v[w]"),
                ("v[e3-w]", Fraction(2), "v[w-e1]"),
                ("v[e1-w]", Fraction(-2), "v[w-e3]"),
                ("v[-w]", Fraction(2), "v[e2-w]")],
    (0, 0, 1): [("v[w-e3]", Fraction(-2), "v[w]"),
                ("v[e2-w]", Fraction(2), "v[w-e1]"),
                ("v[e1-w]", Fraction(2), "v[w-e2]"),
                ("v[-w]", Fraction(-2), "v[e3-w]")],
    (-1, 0, 0): [("v[w]", Fraction(-1, 2), "v[w-e1]"),
                 ("v[w-e2]", Fraction(-1, 2), "v[e3-w]"),
                 ("v[w-e3]", Fraction(-1, 2), "v[e2-w]"),
                 ("v[e1-w]", Fraction(-1, 2), "v[-w]")],
    (0, -1, 0): [("v[w]", Fraction(-1, 2), "v[w-e2]"),
                 ("v[w-e1]", Fraction(1, 2), "v[e3-w]"),
                 ("v[w-e3]", Fraction(-1, 2), "v[e1-w]"),
                 ("v[e2-w]", Fraction(1, 2), "v[-w]")],
    (0, 0, -1): [("v[w]", Fraction(-1, 2), "v[w-e3]"),
                 ("v[w-e1]", Fraction(1, 2), "v[e2-w]"),
                 ("v[w-e2]", Fraction(1, 2), "v[e1-w]"),
                 ("v[e3-w]", Fraction(-1, 2), "v[-w]")],
    (1, -1, 0): [("v[w-e1]", Fraction(-1), "v[w-e2]"),
                 ("v[e2-w]", Fraction(-1), "v[e1-w]")],
    (1, 0, -1): [("v[w-e1]", Fraction(-1), "v[w-e3]"),
                 ("v[e3-w]", Fraction(1), "v[e1-w]")],
    (0, 1, -1): [("v[w-e2]", Fraction(-1), "v[w-e3]"),
                 ("v[e3-w]", Fraction(-1), "v[e2-w]")],
    (-1, 1, 0): [("v[w-e2]", Fraction(-1), "v[w-e1]"),
                 ("v[e1-w]", Fraction(-1), "v[e2-w]")],
    (-1, 0, 1): [("v[w-e3]", Fraction(-1), "v[w-e1]"),
                 ("v[e1-w]", Fraction(1), "v[e3-w]")],
    (0, -1, 1): [("v[w-e3]", Fraction(-1), "v[w-e2]"),
                 ("v[e2-w]", Fraction(-1), "v[e3-w]")],
    (1, 1, 0): [("v[e3-w]", Fraction(4), "v[w]"),
                ("v[-w]", Fraction(4), "v[w-e3]")],
    (1, 0, 1): [("v[e2-w]", Fraction(4), "v[w]"),
                ("v[-w]", Fraction(-4), "v[w-e2]")],
    (0, 1, 1): [("v[e1-w]", Fraction(4), "v[w]"),
                ("v[-w]", Fraction(4), "v[w-e1]")],
    (-1, -1, 0): [("v[w]", Fraction(1, 4), "v[e3-w]"),
                  ("v[w-e3]", Fraction(1, 4), "v[-w]")],
    (-1, 0, -1): [("v[w]", Fraction(1, 4), "v[e2-w]"),
                  ("v[w-e2]", Fraction(-1, 4), "v[-w]")],
    (0, -1, -1): [("v[w]", Fraction(1, 4), "v[e1-w]"),
                  ("v[w-e1]", Fraction(1, 4), "v[-w]")],
}


def spin_rep(chev: ChevalleyBasis) -> Representation:
    """Spin representation from its action table.

    The exhaustive homomorphism check at construction is what certifies the
    table globally; any transcription slip fails the build.
    """
    idx = {lab: i for i, lab in enumerate(SPIN_LABELS)}
    gens = []
    for k in range(3):
        gens.append(Matrix.diagonal([SPIN_WEIGHTS[lab][k] for lab in SPIN_LABELS]))
    for root in chev.roots:
        m = Matrix.zeros(8, 8)
        for src, coeff, dst in SPIN_TABLE[root]:
            m.data[idx[dst]][idx[src]] = GaussRat.of(coeff)
        m._nz = None
        gens.append(m)
    herm = Matrix.diagonal([1, 4, 4, 4, 16, 16, 16, 64])
    rep = Representation("spin", chev.algebra, gens, SPIN_LABELS, herm)
    r1 = verify_homomorphism(rep)
    if not r1.ok:
        raise RuntimeError(r1.summary())
    r2 = verify_unitary_structure(rep)
    if not r2.ok:
        raise RuntimeError(r2.summary())
    return rep


# ---------------------------------------------------------------------------
# functors

def tensor(r1: Representation, r2: Representation) -> Representation:
    if r1.algebra is not r2.algebra:
        raise ValueError("tensor factors over different algebras")
    n1, n2 = r1.dim, r2.dim
    id1, id2 = Matrix.identity(n1), Matrix.identity(n2)
    gens = [kron(g1, id2) + kron(id1, g2) for g1, g2 in zip(r1.gens, r2.gens)]
    labels = [f"{a}(x){b}" for a in r1.labels for b in r2.labels]
    herm = None
    if r1.hermitian is not None and r2.hermitian is not None:
        herm = kron(r1.hermitian, r2.hermitian)
    return Representation(f"{r1.name}(x){r2.name}", r1.algebra, gens, labels, herm)


def _diag_norms(rep: Representation) -> list[GaussRat]:
    p = rep.hermitian
    for i in range(rep.dim):
        for j in range(rep.dim):
            if i != j and p.data[i][j]:
                raise ValueError("square functors need a diagonal Hermitian form")
    return [p.data[i][i] for i in range(rep.dim)]


def sym2(rep: Representation) -> Representation:
    """Symmetric square on the monomial basis b_a.b_b (a <= b), embedded in
    the tensor square as a(x)b + b(x)a off the diagonal and a(x)a on it."""
    n = rep.dim
    pairs = [(a, b) for a in range(n) for b in range(a, n)]
    pos = {p: q for q, p in enumerate(pairs)}

    def sym_target(x: int, y: int) -> tuple[int, Fraction]:
        if x == y:
            return pos[(x, x)], Fraction(2)
        return pos[(min(x, y), max(x, y))], Fraction(1)

    gens = []
    for g in rep.gens:
        cols_nz = [[] for _ in range(n)]
        for r, nz in enumerate(g.nonzeros()):
            for c, v in nz:
                cols_nz[c].append((r, v))
        m = Matrix.zeros(len(pairs), len(pairs))
        for (a, b), q in pos.items():
            if a == b:
                for c, v in cols_nz[a]:
                    row, f = sym_target(a, c)
                    m.data[row][q] = m.data[row][q] + v * f
            else:
                for c, v in cols_nz[a]:
                    row, f = sym_target(c, b)
                    m.data[row][q] = m.data[row][q] + v * f
                for c, v in cols_nz[b]:
                    row, f = sym_target(a, c)
                    m.data[row][q] = m.data[row][q] + v * f
        m._nz = None
        gens.append(m)
    norms = _diag_norms(rep)
    herm = Matrix.diagonal(
        [norms[a] * norms[b] * (1 if a == b else 2) for a, b in pairs]
    )
    labels = [f"{rep.labels[a]}.{rep.labels[b]}" for a, b in pairs]
    return Representation(f"sym2({rep.name})", rep.algebra, gens, labels, herm)


def wedge2(rep: Representation) -> Representation:
    """Alternating square on the basis b_a^b_b (a < b)."""
    n = rep.dim
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    pos = {p: q for q, p in enumerate(pairs)}

    def wedge_target(x: int, y: int):
        if x == y:
            return None
        if x < y:
            return pos[(x, y)], Fraction(1)
        return pos[(y, x)], Fraction(-1)

    gens = []
    for g in rep.gens:
        cols_nz = [[] for _ in range(n)]
        for r, nz in enumerate(g.nonzeros()):
            for c, v in nz:
                cols_nz[c].append((r, v))
        m = Matrix.zeros(len(pairs), len(pairs))
        for (a, b), q in pos.items():
            for c, v in cols_nz[a]:
                t = wedge_target(c, b)
                if t:
                    m.data[t[0]][q] = m.data[t[0]][q] + v * t[1]
            for c, v in cols_nz[b]:
                t = wedge_target(a, c)
                if t:
                    m.data[t[0]][q] = m.data[t[0]][q] + v * t[1]
        m._nz = None
        gens.append(m)
    norms = _diag_norms(rep)
    herm = Matrix.diagonal([2 * (norms[a] * norms[b]) for a, b in pairs])
    labels = [f"{rep.labels[a]}^{rep.labels[b]}" for a, b in pairs]
    return Representation(f"wedge2({rep.name})", rep.algebra, gens, labels, herm)


def restrict(rep: Representation, sub_algebra: AlgebraBasis, name: str) -> Representation:
    gens = [rep.act(el) for el in sub_algebra.elements]
    return Representation(name, sub_algebra, gens, rep.labels, rep.hermitian)


def g2_adjoint_rep(g2: G2Subalgebra) -> Representation:
    """The 14-dimensional subalgebra acting on itself by brackets."""
    from .chevalley import g2_pairing

    elems = g2.algebra.elements
    gens = []
    for b in elems:
        cols = [g2.algebra.coordinates(bracket(b, x)) for x in elems]
        gens.append(Matrix(cols).transpose())
    herm = Matrix(
        [[-g2_pairing(a, conj_matrix(b)) for b in elems] for a in elems]
    )
    rep = Representation("adjoint(g2)", g2.algebra, gens, list(g2.algebra.labels), herm)
    r1 = verify_homomorphism(rep)
    r2 = verify_unitary_structure(rep)
    if not (r1.ok and r2.ok):
        raise RuntimeError(r1.summary() + "\n" + r2.summary())
    return rep


# ---------------------------------------------------------------------------
# invariant subspaces

@dataclass
class InvariantSpace:
    rep: Representation
    basis: Matrix  # rep.dim x k, columns are the invariant vectors
    label: str

    @property
    def dim(self) -> int:
        return self.basis.cols

    def solver(self) -> LinearSolver:
        if not hasattr(self, "_solver"):
            self._solver = LinearSolver(self.basis)
        return self._solver

    def column(self, j: int) -> Matrix:
        return Matrix.column(self.basis.col(j))

    def restrict_operator(self, op: Matrix) -> Matrix:
        """Matrix of op on this subspace; exact failure if op leaves it."""
        cols = []
        for j in range(self.dim):
            img = op @ self.column(j)
            sol = self.solver().solve(img.flatten())
            if sol is None:
                raise AssertionError(f"{self.label}: operator does not preserve span")
            cols.append(sol)
        return Matrix(cols).transpose()

    def gram(self) -> Matrix:
        p = self.rep.hermitian
        return self.basis.conj_transpose() @ p @ self.basis

    def describe(self) -> list[str]:
        return [self.rep.describe_vector(self.column(j)) for j in range(self.dim)]


def _from_columns(cols: list[Matrix], rows: int) -> Matrix:
    if not cols:
        return Matrix.zeros(rows, 0)
    out = cols[0]
    for c in cols[1:]:
        out = out.hstack(c)
    return out


def invariants(rep: Representation, generators, label: str = "V^H") -> InvariantSpace:
    """Joint exact kernel of the generator actions (iterative intersection)."""
    elems = generators.elements if hasattr(generators, "elements") else list(generators)
    cur: Matrix | None = None
    for g in elems:
        a = rep.act(g)
        if cur is None:
            cur = _from_columns(mat_kernel(a), rep.dim)
        else:
            if cur.cols == 0:
                break
            ker = mat_kernel(a @ cur)
            cur = cur @ _from_columns(ker, cur.cols)
    if cur is None:
        cur = Matrix.identity(rep.dim)
    return InvariantSpace(rep, cur, label)


def invariant_complement(space: InvariantSpace, drop: Matrix) -> InvariantSpace:
    """Orthogonal complement of a given column inside an invariant space,
    with respect to the representation's Hermitian form."""
    p = space.rep.hermitian
    row = drop.conj_transpose() @ p @ space.basis  # 1 x k
    ker = mat_kernel(row)
    basis = space.basis @ _from_columns(ker, space.dim)
    return InvariantSpace(space.rep, basis, space.label + "-perp")


# ---------------------------------------------------------------------------
# Casimir-type operators

def casimir_sum(rep: Representation, sub: SubalgebraBasis) -> Matrix:
    """Sum of rho(b_i) rho(b^i) over a dual pair of bases of the span,
    taken with respect to the case's Killing-normalized pairing.

    Equals -sum rho(X_i)^2 over an orthonormal basis of the compact real
    points, i.e. the nonnegative Laplacian-side operator.
    """
    acc = Matrix.zeros(rep.dim, rep.dim)
    for b, bd in zip(sub.elements, sub.dual_basis()):
        acc = acc + rep.act(b) @ rep.act(bd)
    return acc


def minus_casimir(rep: Representation, sub: SubalgebraBasis,
                  check_commutes: bool = True) -> Matrix:
    op = casimir_sum(rep, sub)
    if check_commutes:
        for b in sub.elements:
            if not bracket(op, rep.act(b)).is_zero():
                raise AssertionError(
                    f"Casimir of {sub.label} fails to commute with the action"
                )
    return op


def tricky_term(rep: Representation, p2: SubalgebraBasis) -> Matrix:
    """The partial sum over the middle isotropy summand (not a subalgebra)."""
    return casimir_sum(rep, p2)


# ---------------------------------------------------------------------------
# the Laplace block on invariants

@dataclass
class AffineOperator:
    """Operator family A1*s1 + A2*s2 + A3*s3 on an invariant subspace."""

    a1: Matrix
    a2: Matrix
    a3: Matrix
    space: InvariantSpace | None = None

    @property
    def size(self) -> int:
        return self.a1.rows

    def at(self, s) -> Matrix:
        s1, s2, s3 = (as_rat(x) for x in s)
        return self.a1.scale(s1) + self.a2.scale(s2) + self.a3.scale(s3)

    def scalar_coefficients(self):
        if self.size != 1:
            raise ValueError("operator is not 1x1; use the full matrix family")
        return (
            self.a1.data[0][0].rational(),
            self.a2.data[0][0].rational(),
            self.a3.data[0][0].rational(),
        )

    def char_poly_at(self, s) -> RatPoly:
        from .exact import char_poly

        return char_poly(self.at(s))

    def trace_coefficients(self):
        return tuple(a.trace().rational() for a in (self.a1, self.a2, self.a3))

    def _det2(self, m: Matrix) -> Fraction:
        return (m.data[0][0] * m.data[1][1] - m.data[0][1] * m.data[1][0]).rational()

    def det_quadratic(self) -> dict[tuple[int, int], Fraction]:
        """det(A(s)) as a quadratic form: coefficients keyed by (i, j), i <= j."""
        if self.size != 2:
            raise ValueError("det_quadratic implemented for 2x2 blocks")
        mats = (self.a1, self.a2, self.a3)
        out = {}
        for i in range(3):
            out[(i, i)] = self._det2(mats[i])
        for i in range(3):
            for j in range(i + 1, 3):
                out[(i, j)] = (
                    self._det2(mats[i] + mats[j]) - out[(i, i)] - out[(j, j)]
                )
        return out

    def quarter_discriminant(self) -> dict[tuple[int, int], Fraction]:
        """(tr A(s)/2)^2 - det A(s) as a quadratic form in (s1, s2, s3).

        For a 2x2 block this is the square of half the eigenvalue gap, so the
        characteristic polynomial's discriminant is 4 times this form.
        """
        t = self.trace_coefficients()
        det = self.det_quadratic()
        out = {}
        for i in range(3):
            out[(i, i)] = t[i] * t[i] / 4 - det[(i, i)]
        for i in range(3):
            for j in range(i + 1, 3):
                out[(i, j)] = t[i] * t[j] / 2 - det[(i, j)]
        return out

    def commutator_pairs_vanish(self) -> bool:
        return (
            bracket(self.a1, self.a2).is_zero()
            and bracket(self.a1, self.a3).is_zero()
            and bracket(self.a2, self.a3).is_zero()
        )


def laplace_on_invariants(case: IsotropyCase, rep: Representation,
                          inv: InvariantSpace | None = None) -> AffineOperator:
    """The three-coefficient Laplace family on the invariant vectors:
    A1 = (ambient Casimir) - (middle-summand term) - (chain Casimir),
    A2 the middle-summand term and A3 the chain Casimir, all restricted."""
    if inv is None:
        inv = invariants(rep, case.h)
    if inv.dim == 0:
        raise ValueError(f"{rep.name}: no invariant vectors for {case.name}")
    mg = inv.restrict_operator(minus_casimir(rep, case.full, check_commutes=False))
    mk = inv.restrict_operator(casimir_sum(rep, case.k))
    mu = inv.restrict_operator(tricky_term(rep, case.p2))
    op = AffineOperator(mg - mu - mk, mu, mk, inv)
    gram = inv.gram()
    for a in (op.a1, op.a2, op.a3):
        if gram @ a != a.conj_transpose() @ gram:
            raise AssertionError("Laplace block is not self-adjoint for the invariant form")
    return op


# ---------------------------------------------------------------------------
# sl2 strings

def sl2_string_scalar(m: int, i: int) -> Fraction:
    """The scalar of 2 e f on the weight-(m-2i) line of the (m+1)-dimensional
    irreducible sl2 module, computed from explicit ladder matrices."""
    if not 0 <= i <= m:
        raise ValueError(f"index {i} outside string 0..{m}")
    n = m + 1
    e = Matrix.zeros(n, n)
    f = Matrix.zeros(n, n)
    h = Matrix.zeros(n, n)
    for j in range(n):
        h.data[j][j] = GaussRat(m - 2 * j)
        if j + 1 < n:
            f.data[j + 1][j] = GR_ONE
        if j >= 1:
            e.data[j - 1][j] = GaussRat(j * (m - j + 1))
    for mat in (e, f, h):
        mat._nz = None
    if bracket(e, f) != h or bracket(h, e) != e.scale(2) or bracket(h, f) != f.scale(-2):
        raise AssertionError("sl2 ladder relations failed")
    op = (e @ f).scale(2)
    col = op.col(i)
    for j, v in enumerate(col):
        if j != i and v:
            raise AssertionError("2ef is not diagonal on the weight basis")
    scalar = col[i].rational()
    if scalar != 2 * (i + 1) * (m - i):
        raise AssertionError("string scalar disagrees with the closed form")
    return scalar
