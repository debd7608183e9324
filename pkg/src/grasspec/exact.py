"""Exact Gaussian-rational scalars and small dense exact linear algebra.

Every scalar in the package is a Gaussian rational a + b*i with Fraction
components; nothing here touches floats, so all results are exact and all
equality checks are certificates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction


def as_rat(x) -> Fraction:
    """Coerce ints, strings and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class GaussRat:
    """Gaussian rational a + b*i; immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", as_rat(re))
        object.__setattr__(self, "im", as_rat(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    @staticmethod
    def of(x) -> "GaussRat":
        if isinstance(x, GaussRat):
            return x
        return GaussRat(as_rat(x))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        other = GaussRat.of(other)
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other):
        other = GaussRat.of(other)
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussRat.of(other) - self

    def __mul__(self, other):
        other = GaussRat.of(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussRat(a * c)
        return GaussRat(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussRat.of(other)
        if not other:
            raise ZeroDivisionError("division by zero GaussRat")
        a, b, c, d = self.re, self.im, other.re, other.im
        if not d:
            return GaussRat(a / c, b / c)
        n = c * c + d * d
        return GaussRat((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        return GaussRat.of(other) / self

    def conj(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def is_rational(self) -> bool:
        return not self.im

    def rational(self) -> Fraction:
        if self.im:
            raise ValueError(f"not rational: {self}")
        return self.re

    def __repr__(self):
        return f"GaussRat({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_gauss(self)


GR_ZERO = GaussRat(0)
GR_ONE = GaussRat(1)
GR_I = GaussRat(0, 1)


def format_rat(x: Fraction) -> str:
    """Serialize a rational as "p/q", omitting "/q" when q = 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_gauss(z: GaussRat) -> str:
    """Serialize a Gaussian rational as "a/b+c/d*i" with zero parts omitted."""
    if not z:
        return "0"
    parts = []
    if z.re:
        parts.append(format_rat(z.re))
    if z.im:
        if parts and z.im > 0:
            parts.append("+")
        parts.append(format_rat(z.im) + "*i")
    return "".join(parts)


def parse_rat(text: str) -> Fraction:
    return Fraction(text.strip())


class Matrix:
    """Dense matrix over GaussRat.

    Instances are treated as immutable after construction; multiplication
    skips zero entries, so sparse operands cost what their support costs.
    """

    __slots__ = ("rows", "cols", "data", "_nz")

    def __init__(self, data: Sequence[Sequence]):
        self.data = [[GaussRat.of(x) for x in row] for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.rows else 0
        if any(len(r) != self.cols for r in self.data):
            raise ValueError("ragged matrix")
        self._nz = None

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        m = Matrix.__new__(Matrix)
        m.data = [[GR_ZERO] * cols for _ in range(rows)]
        m.rows, m.cols, m._nz = rows, cols, None
        return m

    @staticmethod
    def identity(n: int) -> "Matrix":
        m = Matrix.zeros(n, n)
        for i in range(n):
            m.data[i][i] = GR_ONE
        return m

    @staticmethod
    def diagonal(values: Sequence) -> "Matrix":
        vals = [GaussRat.of(v) for v in values]
        m = Matrix.zeros(len(vals), len(vals))
        for i, v in enumerate(vals):
            m.data[i][i] = v
        return m

    @staticmethod
    def column(values: Sequence) -> "Matrix":
        return Matrix([[v] for v in values])

    def nonzeros(self):
        """Per-row list of (col, value) for nonzero entries; cached."""
        if self._nz is None:
            self._nz = [
                [(j, v) for j, v in enumerate(row) if v] for row in self.data
            ]
        return self._nz

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        for r1, r2 in zip(self.data, other.data):
            if r1 != r2:
                return False
        return True

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def is_zero(self) -> bool:
        return all(not v for row in self.data for v in row)

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.data, other.data)])

    def __neg__(self):
        return Matrix([[-a for a in row] for row in self.data])

    def scale(self, c) -> "Matrix":
        c = GaussRat.of(c)
        return Matrix([[c * a if a else GR_ZERO for a in row] for row in self.data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = Matrix.zeros(self.rows, other.cols)
        bnz = other.nonzeros()
        for i, anz in enumerate(self.nonzeros()):
            row = out.data[i]
            for k, a in anz:
                for j, b in bnz[k]:
                    row[j] = row[j] + a * b
        out._nz = None
        return out

    def transpose(self) -> "Matrix":
        return Matrix([[self.data[i][j] for i in range(self.rows)]
                       for j in range(self.cols)])

    def conj_transpose(self) -> "Matrix":
        return Matrix([[self.data[i][j].conj() for i in range(self.rows)]
                       for j in range(self.cols)])

    def trace(self) -> GaussRat:
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        t = GR_ZERO
        for i in range(self.rows):
            t = t + self.data[i][i]
        return t

    def col(self, j: int) -> list:
        return [self.data[i][j] for i in range(self.rows)]

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("shape mismatch")
        return Matrix([r1 + r2 for r1, r2 in zip(self.data, other.data)])

    def flatten(self) -> list:
        return [v for row in self.data for v in row]

    def is_real(self) -> bool:
        return all(not v.im for row in self.data for v in row)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"

    def pretty(self) -> str:
        cells = [[format_gauss(v) for v in row] for row in self.data]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(
            "[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells
        )


def lincomb(pairs: Iterable[tuple], rows: int, cols: int) -> Matrix:
    """Sum of c * M over (c, M) pairs, touching only nonzero entries."""
    acc = {}
    for c, m in pairs:
        c = GaussRat.of(c)
        if not c:
            continue
        for i, nz in enumerate(m.nonzeros()):
            for j, v in nz:
                key = (i, j)
                cur = acc.get(key, GR_ZERO) + c * v
                acc[key] = cur
    out = Matrix.zeros(rows, cols)
    for (i, j), v in acc.items():
        out.data[i][j] = v
    out._nz = None
    return out


def bracket(a: Matrix, b: Matrix) -> Matrix:
    """Matrix commutator [a, b] = ab - ba."""
    return (a @ b) - (b @ a)


def kron(a: Matrix, b: Matrix) -> Matrix:
    out = Matrix.zeros(a.rows * b.rows, a.cols * b.cols)
    for i, anz in enumerate(a.nonzeros()):
        for k, av in anz:
            for j, bnz in enumerate(b.nonzeros()):
                for l, bv in bnz:
                    out.data[i * b.rows + j][k * b.cols + l] = av * bv
    out._nz = None
    return out


def _rref(data: list[list[GaussRat]]) -> tuple[list[list[GaussRat]], list[int]]:
    """In-place reduced row echelon form; returns (data, pivot columns)."""
    rows = len(data)
    cols = len(data[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if data[i][c]:
                pr = i
                break
        if pr is None:
            continue
        data[r], data[pr] = data[pr], data[r]
        inv = GR_ONE / data[r][c]
        data[r] = [inv * x if x else GR_ZERO for x in data[r]]
        for i in range(rows):
            if i != r and data[i][c]:
                f = data[i][c]
                data[i] = [a - f * b if b else a for a, b in zip(data[i], data[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return data, pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    data = [row[:] for row in m.data]
    data, pivots = _rref(data)
    out = Matrix.__new__(Matrix)
    out.data, out.rows, out.cols, out._nz = data, m.rows, m.cols, None
    return out, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def mat_kernel(m: Matrix) -> list[Matrix]:
    """Basis of the exact null space, as column vectors.

    Free columns are parametrized in ascending order, so the result is
    deterministic; a zero map returns the full standard basis.
    """
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [GR_ZERO] * m.cols
        v[f] = GR_ONE
        for r, p in enumerate(pivots):
            v[p] = -red.data[r][f]
        basis.append(Matrix.column(v))
    return basis


def solve_linear(m: Matrix, b: Sequence) -> list | None:
    """Some exact solution x of m x = b, or None if inconsistent."""
    aug = m.hstack(Matrix.column([GaussRat.of(x) for x in b]))
    red, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [GR_ZERO] * m.cols
    for r, p in enumerate(pivots):
        x[p] = red.data[r][m.cols]
    return x


class LinearSolver:
    """Repeated exact solves against a fixed matrix.

    Stores the row-reduced form of [M | I] once; solve() then costs one
    matrix-vector product plus consistency checks.
    """

    def __init__(self, m: Matrix):
        self.m = m
        data = [row[:] + irow for row, irow in zip(m.data, Matrix.identity(m.rows).data)]
        pivots = []
        r = 0
        for c in range(m.cols):  # pivots restricted to the coefficient block
            pr = next((i for i in range(r, m.rows) if data[i][c]), None)
            if pr is None:
                continue
            data[r], data[pr] = data[pr], data[r]
            inv = GR_ONE / data[r][c]
            data[r] = [inv * x if x else GR_ZERO for x in data[r]]
            for i in range(m.rows):
                if i != r and data[i][c]:
                    f = data[i][c]
                    data[i] = [a - f * b if b else a for a, b in zip(data[i], data[r])]
            pivots.append(c)
            r += 1
            if r == m.rows:
                break
        self.pivots = pivots
        reduced = Matrix.__new__(Matrix)
        reduced.data, reduced.rows = data, m.rows
        reduced.cols, reduced._nz = m.cols + m.rows, None
        self.reduced = reduced
        self.rank = len(pivots)

    def solve(self, b: Sequence) -> list | None:
        b = [GaussRat.of(x) for x in b]
        n = self.m.cols
        transformed = []
        for i in range(self.m.rows):
            acc = GR_ZERO
            row = self.reduced.data[i]
            for j in range(self.m.rows):
                c = row[n + j]
                if c and b[j]:
                    acc = acc + c * b[j]
            transformed.append(acc)
        for i in range(self.rank, self.m.rows):
            if transformed[i]:
                return None
        x = [GR_ZERO] * n
        for r, p in enumerate(self.pivots):
            x[p] = transformed[r]
        return x


def mat_inverse(m: Matrix) -> Matrix:
    """Exact inverse of a square matrix; raises on singular input."""
    if m.rows != m.cols:
        raise ValueError("inverse of non-square matrix")
    red, pivots = rref(m.hstack(Matrix.identity(m.rows)))
    if len(pivots) != m.rows or pivots != list(range(m.rows)):
        raise ValueError("singular matrix")
    return Matrix([row[m.rows:] for row in red.data])


def conj_matrix(m: Matrix) -> Matrix:
    return Matrix([[v.conj() for v in row] for row in m.data])


def char_poly(m: Matrix):
    """Monic characteristic polynomial of a real-rational square matrix.

    Uses the Faddeev-LeVerrier recurrence, which stays in Q. Matrices with
    nonzero imaginary entries are rejected.
    """
    from .poly import RatPoly

    if m.rows != m.cols:
        raise ValueError("characteristic polynomial of non-square matrix")
    if not m.is_real():
        raise ValueError("matrix has nonzero imaginary entries")
    n = m.rows
    coeffs_high = [Fraction(1)]  # x^n, then x^{n-1}, ...
    a = Matrix.identity(n)
    for k in range(1, n + 1):
        a = m @ a
        ck = -a.trace().rational() / k
        coeffs_high.append(ck)
        if k < n:
            a = a + Matrix.identity(n).scale(ck)
    return RatPoly(list(reversed(coeffs_high)))
