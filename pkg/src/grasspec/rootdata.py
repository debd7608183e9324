"""Root-system and weight data for the four Lie types in play.

Weights are coordinate tuples of Fractions: length 3 for so(7) and for both
copies of the exceptional 14-dimensional algebra and of su(3) (whose weights
live on the sum-zero hyperplane), length 2 for so(4) = su(2)+su(2). Each
record carries the dual bilinear form normalization matching the invariant
inner product used for that algebra's Casimir scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import Matrix, as_rat, solve_linear

Weight = tuple[Fraction, ...]


def weight(*coords) -> Weight:
    return tuple(as_rat(c) for c in coords)


def weight_add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def weight_scale(c, a: Weight) -> Weight:
    c = as_rat(c)
    return tuple(c * x for x in a)


@dataclass(frozen=True)
class RootSystem:
    name: str
    coords: int
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    fundamental_weights: tuple[Weight, ...]
    dual_form_diag: Fraction  # dual form is dual_form_diag * (standard dot)
    sum_zero: bool = False

    def pairing(self, a: Weight, b: Weight) -> Fraction:
        if len(a) != self.coords or len(b) != self.coords:
            raise ValueError(f"{self.name}: weight length mismatch")
        return self.dual_form_diag * sum(x * y for x, y in zip(a, b))

    def rho(self) -> Weight:
        acc = (Fraction(0),) * self.coords
        for r in self.positive_roots:
            acc = weight_add(acc, r)
        return weight_scale(Fraction(1, 2), acc)

    def coroot_pairing(self, lam: Weight, alpha: Weight) -> Fraction:
        """<lam, alpha-check> = 2 <lam, alpha> / <alpha, alpha>."""
        return 2 * self.pairing(lam, alpha) / self.pairing(alpha, alpha)

    def is_dominant_integral(self, lam: Weight) -> bool:
        for alpha in self.simple_roots:
            c = self.coroot_pairing(lam, alpha)
            if c < 0 or c.denominator != 1:
                return False
        return True

    def fundamental_combo(self, coeffs: Sequence[int]) -> Weight:
        acc = (Fraction(0),) * self.coords
        for c, w in zip(coeffs, self.fundamental_weights):
            acc = weight_add(acc, weight_scale(c, w))
        return acc

    def validate(self) -> None:
        # rho is half the sum of positive roots by construction; check the
        # simple/fundamental duality and integral positivity instead.
        for i, w in enumerate(self.fundamental_weights):
            for j, alpha in enumerate(self.simple_roots):
                want = 1 if i == j else 0
                got = self.coroot_pairing(w, alpha)
                if got != want:
                    raise AssertionError(
                        f"{self.name}: <w{i + 1}, a{j + 1}^> = {got}, want {want}"
                    )
        cols = Matrix([[r[k] for r in self.simple_roots] for k in range(self.coords)])
        for root in self.positive_roots:
            sol = solve_linear(cols, list(root))
            if sol is None:
                raise AssertionError(f"{self.name}: {root} not in simple-root span")
            for c in sol:
                v = c.rational()
                if v < 0 or v.denominator != 1:
                    raise AssertionError(
                        f"{self.name}: {root} has non-integral expansion {sol}"
                    )
        if self.sum_zero:
            for r in self.positive_roots:
                if sum(r) != 0:
                    raise AssertionError(f"{self.name}: {r} violates sum-zero")


def _mk(name, simple, positive, fundamental, diag, sum_zero=False) -> RootSystem:
    sys = RootSystem(
        name=name,
        coords=len(simple[0]),
        simple_roots=tuple(weight(*r) for r in simple),
        positive_roots=tuple(weight(*r) for r in positive),
        fundamental_weights=tuple(weight(*w) for w in fundamental),
        dual_form_diag=as_rat(diag),
        sum_zero=sum_zero,
    )
    sys.validate()
    return sys


_B3 = None
_G2 = None
_A2 = None
_A1A1 = None


def builtin_systems() -> dict[str, RootSystem]:
    """The four root-system records with their invariant-form duals.

    b3: so(7) with kappa = (negative) Killing form, dual form (1/10) dot.
    g2: the 14-dimensional exceptional algebra in sum-zero 3-coordinates
        (short simple root e2-e3, long e1-2e2+e3), own Killing dual (1/24).
    a2_in_g2: su(3) sitting inside g2, same coordinates, dual (1/18).
    a1xa1: so(4) = su(2)+su(2), 2 coordinates, dual (1/8); only its
        dimensions feed the branching audits.
    """
    global _B3, _G2, _A2, _A1A1
    if _B3 is None:
        _B3 = _mk(
            "b3",
            simple=[(1, -1, 0), (0, 1, -1), (0, 0, 1)],
            positive=[
                (1, -1, 0), (1, 0, -1), (0, 1, -1),
                (1, 1, 0), (1, 0, 1), (0, 1, 1),
                (1, 0, 0), (0, 1, 0), (0, 0, 1),
            ],
            fundamental=[
                (1, 0, 0),
                (1, 1, 0),
                (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
            ],
            diag=Fraction(1, 10),
        )
        _G2 = _mk(
            "g2",
            simple=[(0, 1, -1), (1, -2, 1)],
            positive=[
                (0, 1, -1), (1, -2, 1), (1, -1, 0),
                (1, 1, -2), (1, 0, -1), (2, -1, -1),
            ],
            fundamental=[(1, 0, -1), (2, -1, -1)],
            diag=Fraction(1, 24),
            sum_zero=True,
        )
        _A2 = _mk(
            "a2_in_g2",
            simple=[(1, 1, -2), (1, -2, 1)],
            positive=[(1, 1, -2), (1, -2, 1), (2, -1, -1)],
            fundamental=[(1, 0, -1), (1, -1, 0)],
            diag=Fraction(1, 18),
            sum_zero=True,
        )
        _A1A1 = _mk(
            "a1xa1",
            simple=[(2, 0), (0, 2)],
            positive=[(2, 0), (0, 2)],
            fundamental=[(1, 0), (0, 1)],
            diag=Fraction(1, 8),
        )
    return {"b3": _B3, "g2": _G2, "a2_in_g2": _A2, "a1xa1": _A1A1}


def dual_pairing(sys: RootSystem, a: Weight, b: Weight) -> Fraction:
    return sys.pairing(a, b)


def casimir_scalar(sys: RootSystem, lam: Weight, scale=1) -> Fraction:
    """scale * <lam, lam + 2 rho> in the dual form.

    scale absorbs restriction of the ambient invariant form to a subalgebra
    (4/5 for the 14-dimensional subalgebra of so(7), 3/4 for su(3) inside it).
    """
    if not sys.is_dominant_integral(lam):
        raise ValueError(f"{sys.name}: {lam} is not dominant integral")
    two_rho = weight_scale(2, sys.rho())
    return as_rat(scale) * sys.pairing(lam, weight_add(lam, two_rho))


def weyl_dim(sys: RootSystem, lam: Weight) -> int:
    """Dimension by the Weyl product formula; always a positive integer."""
    if not sys.is_dominant_integral(lam):
        raise ValueError(f"{sys.name}: {lam} is not dominant integral")
    rho = sys.rho()
    num = Fraction(1)
    den = Fraction(1)
    for alpha in sys.positive_roots:
        num *= sys.pairing(weight_add(lam, rho), alpha)
        den *= sys.pairing(rho, alpha)
    d = num / den
    if d.denominator != 1 or d <= 0:
        raise AssertionError(f"Weyl formula returned {d} for {lam}")
    return int(d)


def enumerate_dominant_by_dim(sys: RootSystem, bound: int) -> list[tuple[Weight, int]]:
    """All dominant integral weights with weyl_dim <= bound.

    The Weyl product is strictly increasing in each fundamental-weight
    coefficient (every factor <lam+rho, alpha> is nondecreasing and the one
    for the matching simple root strictly increases), so the coefficient
    box can be pruned as soon as the dimension exceeds the bound.
    """
    results = []
    n = len(sys.fundamental_weights)

    def rec(prefix: list[int], pos: int):
        if pos == n:
            lam = sys.fundamental_combo(prefix)
            d = weyl_dim(sys, lam)
            if d <= bound:
                results.append((lam, d))
            return
        c = 0
        while True:
            cand = prefix + [c] + [0] * (n - pos - 1)
            if weyl_dim(sys, sys.fundamental_combo(cand)) > bound:
                break
            rec(prefix + [c], pos + 1)
            c += 1

    if bound >= 1:
        rec([], 0)
    results.sort(key=lambda t: (t[1], t[0]))
    return results
