"""Univariate polynomials over Q with certified real-root isolation.

Root isolation follows the classical recipe: take the square-free part,
divide out rational roots found by the rational-root test (these become
certified exact roots), and isolate the remaining irrational roots by
bisection with Sturm-sequence counts. Every interval returned provably
contains exactly one real root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import as_rat, format_rat


class RatPoly:
    """Polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [as_rat(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero() -> "RatPoly":
        return RatPoly([])

    @staticmethod
    def x() -> "RatPoly":
        return RatPoly([0, 1])

    @staticmethod
    def constant(c) -> "RatPoly":
        return RatPoly([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x) -> Fraction:
        x = as_rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "RatPoly") -> "RatPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return RatPoly([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "RatPoly":
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        if self.is_zero() or other.is_zero():
            return RatPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return RatPoly(out)

    def scale(self, c) -> "RatPoly":
        c = as_rat(c)
        return RatPoly([c * a for a in self.coeffs])

    def __divmod__(self, other: "RatPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return RatPoly.zero(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.leading
        for k in range(dq, -1, -1):
            if len(rem) < len(other.coeffs) + k:
                continue
            f = rem[len(other.coeffs) + k - 1] / lead
            quot[k] = f
            if f:
                for j, b in enumerate(other.coeffs):
                    rem[j + k] -= f * b
        return RatPoly(quot), RatPoly(rem)

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "RatPoly":
        return RatPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def gcd(self, other: "RatPoly") -> "RatPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        return a.monic()

    def squarefree_part(self) -> "RatPoly":
        if self.degree <= 0:
            return self.monic() if not self.is_zero() else self
        g = self.gcd(self.derivative())
        if g.degree == 0:
            return self.monic()
        return (self // g).monic()

    def primitive_integer(self) -> tuple[Fraction, list[int]]:
        """Write self = content * (integer-coefficient primitive part)."""
        if self.is_zero():
            return Fraction(0), []
        from math import gcd as igcd

        denom = 1
        for c in self.coeffs:
            denom = denom * c.denominator // igcd(denom, c.denominator)
        ints = [int(c * denom) for c in self.coeffs]
        g = 0
        for v in ints:
            g = igcd(g, abs(v))
        ints = [v // g for v in ints]
        return Fraction(g, denom), ints

    def is_multiple_of(self, other: "RatPoly") -> bool:
        """True when self = c * other for some nonzero rational c."""
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if self.degree != other.degree:
            return False
        c = self.leading / other.leading
        return self == other.scale(c)

    def to_str(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                term = format_rat(abs(c))
            else:
                mag = "" if abs(c) == 1 else format_rat(abs(c)) + "*"
                term = f"{mag}{var}" + (f"^{i}" if i > 1 else "")
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(f"{sign} {term}" if parts else f"{sign}{term}")
        return " ".join(parts)

    def __repr__(self):
        return f"RatPoly({self.to_str()})"


@dataclass(frozen=True)
class IsolatingInterval:
    """Closed interval certified to contain exactly one real root.

    exact means lo == hi is the root itself.
    """

    lo: Fraction
    hi: Fraction
    exact: bool

    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __str__(self):
        if self.exact:
            return f"x = {format_rat(self.lo)}"
        return f"({format_rat(self.lo)}, {format_rat(self.hi)}]"


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def rational_roots(p: RatPoly) -> list[Fraction]:
    """All rational roots (without multiplicity), by the rational-root test."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    shift = 0
    coeffs = list(p.coeffs)
    while coeffs and not coeffs[0]:
        coeffs.pop(0)
        shift += 1
    q = RatPoly(coeffs)
    roots = [Fraction(0)] if shift else []
    if q.degree >= 1:
        _, ints = q.primitive_integer()
        a0, an = ints[0], ints[-1]
        for num in _divisors(a0):
            for den in _divisors(an):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if q(cand) == 0 and cand not in roots:
                        roots.append(cand)
    return sorted(roots)


def sturm_chain(p: RatPoly) -> list[RatPoly]:
    """Sturm sequence p, p', -rem(...), ... of a square-free polynomial."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _sign_variations(values: list[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(chain: list[RatPoly], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (a, b]."""
    va = _sign_variations([q(a) for q in chain])
    vb = _sign_variations([q(b) for q in chain])
    return va - vb


def cauchy_bound(p: RatPoly) -> Fraction:
    """Bound B with all real roots in [-B, B]."""
    if p.degree < 1:
        return Fraction(1)
    lead = abs(p.leading)
    m = max(abs(c) for c in p.coeffs[:-1]) if p.degree >= 1 else Fraction(0)
    return 1 + m / lead


def _resolve_domain(p: RatPoly, domain) -> tuple[Fraction, Fraction]:
    bound = cauchy_bound(p)
    if domain == "positive":
        return Fraction(0), bound
    lo, hi = domain
    lo = -bound if lo is None else as_rat(lo)
    hi = bound if hi is None else as_rat(hi)
    if lo > hi:
        raise ValueError("empty domain")
    return lo, hi


def sturm_isolate(p: RatPoly, domain="positive") -> list[IsolatingInterval]:
    """Isolating intervals, one per distinct real root of p in the domain.

    domain is "positive" (the open ray x > 0) or a pair (lo, hi) for an open
    interval; None endpoints mean unbounded. Rational roots are returned as
    exact point intervals; the remaining roots get disjoint bisection
    intervals certified by Sturm counts.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    sf = p.squarefree_part()
    if sf.degree == 0:
        return []
    exact = rational_roots(sf)
    deflated = sf
    for r in exact:
        deflated = deflated // RatPoly([-r, 1])
    lo, hi = _resolve_domain(deflated if deflated.degree >= 1 else sf, domain)
    if domain == "positive":
        in_domain = lambda r: r > 0
    else:
        dlo, dhi = domain
        in_domain = lambda r: (dlo is None or r > as_rat(dlo)) and (
            dhi is None or r < as_rat(dhi)
        )
    out = [IsolatingInterval(r, r, True) for r in exact if in_domain(r)]
    if deflated.degree >= 1:
        chain = sturm_chain(deflated)
        stack = [(lo, hi)]
        found = []
        while stack:
            a, b = stack.pop()
            n = sturm_count(chain, a, b)
            if n == 0:
                continue
            if n == 1:
                found.append((a, b))
                continue
            mid = (a + b) / 2
            stack.append((a, mid))
            stack.append((mid, b))
        # shrink until no exact root point sits inside an isolating interval
        cleaned = []
        for a, b in found:
            while any(a < r <= b for r in exact):
                mid = (a + b) / 2
                if sturm_count(chain, a, mid) == 1:
                    b = mid
                else:
                    a = mid
            cleaned.append(IsolatingInterval(a, b, False))
        out.extend(cleaned)
    out.sort(key=lambda iv: iv.lo)
    return out


def refine_root(p: RatPoly, iv: IsolatingInterval, tol) -> IsolatingInterval:
    """Shrink an isolating interval to width <= tol by bisection.

    A midpoint that happens to be the root collapses the interval to an
    exact one.
    """
    tol = as_rat(tol)
    if iv.exact:
        return iv
    sf = p.squarefree_part()
    for r in rational_roots(sf):
        if iv.lo < r <= iv.hi:
            return IsolatingInterval(r, r, True)
    a, b = iv.lo, iv.hi
    fa = sf(a)
    if fa == 0:
        raise ValueError("interval endpoint is a root; not an isolating interval")
    while b - a > tol:
        mid = (a + b) / 2
        fm = sf(mid)
        if fm == 0:
            return IsolatingInterval(mid, mid, True)
        if (fa > 0) != (fm > 0):
            b = mid
        else:
            a, fa = mid, fm
    return IsolatingInterval(a, b, False)
