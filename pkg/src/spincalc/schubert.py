"""Exact Schubert calculus on the Grassmannian of lines G(2, n).

Cycles are integer combinations of the two-row Schubert classes
sigma_{a,b}, n-2 >= a >= b >= 0.  Products are computed by the
two-variable Schur expansion

    sigma_{a,b} * sigma_{c,d} = sum_k sigma_{a+c-k, b+d+k},
    k = 0 .. min(a-b, c-d),

truncated to the box a <= n-2; multiplication by sigma_1 is the Pieri
rule sigma_{a,b} -> sigma_{a+1,b} + sigma_{a,b+1}.  Degrees are read off
the coefficient of the top class after repeated Pieri steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


class AmbientMismatchError(ValueError):
    """Operands live in different Grassmannians."""


class MixedCodimensionError(ValueError):
    """Degree of a cycle with terms in several codimensions."""


@dataclass(frozen=True)
class SchubertCycle:
    """Integer combination of two-row Schubert classes in G(2, n)."""

    n: int
    terms: dict

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("G(2, n) needs n >= 3")
        for (a, b), c in self.terms.items():
            if not (self.n - 2 >= a >= b >= 0):
                raise ValueError(f"partition {(a, b)} outside the "
                                 f"2 x {self.n - 2} box")
            if not isinstance(c, int):
                raise ValueError("coefficients are integers")

    def coefficient(self, a: int, b: int = 0) -> int:
        return self.terms.get((a, b), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def codimensions(self) -> set:
        return {a + b for (a, b) in self.terms}

    def __add__(self, other: "SchubertCycle") -> "SchubertCycle":
        if not isinstance(other, SchubertCycle):
            return NotImplemented
        if other.n != self.n:
            raise AmbientMismatchError(f"G(2,{self.n}) vs G(2,{other.n})")
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, 0) + c
        return SchubertCycle(self.n, {p: c for p, c in terms.items() if c})

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return SchubertCycle(self.n, {})
            return SchubertCycle(self.n,
                                 {p: other * c for p, c in self.terms.items()})
        return multiply(self, other)

    __rmul__ = __mul__

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms):
            c = self.terms[(a, b)]
            body = f"s({a},{b})"
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            parts.append(("- " if c < 0 else "+ ") + body
                         if parts else ("-" if c < 0 else "") + body)
        return " ".join(parts)


def sigma(n: int, a: int, b: int = 0, coefficient: int = 1) -> SchubertCycle:
    """The class coefficient * sigma_{a,b} in G(2, n)."""
    if coefficient == 0:
        return SchubertCycle(n, {})
    return SchubertCycle(n, {(a, b): coefficient})


def pieri(c: SchubertCycle) -> SchubertCycle:
    """Multiply by sigma_1: sigma_{a,b} -> sigma_{a+1,b} + sigma_{a,b+1},
    dropping terms outside the box."""
    terms: dict = {}
    box = c.n - 2
    for (a, b), v in c.terms.items():
        if a + 1 <= box:
            terms[(a + 1, b)] = terms.get((a + 1, b), 0) + v
        if b + 1 <= a:
            terms[(a, b + 1)] = terms.get((a, b + 1), 0) + v
    return SchubertCycle(c.n, {p: v for p, v in terms.items() if v})


def multiply(c1: SchubertCycle, c2: SchubertCycle) -> SchubertCycle:
    """Product in the cohomology ring of G(2, n).

    >>> str(multiply(sigma(5, 1), sigma(5, 1)))
    's(1,1) + s(2,0)'
    """
    if c1.n != c2.n:
        raise AmbientMismatchError(f"G(2,{c1.n}) vs G(2,{c2.n})")
    box = c1.n - 2
    terms: dict = {}
    for (a, b), u in c1.terms.items():
        for (c, d), v in c2.terms.items():
            for k in range(min(a - b, c - d) + 1):
                p = (a + c - k, b + d + k)
                if p[0] <= box:
                    terms[p] = terms.get(p, 0) + u * v
    return SchubertCycle(c1.n, {p: v for p, v in terms.items() if v})


def degree(c: SchubertCycle) -> int:
    """Degree of a pure-codimension cycle: the coefficient of the top
    class sigma_{n-2,n-2} after pairing with the complementary power of
    sigma_1.

    >>> degree(sigma(5, 2, 1, 4))
    8
    """
    if c.is_zero():
        return 0
    codims = c.codimensions()
    if len(codims) != 1:
        raise MixedCodimensionError(f"codimensions {sorted(codims)}")
    k = codims.pop()
    top = 2 * (c.n - 2)
    if k > top:
        raise MixedCodimensionError("codimension exceeds the dimension")
    for _ in range(top - k):
        c = pieri(c)
    return c.coefficient(c.n - 2, c.n - 2)


def grassmannian_degree(n: int) -> int:
    """Degree of the Pluecker embedding of G(2, n), by repeated Pieri."""
    return degree(sigma(n, 0, 0))


def catalan_degree(n: int) -> int:
    """Closed form for deg G(2, n): the Catalan number
    (2m)! / (m! (m+1)!) with m = n-2.  Independent of the Pieri route."""
    m = n - 2
    return comb(2 * m, m) // (m + 1)


def vq_dimension(n: int) -> int:
    """Dimension 2n-5 of the family of lines on a smooth quadric in
    projective n-space."""
    if n < 4:
        raise ValueError("need projective dimension at least 4")
    return 2 * n - 5
