"""Integral lattices with exact Gram-matrix arithmetic.

Covers the rank-8 Nikulin lattice (eight orthogonal (-2)-classes together
with their half-sum), its rank-9 extension by a polarization class of
square 2g-2, the standard hyperbolic plane and E8, the Cauchy-Schwarz
obstruction to certain isotropic classes, and the doubly-elliptic K3
identities.

A lattice is a symmetric integer Gram matrix with named basis vectors;
vectors are integer coordinate sequences in that basis.  Everything is
exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from ._linalg import mat_det


class DimensionMismatchError(ValueError):
    """Vector length does not match the lattice rank."""


@dataclass(frozen=True)
class IntegerLattice:
    """Integral symmetric bilinear form with a named basis."""

    gram: tuple
    basis_names: tuple

    def __post_init__(self):
        n = len(self.gram)
        if len(self.basis_names) != n:
            raise ValueError("one basis name per Gram row")
        for i, row in enumerate(self.gram):
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
            for j in range(n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("Gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def _check(self, v):
        if len(v) != self.rank:
            raise DimensionMismatchError(
                f"vector of length {len(v)} in a rank-{self.rank} lattice")

    def inner(self, v, w) -> int:
        """Bilinear product v . w = v^T G w."""
        self._check(v)
        self._check(w)
        return sum(v[i] * self.gram[i][j] * w[j]
                   for i in range(self.rank) for j in range(self.rank))

    def norm(self, v) -> int:
        """Self-intersection v . v."""
        return self.inner(v, v)

    def is_even(self) -> bool:
        """Even lattice: every vector has even square (all diagonal
        entries even suffices for an integral Gram)."""
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def determinant(self) -> int:
        d = mat_det(self.gram)
        return int(d)

    def basis_vector(self, name) -> tuple:
        """Coordinate vector of a named (or indexed) basis element."""
        idx = name if isinstance(name, int) else self.basis_names.index(name)
        return tuple(int(i == idx) for i in range(self.rank))

    def direct_sum(self, other: "IntegerLattice") -> "IntegerLattice":
        """Orthogonal direct sum; basis names are concatenated."""
        n, m = self.rank, other.rank
        gram = tuple(tuple(self.gram[i]) + (0,) * m for i in range(n)) + \
            tuple((0,) * n + tuple(other.gram[i]) for i in range(m))
        return IntegerLattice(gram, self.basis_names + other.basis_names)

    def scaled(self, c: int) -> "IntegerLattice":
        """Same module with the form multiplied by the integer c."""
        gram = tuple(tuple(c * x for x in row) for row in self.gram)
        return IntegerLattice(gram, self.basis_names)


def _lattice(rows, names) -> IntegerLattice:
    return IntegerLattice(tuple(tuple(r) for r in rows), tuple(names))


def nikulin_lattice() -> IntegerLattice:
    """The even rank-8 lattice spanned by orthogonal (-2)-classes
    n_1..n_8 and their half-sum e.

    {n_1..n_8} is not an integral basis (e is a half-sum), so the integral
    basis used here is {n_1..n_7, e}; the eighth root is the derived
    vector n_8 = 2e - n_1 - ... - n_7.  In this basis e.e = -4 and
    e.n_i = -1; the determinant is 64.
    """
    rows = [[-2 * (i == j) for j in range(7)] + [-1] for i in range(7)]
    rows.append([-1] * 7 + [-4])
    return _lattice(rows, [f"n{i}" for i in range(1, 8)] + ["e"])


def nikulin_derived_root() -> tuple:
    """Coordinates of n_8 = 2e - n_1 - ... - n_7 in the integral basis."""
    return (-1,) * 7 + (2,)


def lambda_lattice(g: int) -> IntegerLattice:
    """Rank-9 polarized Nikulin lattice: Z*c (+) nikulin_lattice(), with
    c.c = 2g - 2 and c orthogonal to the Nikulin block."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    pol = _lattice([[2 * g - 2]], ["c"])
    return pol.direct_sum(nikulin_lattice())


def hyperbolic_u() -> IntegerLattice:
    """The standard rank-2 hyperbolic plane."""
    return _lattice([[0, 1], [1, 0]], ["u1", "u2"])


#: Dynkin-diagram edges of E8 (Bourbaki numbering: the chain
#: 1-3-4-5-6-7-8 with node 2 attached to node 4).
_E8_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


def e8(scale: int = 1) -> IntegerLattice:
    """The E8 root lattice scaled by `scale`.

    The base Gram is the positive-definite Cartan matrix (determinant 1,
    even); e8(-1) is the even negative-definite unimodular rank-8 lattice
    and e8(-2) its rescaling with all squares divisible by 4.
    """
    rows = [[2 * (i == j) for j in range(8)] for i in range(8)]
    for a, b in _E8_EDGES:
        rows[a - 1][b - 1] = rows[b - 1][a - 1] = -1
    return _lattice(rows, [f"r{i}" for i in range(1, 9)]).scaled(scale)


def sum_square_solution_exists(slots: int, target_sum: int,
                               target_norm: int) -> bool:
    """Decide whether integers b_1..b_slots satisfy sum b_i = target_sum
    and sum b_i^2 = target_norm.

    Exhaustive bitset dynamic program over (slots used, norm spent,
    running sum); the only pruning is the cap |b_i| <= sqrt(target_norm)
    forced by the norm equation itself.
    """
    if target_norm < 0:
        return False
    bound = isqrt(target_norm)
    offset = slots * bound
    if abs(target_sum) > offset:
        return False
    # reachable[m] = bitmask over sums s (bit index s + offset)
    reachable = {0: 1 << offset}
    values = range(-bound, bound + 1)
    for _ in range(slots):
        nxt: dict = {}
        for m, mask in reachable.items():
            for v in values:
                m2 = m + v * v
                if m2 > target_norm:
                    continue
                shifted = mask << v if v >= 0 else mask >> -v
                nxt[m2] = nxt.get(m2, 0) | shifted
        reachable = nxt
    mask = reachable.get(target_norm, 0)
    return bool(mask & (1 << (target_sum + offset)))


@dataclass(frozen=True)
class CsEntry:
    """One row of the obstruction certificate, at polarization multiple a."""

    a: int
    target_sum: int      # sum b_i  = 2ag - 2a - 3
    target_norm: int     # sum b_i^2 = a^2 (g - 1)
    cs_gap: int          # (sum b_i)^2 - 8 * sum b_i^2, positive = obstructed
    solution_found: bool


@dataclass(frozen=True)
class CsCertificate:
    """Certificate that no elliptic class of polarization degree 3 exists.

    A class a*c - sum b_i n_i with square 0 and degree 3 against the
    half-polarization forces sum b_i = 2ag - 2a - 3 and
    sum b_i^2 = a^2(g-1) over the eight roots.  For each a the analytic
    route checks that (sum b_i)^2 > 8 * sum b_i^2, contradicting
    Cauchy-Schwarz; the search route independently confirms that no
    integer 8-tuple satisfies both equations.
    """

    genus: int
    entries: tuple

    @property
    def holds(self) -> bool:
        return all(e.cs_gap > 0 and not e.solution_found
                   for e in self.entries)


def cs_obstruction(g: int, a_bound: int) -> CsCertificate:
    """Run both obstruction routes for a = 1..a_bound at genus g >= 7."""
    if g < 7:
        raise ValueError("the obstruction argument applies from genus 7 on")
    if a_bound < 1:
        raise ValueError("need at least one multiple to check")
    entries = []
    for a in range(1, a_bound + 1):
        s = 2 * a * g - 2 * a - 3
        m = a * a * (g - 1)
        gap = s * s - 8 * m
        found = sum_square_solution_exists(8, s, m)
        entries.append(CsEntry(a, s, m, gap, found))
    return CsCertificate(g, tuple(entries))


def lambda_identities(g: int):
    """The standard identity battery in the rank-9 polarized lattice.

    Returns (name, computed, expected) triples for H = c - e, N = 2e and
    the generators: H^2 = 2g-6, H.c = 2g-2, H.n_i = 1 for all eight
    roots, N^2 = -16, N.H = 8, N.c = 0, e^2 = -4, c^2 = 2g-2.
    """
    lat = lambda_lattice(g)
    c = lat.basis_vector("c")
    e = lat.basis_vector("e")
    h = tuple(ci - ei for ci, ei in zip(c, e))
    n2 = tuple(2 * x for x in e)
    roots = [lat.basis_vector(f"n{i}") for i in range(1, 8)]
    roots.append((0,) + nikulin_derived_root())
    rows = [
        ("H^2", lat.norm(h), 2 * g - 6),
        ("H.c", lat.inner(h, c), 2 * g - 2),
        ("N^2", lat.norm(n2), -16),
        ("N.H", lat.inner(n2, h), 8),
        ("N.c", lat.inner(n2, c), 0),
        ("e^2", lat.norm(e), -4),
        ("c^2", lat.norm(c), 2 * g - 2),
    ]
    for i, r in enumerate(roots, start=1):
        rows.append((f"H.n{i}", lat.inner(h, r), 1))
    return rows


@dataclass(frozen=True)
class DoublyEllipticReport:
    """Lattice identities behind the doubly-elliptic K3 construction.

    On the resolution of a 7-nodal quadric section, the hyperplane class
    decomposes as C = 2E + G_1 + ... + G_7 with E an elliptic pencil
    (E^2 = 0, G_i^2 = -2, G_i.E = 1, G_i.G_j = 0); its square must be 14,
    i.e. 2g-2 at genus 8.  The same square arises on the rank-2 lattice
    of the two elliptic pencils C_1, C_2 with C_1.C_2 = 7.
    """

    section_square: int
    section_dot_exceptional: tuple
    pencil_sum_square: int

    @property
    def holds(self) -> bool:
        return (self.section_square == 14
                and all(x == 0 for x in self.section_dot_exceptional)
                and self.pencil_sum_square == 14)


def doubly_elliptic_identities() -> DoublyEllipticReport:
    """Verify the quadric-section decomposition and elliptic-pencil
    identities at genus 8."""
    rows = [[0] + [1] * 7]
    for i in range(1, 8):
        rows.append([1] + [-2 * (i == j) for j in range(1, 8)])
    blowup = _lattice(rows, ["E"] + [f"G{i}" for i in range(1, 8)])
    section = (2,) + (1,) * 7
    dots = tuple(blowup.inner(section, blowup.basis_vector(f"G{i}"))
                 for i in range(1, 8))
    pencils = _lattice([[0, 7], [7, 0]], ["C1", "C2"])
    return DoublyEllipticReport(
        section_square=blowup.norm(section),
        section_dot_exceptional=dots,
        pencil_sum_square=pencils.norm((1, 1)),
    )
