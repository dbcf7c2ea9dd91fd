"""Exact linear algebra of quadratic line complexes.

For a quadratic form Q on V with bilinear form Qt, the second compound
form on the wedge square is

    nu2(Qt)(u^v, s^t) = Qt(u,s) Qt(v,t) - Qt(v,s) Qt(u,t),

whose Gram matrix consists of the 2x2 minors of the Gram of Qt; its rank
is C(rank Q, 2).  The tangent lines to the quadric {Q = 0} through a
point [u] on it are cut out by the vanishing of nu2 on u^v, and the
singular points of that complex are exactly the lines contained in the
quadric (both vectors isotropic).

The module also decides the rank trichotomy {6, 10, 15} of quadrics
through G(2, 6): a bivector psi defines the symmetric form
B(x, y) = vol(x ^ y ^ psi) on the wedge square of a 6-space, and the
rank of B is 6, 10 or 15 according to the wedge-rank of psi.

Everything is exact rational arithmetic; the random samplers draw integer
entries in [-9, 9] from a caller-supplied seeded generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ._linalg import SingularMatrixError, mat_det, mat_rank, solve


class BasePointNotOnQuadricError(ValueError):
    """Tangency asked at a base point off the quadric."""


class DependentVectorsError(ValueError):
    """The two vectors do not span a line."""


class NotInComplexError(ValueError):
    """Singularity asked at a line outside the complex."""


class ZeroInputError(ValueError):
    """The zero bivector defines no quadric."""


@dataclass(frozen=True)
class SymmetricForm:
    """Dense exact-rational symmetric bilinear form."""

    gram: tuple

    def __post_init__(self):
        n = len(self.gram)
        for row in self.gram:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("Gram matrix must be symmetric")

    @property
    def dim(self) -> int:
        return len(self.gram)

    def evaluate(self, u, v) -> Fraction:
        """Bilinear value u^T G v."""
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError("vector length must match the form dimension")
        return sum((Fraction(u[i]) * self.gram[i][j] * Fraction(v[j])
                    for i in range(self.dim) for j in range(self.dim)),
                   Fraction(0))

    def quadratic(self, u) -> Fraction:
        return self.evaluate(u, u)

    def rank(self) -> int:
        return mat_rank(self.gram)


def symmetric_form(rows) -> SymmetricForm:
    """Build a form from any square symmetric array of rationals."""
    return SymmetricForm(tuple(tuple(Fraction(x) for x in row)
                               for row in rows))


def wedge_pairs(n: int) -> tuple:
    """Lexicographic index pairs (i, j), i < j, of the wedge-square basis."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def wedge_coordinates(u, v) -> list:
    """Pluecker coordinates of u ^ v in the lexicographic pair basis."""
    return [Fraction(u[i]) * Fraction(v[j]) - Fraction(u[j]) * Fraction(v[i])
            for i, j in wedge_pairs(len(u))]


def second_compound(q: SymmetricForm) -> SymmetricForm:
    """Second compound form on the wedge square: the 2x2-minor matrix of
    the Gram of q.  Its rank is C(rank q, 2).
    """
    g = q.gram
    pairs = wedge_pairs(q.dim)
    rows = []
    for (i, j) in pairs:
        rows.append(tuple(g[i][k] * g[j][l] - g[j][k] * g[i][l]
                          for (k, l) in pairs))
    return SymmetricForm(tuple(rows))


def _require_line(u, v):
    pairs = wedge_pairs(len(u))
    if all(Fraction(u[i]) * Fraction(v[j]) == Fraction(u[j]) * Fraction(v[i])
           for i, j in pairs):
        raise DependentVectorsError("vectors do not span a line")


def tangency(q: SymmetricForm, u, v) -> bool:
    """Is the line through [u] (on the quadric) and [v] tangent to it?

    Decided by the vanishing of the second compound form on u ^ v.  The
    independent route is `discriminant_tangency`.
    """
    if q.quadratic(u) != 0:
        raise BasePointNotOnQuadricError("base point is not on the quadric")
    _require_line(u, v)
    w = wedge_coordinates(u, v)
    return second_compound(q).evaluate(w, w) == 0


def discriminant_tangency(q: SymmetricForm, u, v) -> bool:
    """Oracle for `tangency`: the restriction of q to the line su + tv is
    a binary quadratic with discriminant Qt(u,v)^2 - Q(u) Q(v); the line
    is tangent exactly when the discriminant vanishes."""
    if q.quadratic(u) != 0:
        raise BasePointNotOnQuadricError("base point is not on the quadric")
    _require_line(u, v)
    return q.evaluate(u, v) ** 2 - q.quadratic(u) * q.quadratic(v) == 0


def is_singular_point(q: SymmetricForm, u, v) -> bool:
    """Is [u ^ v] a singular point of the tangent-line complex of q?

    The gradient of the complex at u ^ v is the linear form
    nu2(Qt)(u ^ v, -); it is tested against every tangent direction
    u ^ e_i and v ^ e_i.  For a line in the complex this vanishing is
    equivalent to the second vector being isotropic as well, i.e. to the
    line lying inside the quadric.
    """
    if q.quadratic(u) != 0:
        raise NotInComplexError("base point is not on the quadric")
    _require_line(u, v)
    n2 = second_compound(q)
    w = wedge_coordinates(u, v)
    if n2.evaluate(w, w) != 0:
        raise NotInComplexError("line is not in the tangent complex")
    dim = q.dim
    basis = [[int(i == k) for i in range(dim)] for k in range(dim)]
    for e in basis:
        if n2.evaluate(w, wedge_coordinates(u, e)) != 0:
            return False
        if n2.evaluate(w, wedge_coordinates(v, e)) != 0:
            return False
    return True


def solve_in_basis(pairing_rows, targets) -> list:
    """Express a class in a divisor basis from its test-curve pairings.

    Row r of `pairing_rows` lists the pairings of curve r with each basis
    divisor; `targets` lists the pairings of the sought class with each
    curve.  Returns the exact coefficient vector.
    """
    return solve(pairing_rows, targets)


def _perm_sign(seq) -> int:
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq))
                     if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


def plucker_quadric_rank(psi, dim_v: int = 6) -> int:
    """Rank of the quadric B(x, y) = vol(x ^ y ^ psi) on the wedge square.

    `psi` maps index pairs (i, j), i < j < dim_v, to rational
    coefficients.  For dim_v = 6 the rank is 6 for decomposable psi (a
    Pluecker quadric), 10 for wedge-rank two, 15 for wedge-rank three.

    >>> plucker_quadric_rank({(0, 1): 1})
    6
    """
    if dim_v != 6:
        raise ValueError("the volume pairing needs a 6-dimensional space")
    psi = {p: Fraction(v) for p, v in psi.items() if Fraction(v)}
    if not psi:
        raise ZeroInputError("zero bivector")
    for (i, j) in psi:
        if not 0 <= i < j < dim_v:
            raise ValueError(f"bad index pair {(i, j)}")
    pairs = wedge_pairs(dim_v)
    rows = []
    for (a, b) in pairs:
        row = []
        for (c, d) in pairs:
            val = Fraction(0)
            for (i, j), p in psi.items():
                support = (a, b, c, d, i, j)
                if len(set(support)) == len(support) == dim_v:
                    val += p * _perm_sign(support)
            row.append(val)
        rows.append(tuple(row))
    return SymmetricForm(tuple(rows)).rank()


def transform_bivector(matrix, psi) -> dict:
    """Image of a bivector under the wedge square of a linear map
    (e_i -> sum_k matrix[k][i] e_k)."""
    n = len(matrix)
    out: dict = {}
    for (i, j), p in psi.items():
        p = Fraction(p)
        for k, l in wedge_pairs(n):
            c = (Fraction(matrix[k][i]) * Fraction(matrix[l][j])
                 - Fraction(matrix[k][j]) * Fraction(matrix[l][i]))
            if c:
                out[(k, l)] = out.get((k, l), Fraction(0)) + p * c
    return {p: v for p, v in out.items() if v}


# ---------------------------------------------------------------------------
# seeded samplers for the property suites

_ENTRY_RANGE = (-9, 9)


def random_invertible_matrix(rng, dim: int) -> list:
    """Random integer matrix with nonzero determinant."""
    while True:
        m = [[rng.randint(*_ENTRY_RANGE) for _ in range(dim)]
             for _ in range(dim)]
        if mat_det(m) != 0:
            return m


def random_unimodular_pair(rng, dim: int, steps: int = 10):
    """Random integer change of basis together with its integer inverse.

    Built as a product of row shears and swaps (determinant +-1), so the
    inverse stays integral and entries stay small in the sampling loops.
    """
    m = [[int(i == j) for j in range(dim)] for i in range(dim)]
    inv = [[int(i == j) for j in range(dim)] for i in range(dim)]
    for _ in range(steps):
        i = rng.randrange(dim)
        j = rng.randrange(dim)
        if i == j:
            m[i], m[j] = m[j], m[i]
            continue
        if rng.random() < 0.2:
            # swap: self-inverse, applied on the left of m and the
            # right of inv
            m[i], m[j] = m[j], m[i]
            for row in inv:
                row[i], row[j] = row[j], row[i]
            continue
        c = rng.randint(-3, 3)
        # m <- S m with S = I + c E_ij; inv <- inv S^{-1}
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        for row in inv:
            row[j] -= c * row[i]
    return m, inv


def _conjugate_by(p, diag_or_gram):
    """P^T G P for an integer matrix P and symmetric integer G."""
    dim = len(p)
    g = diag_or_gram
    gp = [[sum(g[i][k] * p[k][j] for k in range(dim)) for j in range(dim)]
          for i in range(dim)]
    return [[sum(p[k][i] * gp[k][j] for k in range(dim))
             for j in range(dim)] for i in range(dim)]


def random_symmetric_form_of_rank(rng, dim: int, rank: int) -> SymmetricForm:
    """Random symmetric form of exact rank: a nonzero diagonal of the
    requested length conjugated by a random change of basis."""
    if not 0 <= rank <= dim:
        raise ValueError("rank out of range")
    g0 = [[0] * dim for _ in range(dim)]
    for i in range(rank):
        g0[i][i] = _nonzero(rng)
    p, _ = random_unimodular_pair(rng, dim)
    return symmetric_form(_conjugate_by(p, g0))


def _nonzero(rng):
    d = 0
    while d == 0:
        d = rng.randint(*_ENTRY_RANGE)
    return d


def _conjugated_split_sample(rng, diag_tail):
    """Split form (hyperbolic plane + diagonal tail) pushed through a
    random change of basis; returns (form, image of each basis vector)."""
    dim = 2 + len(diag_tail)
    g0 = [[0] * dim for _ in range(dim)]
    g0[0][1] = g0[1][0] = 1
    for i, d in enumerate(diag_tail):
        g0[2 + i][2 + i] = d
    p, pinv = random_unimodular_pair(rng, dim)
    gram = _conjugate_by(p, g0)
    # in the new coordinates the old basis vector e_k is P^{-1} e_k
    images = [[pinv[r][k] for r in range(dim)] for k in range(dim)]
    return symmetric_form(gram), images


def tangency_samples(rng, count: int, dim: int = 5):
    """Yield (q, u, v) with q of full rank, [u] on the quadric, v generic."""
    for _ in range(count):
        tail = [_nonzero(rng) for _ in range(dim - 2)]
        q, images = _conjugated_split_sample(rng, tail)
        u = images[0]
        while True:
            v = [rng.randint(*_ENTRY_RANGE) for _ in range(dim)]
            try:
                _require_line(u, v)
            except DependentVectorsError:
                continue
            break
        yield q, u, v


def complex_point_samples(rng, count: int, dim: int = 5):
    """Yield (q, u, v, inside) with [u ^ v] in the tangent complex of the
    full-rank form q; `inside` marks the constructed lines that lie in
    the quadric (both vectors isotropic).

    Construction on the split model U + diag(d, -d, d'): u0 = e_1 is
    isotropic and everything orthogonal to e_2 pairs to zero with it;
    v0 = (a, 0, t, t, 0) is isotropic, v0 = (a, 0, b, c, f) generic.
    """
    if dim != 5:
        raise ValueError("the split construction is tuned to dimension 5")
    made = 0
    while made < count:
        d = _nonzero(rng)
        tail = [d, -d, _nonzero(rng)]
        q, images = _conjugated_split_sample(rng, tail)
        inside = made % 2 == 0
        if inside:
            t = _nonzero(rng)
            coeffs = [rng.randint(*_ENTRY_RANGE), 0, t, t, 0]
        else:
            coeffs = [rng.randint(*_ENTRY_RANGE), 0,
                      rng.randint(*_ENTRY_RANGE),
                      rng.randint(*_ENTRY_RANGE),
                      rng.randint(*_ENTRY_RANGE)]
        v = [sum(c * img[r] for c, img in zip(coeffs, images))
             for r in range(dim)]
        u = images[0]
        try:
            _require_line(u, v)
        except DependentVectorsError:
            continue
        if not inside and q.quadratic(v) == 0:
            continue
        yield q, u, v, inside
        made += 1


def compound_rank_samples(rng, count: int, dim: int = 5):
    """Yield (q, rank q) over all ranks 0..dim, `count` samples each."""
    for rank in range(dim + 1):
        for _ in range(count):
            yield random_symmetric_form_of_rank(rng, dim, rank), rank
