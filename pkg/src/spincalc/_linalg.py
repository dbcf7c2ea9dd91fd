"""Exact linear algebra over the rationals.

Plain Gaussian elimination on ``fractions.Fraction`` entries.  Rank,
determinant and linear solves are exact, so every vanishing or rank
statement made elsewhere in the package is decided with zero tolerance.
"""

from __future__ import annotations

from fractions import Fraction


class SingularMatrixError(ValueError):
    """A square system with no unique solution."""


def _copy_rows(mat):
    return [[Fraction(x) for x in row] for row in mat]


def mat_rank(mat) -> int:
    """Rank of a rectangular matrix of rationals."""
    rows = _copy_rows(mat)
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def mat_det(mat) -> Fraction:
    """Determinant of a square matrix of rationals."""
    rows = _copy_rows(mat)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col]:
                f = rows[r][col] * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return det


def solve(mat, rhs) -> list[Fraction]:
    """Solve a square system ``mat * x = rhs`` exactly.

    Raises ``SingularMatrixError`` when the matrix is not invertible.
    """
    n = len(mat)
    if any(len(r) != n for r in mat) or len(rhs) != n:
        raise SingularMatrixError("system is not square")
    rows = [[Fraction(x) for x in row] + [Fraction(b)]
            for row, b in zip(mat, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [rows[r][n] for r in range(n)]


def mat_mul(a, b):
    """Product of two rational matrices."""
    return [[sum((Fraction(a[i][k]) * Fraction(b[k][j])
                  for k in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
