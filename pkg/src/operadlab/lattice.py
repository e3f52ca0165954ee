"""LLL reduction of integer lattices with exact rational Gram-Schmidt."""
from __future__ import annotations

from fractions import Fraction

from .arith import ZZ
from .linalg import Matrix, hnf, rank

__all__ = [
    "lll_reduce", "lattice_equal", "gram_schmidt", "is_size_reduced",
    "satisfies_lovasz", "squared_lengths", "triangular_form", "parse_delta",
]


def parse_delta(delta) -> Fraction:
    d = Fraction(delta)
    if not (Fraction(1, 4) < d <= 1):
        raise ValueError(f"reduction parameter must lie in (1/4, 1], got {d}")
    return d


def _dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def gram_schmidt(rows):
    """Return ``(mu, B)``: GS coefficients and squared norms of b*_i."""
    n = len(rows)
    star = []
    mu = [[Fraction(0)] * n for _ in range(n)]
    B = []
    for i in range(n):
        v = [Fraction(x) for x in rows[i]]
        for j in range(i):
            mu[i][j] = _dot(rows[i], star[j]) / B[j]
            if mu[i][j]:
                v = [x - mu[i][j] * y for x, y in zip(v, star[j])]
        mu[i][i] = Fraction(1)
        star.append(v)
        B.append(_dot(v, v))
    return mu, B


def _check_basis(M: Matrix):
    if M.ring is not ZZ:
        raise TypeError("lattice bases must be integer matrices")
    if M.nrows and rank(M) != M.nrows:
        raise ValueError("input rows must be independent")


def lll_reduce(M: Matrix, delta=Fraction(3, 4)) -> Matrix:
    """LLL-reduce the rows of M at reduction parameter ``delta``."""
    delta = parse_delta(delta)
    _check_basis(M)
    b = [list(r) for r in M.rows]
    n = len(b)
    if n <= 1:
        return M
    mu, B = gram_schmidt(b)
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            r = round(mu[k][j])
            if r:
                b[k] = [x - r * y for x, y in zip(b[k], b[j])]
                for i in range(j + 1):
                    mu[k][i] -= r * mu[j][i]
        if B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, B = gram_schmidt(b)
            k = max(k - 1, 1)
    return Matrix(ZZ, b, M.ncols)


def is_size_reduced(M: Matrix) -> bool:
    mu, _ = gram_schmidt(M.rows)
    return all(abs(mu[i][j]) <= Fraction(1, 2)
               for i in range(M.nrows) for j in range(i))


def satisfies_lovasz(M: Matrix, delta) -> bool:
    delta = Fraction(delta)
    mu, B = gram_schmidt(M.rows)
    return all(B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]
               for k in range(1, M.nrows))


def squared_lengths(M: Matrix) -> list[int]:
    return [_dot(r, r) for r in M.rows]


def lattice_equal(a: Matrix, b: Matrix) -> bool:
    """Do the rows of a and b generate the same integer lattice?"""
    if a.ring is not ZZ or b.ring is not ZZ:
        raise TypeError("lattice comparison needs integer matrices")
    if a.ncols != b.ncols:
        raise ValueError("column counts differ")
    return hnf(a).H.nonzero_rows() == hnf(b).H.nonzero_rows()


def triangular_form(M: Matrix) -> Matrix:
    """Order rows by leading column and make each leading entry positive.

    Rows are only permuted and negated, so lengths and the lattice are kept.
    """
    def lead(r):
        return next((j for j, x in enumerate(r) if x), len(r))

    rows = []
    for r in M.rows:
        j = lead(r)
        rows.append(tuple(-x for x in r) if j < len(r) and r[j] < 0 else tuple(r))
    rows.sort(key=lambda r: (lead(r), [-abs(x) if x else 0 for x in r],
                             [-x for x in r]))
    return Matrix(ZZ, rows, M.ncols)
