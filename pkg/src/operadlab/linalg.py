"""Dense exact matrices over Z or Q[q] and Hermite normal forms.

HNF convention (row style): nonzero rows first, strictly increasing pivot
columns, pivots positive (Z) or monic (Q[q]), and every entry above a pivot
reduced modulo that pivot (``[0, pivot)`` over Z, lower degree over Q[q]).
With this normalization the HNF of a row module is unique.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .arith import QQq, ZZ, Ring, ring_from_name

__all__ = [
    "Matrix", "HnfResult", "hnf", "hnf_with_transform", "rank", "nullspace_basis",
    "rowspace_saturation_basis", "membership_reduce", "in_row_module",
    "in_row_space", "specialize_matrix", "determinant", "pivot_columns",
]


class Matrix:
    """Immutable dense matrix whose entries all live in one ring."""

    __slots__ = ("ring", "rows", "nrows", "ncols")

    def __init__(self, ring: Ring, rows, ncols: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for a matrix without rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            for x in r:
                if not ring.contains(x):
                    raise TypeError(f"entry {x!r} does not belong to {ring.name}")
        self.ring = ring
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def from_rows(cls, ring: Ring, rows, ncols: int | None = None) -> "Matrix":
        """Build a matrix, explicitly converting each entry into ``ring``."""
        return cls(ring, [[ring.convert(x) for x in r] for r in rows], ncols)

    @classmethod
    def zeros(cls, ring: Ring, m: int, n: int) -> "Matrix":
        return cls(ring, [[ring.zero] * n for _ in range(m)], n)

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(n)]
                          for i in range(n)], n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return self.nrows

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.ring is other.ring and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ring.name, self.ncols, self.rows))

    def __repr__(self):
        return f"Matrix({self.ring.name}, {self.nrows}x{self.ncols})"

    def __str__(self):
        cells = [[self.ring.format(x) for x in r] for r in self.rows]
        if not cells:
            return f"[empty {self.nrows}x{self.ncols}]"
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, [tuple(r[j] for r in self.rows) for j in range(self.ncols)],
                      self.nrows)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def __matmul__(self, other: "Matrix") -> "Matrix":
        _same_ring(self, other)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        zero = self.ring.zero
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for x, y in zip(r, c):
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return Matrix(self.ring, out, other.ncols)

    def scale(self, s) -> "Matrix":
        return Matrix(self.ring, [[x * s for x in r] for r in self.rows], self.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        _same_ring(self, other)
        if self.ncols != other.ncols:
            raise ValueError("column counts differ")
        return Matrix(self.ring, self.rows + other.rows, self.ncols)

    def hstack(self, other: "Matrix") -> "Matrix":
        _same_ring(self, other)
        if self.nrows != other.nrows:
            raise ValueError("row counts differ")
        return Matrix(self.ring, [a + b for a, b in zip(self.rows, other.rows)],
                      self.ncols + other.ncols)

    def select_rows(self, idx) -> "Matrix":
        return Matrix(self.ring, [self.rows[i] for i in idx], self.ncols)

    def select_columns(self, idx) -> "Matrix":
        idx = list(idx)
        return Matrix(self.ring, [[r[j] for j in idx] for r in self.rows], len(idx))

    def nonzero_rows(self) -> "Matrix":
        return Matrix(self.ring, [r for r in self.rows if any(r)], self.ncols)

    def map(self, fn, ring: Ring | None = None) -> "Matrix":
        ring = ring or self.ring
        return Matrix(ring, [[fn(x) for x in r] for r in self.rows], self.ncols)

    def to_ring(self, ring: Ring) -> "Matrix":
        """Explicit ring coercion (Z -> Q[q], or constant integral Q[q] -> Z)."""
        return Matrix.from_rows(ring, self.rows, self.ncols)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def to_dict(self) -> dict:
        return {
            "ring": self.ring.name,
            "rows": self.nrows,
            "cols": self.ncols,
            "entries": [[self.ring.format(x) for x in r] for r in self.rows],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "Matrix":
        ring = ring_from_name(d["ring"])
        rows = [[ring.parse(s) for s in r] for r in d["entries"]]
        m = cls(ring, rows, int(d["cols"]))
        if m.nrows != int(d["rows"]):
            raise ValueError("row count does not match entries")
        return m

    @classmethod
    def from_json(cls, text: str) -> "Matrix":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for r in self.rows:
            w.writerow([self.ring.format(x) for x in r])
        return buf.getvalue()


def _same_ring(a: Matrix, b: Matrix):
    if a.ring is not b.ring:
        raise TypeError(f"ring mismatch: {a.ring.name} vs {b.ring.name}")


@dataclass(frozen=True)
class HnfResult:
    H: Matrix
    U: Matrix | None
    rank: int
    pivots: tuple


def _axpy(dst: list, src: list, k, start: int = 0):
    # dst -= k * src
    for t in range(start, len(dst)):
        s = src[t]
        if s:
            dst[t] = dst[t] - k * s


def _scale_row(row: list, u):
    for t in range(len(row)):
        if row[t]:
            row[t] = row[t] * u


def _row_weight(row) -> int:
    return sum(1 for x in row if x)


def _hnf(M: Matrix, with_transform: bool):
    ring = M.ring
    m, n = M.shape
    A = [list(r) for r in M.rows]
    U = ([[ring.one if i == j else ring.zero for j in range(m)] for i in range(m)]
         if with_transform else None)
    r = 0
    pivots = []
    for j in range(n):
        if r == m:
            break
        found = False
        while True:
            nz = [i for i in range(r, m) if A[i][j]]
            if not nz:
                break
            found = True
            # smallest Euclidean norm first, sparsest row as tie-break
            p = min(nz, key=lambda i: (ring.norm(A[i][j]), _row_weight(A[i]), i))
            if p != r:
                A[r], A[p] = A[p], A[r]
                if U is not None:
                    U[r], U[p] = U[p], U[r]
            piv = A[r][j]
            clean = True
            for i in range(r + 1, m):
                if A[i][j]:
                    k, _ = ring.divmod(A[i][j], piv)
                    _axpy(A[i], A[r], k, j)
                    if U is not None:
                        _axpy(U[i], U[r], k)
                    if A[i][j]:
                        clean = False
            if clean:
                break
        if not found:
            continue
        u = ring.normal_unit(A[r][j])
        if u != 1:
            _scale_row(A[r], u)
            if U is not None:
                _scale_row(U[r], u)
        piv = A[r][j]
        for i in range(r):
            if A[i][j]:
                k = ring.reduce(A[i][j], piv)
                if k:
                    _axpy(A[i], A[r], k, j)
                    if U is not None:
                        _axpy(U[i], U[r], k)
        pivots.append(j)
        r += 1
    H = Matrix(ring, A, n)
    Um = Matrix(ring, U, m) if U is not None else None
    return HnfResult(H, Um, r, tuple(pivots))


def hnf_with_transform(M: Matrix) -> HnfResult:
    """Hermite normal form H of M together with an invertible U, ``H = U @ M``."""
    if M.nrows == 0 or M.ncols == 0:
        raise ValueError("hnf of an empty matrix")
    return _hnf(M, True)


def hnf(M: Matrix) -> HnfResult:
    """Hermite normal form without accumulating the transform."""
    if M.nrows == 0:
        return HnfResult(M, None, 0, ())
    return _hnf(M, False)


def pivot_columns(H: Matrix) -> list[int]:
    out = []
    for r in H.rows:
        for j, x in enumerate(r):
            if x:
                out.append(j)
                break
    return out


def rank(M: Matrix) -> int:
    """Rank over the fraction field of the matrix's ring."""
    return hnf(M).rank


def nullspace_basis(M: Matrix) -> Matrix:
    """Rows spanning ``{v : M v^T = 0}`` over the ring of M.

    The last ``n - r`` rows of the transform bringing ``M^T`` to HNF.  Over Z
    they generate the whole integer kernel lattice.
    """
    n = M.ncols
    if M.nrows == 0:
        return Matrix.identity(M.ring, n)
    res = hnf_with_transform(M.transpose())
    return Matrix(M.ring, res.U.rows[res.rank:], n)


def rowspace_saturation_basis(M: Matrix) -> Matrix:
    """Z-basis of all integer vectors in the rational row space of M."""
    if M.ring is not ZZ:
        raise TypeError("saturation defined over Z only")
    return nullspace_basis(nullspace_basis(M))


def membership_reduce(H: Matrix, v) -> tuple:
    """Reduce v against the HNF rows of H; zero iff v lies in the row module."""
    ring = H.ring
    v = list(v)
    if len(v) != H.ncols:
        raise ValueError("width mismatch")
    for x in v:
        if not ring.contains(x):
            raise TypeError(f"entry {x!r} does not belong to {ring.name}")
    pivot_row = {}
    for i, r in enumerate(H.rows):
        for j, x in enumerate(r):
            if x:
                pivot_row[j] = i
                break
    for j in range(len(v)):
        if not v[j]:
            continue
        i = pivot_row.get(j)
        if i is None:
            break
        k, rem = ring.divmod(v[j], H.rows[i][j])
        if rem:
            break
        _axpy(v, H.rows[i], k, j)
    return tuple(v)


def in_row_module(H: Matrix, v) -> bool:
    return not any(membership_reduce(H, v))


def in_row_space(M: Matrix, v) -> bool:
    """Membership over the fraction field (rank test)."""
    base = rank(M)
    return rank(M.vstack(Matrix(M.ring, [tuple(v)], M.ncols))) == base


def specialize_matrix(M: Matrix, q0) -> Matrix:
    """Evaluate every entry at ``q = q0``; result is a constant Q[q] matrix."""
    if M.ring is not QQq:
        raise TypeError("specialization needs a Q[q] matrix")
    q0 = Fraction(q0)
    return M.map(lambda x: QQq.evaluate(x, q0))


def determinant(M: Matrix):
    """Fraction-free (Bareiss) determinant over Z or Q[q]."""
    if M.nrows != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    ring = M.ring
    n = M.nrows
    if n == 0:
        return ring.one
    A = [list(r) for r in M.rows]
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if not A[k][k]:
            sw = next((i for i in range(k + 1, n) if A[i][k]), None)
            if sw is None:
                return ring.zero
            A[k], A[sw] = A[sw], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                quo, rem = ring.divmod(num, prev)
                assert not rem, "Bareiss division not exact"
                A[i][j] = quo
        prev = A[k][k]
    d = A[n - 1][n - 1]
    return d if sign == 1 else -d
