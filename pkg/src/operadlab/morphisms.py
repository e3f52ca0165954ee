"""Maps between the arity-3 spaces: splitting, polarization, expansion,
the dendriform column partition and the Koszul sign twist."""
from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix
from .operad import (O1, O2, PERMS, SO1_PLAIN, SO1_POLAR, SO2, Relation,
                     perm_sign)

__all__ = [
    "split_expand", "polarize", "expand_polarized", "polarization_matrix",
    "ColumnPermutation", "DENDRIFORM_BLOCKS", "dendriform_xi", "dendriform_partition",
    "block_diagonal", "koszul_sign_twist", "twist_signs",
]

# association types (0-based) grouped by the dendriform relation they feed
DENDRIFORM_BLOCKS = ((0, 4, 5), (1, 3, 7), (2, 6))


def split_expand(r: Relation) -> Relation:
    """Replace the single operation by the sum of the left and right ones."""
    targets = {O1: O2, SO1_PLAIN: SO2}
    if r.space not in targets:
        raise ValueError(f"cannot split a relation in {r.space.name}")
    dst = targets[r.space]
    nw = len(r.space.words)
    c = [r.ring.zero] * dst.dim
    for k, x in enumerate(r.coeffs):
        if not x:
            continue
        t, w = divmod(k, nw)
        for t2 in range(4 * t, 4 * t + 4):
            c[t2 * nw + w] = x
    return Relation(dst, r.ring, tuple(c))


def _polar_terms(tree):
    # ab -> [a,b] + a o b at every node
    if isinstance(tree, str):
        return [tree]
    _, left, right = tree
    out = []
    for l in _polar_terms(left):
        for r in _polar_terms(right):
            out.append(("lie", l, r))
            out.append(("jordan", l, r))
    return out


def polarize(r: Relation) -> Relation:
    """Rewrite a plain relation in the polarized basis via ab = [a,b] + a o b."""
    if r.space not in (O1, SO1_PLAIN):
        raise ValueError(f"cannot polarize a relation in {r.space.name}")
    c = [r.ring.zero] * SO1_POLAR.dim
    for k, x in enumerate(r.coeffs):
        if not x:
            continue
        for tree in _polar_terms(r.space.basis[k]):
            j, s = SO1_POLAR.canonical(tree)
            c[j] = c[j] + x * s
    return Relation(SO1_POLAR, r.ring, tuple(c))


def _plain_terms(tree):
    # doubled convention: [x,y] -> xy - yx, x o y -> xy + yx
    if isinstance(tree, str):
        return [(1, tree)]
    op, left, right = tree
    s = -1 if op == "lie" else 1
    out = []
    for cl, l in _plain_terms(left):
        for cr, r in _plain_terms(right):
            out.append((cl * cr, ("*", l, r)))
            out.append((s * cl * cr, ("*", r, l)))
    return out


def expand_polarized(r: Relation) -> Relation:
    """Expand bracket and Jordan product into the plain symmetric basis.

    Uses [x,y] = xy - yx and x o y = xy + yx, so polarize followed by this
    map multiplies by 4.
    """
    if r.space is not SO1_POLAR:
        raise ValueError(f"cannot expand a relation in {r.space.name}")
    c = [r.ring.zero] * SO1_PLAIN.dim
    for k, x in enumerate(r.coeffs):
        if not x:
            continue
        for s, tree in _plain_terms(SO1_POLAR.basis[k]):
            j, _ = SO1_PLAIN.canonical(tree)
            c[j] = c[j] + x * s
    return Relation(SO1_PLAIN, r.ring, tuple(c))


def polarization_matrix(ring) -> Matrix:
    """12x12 matrix of ``polarize`` on the plain symmetric basis (rows = images)."""
    rows = []
    for k in range(SO1_PLAIN.dim):
        e = [ring.zero] * SO1_PLAIN.dim
        e[k] = ring.one
        rows.append(polarize(Relation(SO1_PLAIN, ring, tuple(e))).coeffs)
    return Matrix(ring, rows, SO1_POLAR.dim)


@dataclass(frozen=True)
class ColumnPermutation:
    """``order[k]`` is the original column placed at position k."""

    order: tuple

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError("not a bijection")

    @property
    def inverse(self) -> tuple:
        inv = [0] * len(self.order)
        for k, j in enumerate(self.order):
            inv[j] = k
        return tuple(inv)

    def apply(self, M: Matrix) -> Matrix:
        """Reorder the columns of M into permuted order."""
        return M.select_columns(self.order)

    def undo(self, M: Matrix) -> Matrix:
        """Bring columns in permuted order back to the original order."""
        return M.select_columns(self.inverse)

    def undo_vector(self, v) -> tuple:
        inv = self.inverse
        return tuple(v[inv[j]] for j in range(len(v)))


def _block_columns(block) -> list[int]:
    return [6 * t + p for t in block for p in range(6)]


def dendriform_xi() -> ColumnPermutation:
    return ColumnPermutation(tuple(j for b in DENDRIFORM_BLOCKS for j in _block_columns(b)))


def dendriform_partition(M: Matrix):
    """Split the 48 columns of M into the three dendriform blocks.

    Returns the three column blocks (widths 18, 18, 12) and the column
    permutation xi that places them side by side.
    """
    if M.ncols != SO2.dim:
        raise ValueError(f"expected {SO2.dim} columns, got {M.ncols}")
    blocks = [M.select_columns(_block_columns(b)) for b in DENDRIFORM_BLOCKS]
    return blocks, dendriform_xi()


def block_diagonal(blocks) -> Matrix:
    ring = blocks[0].ring
    width = sum(b.ncols for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        for r in b.rows:
            rows.append((ring.zero,) * offset + tuple(r)
                        + (ring.zero,) * (width - offset - b.ncols))
        offset += b.ncols
    return Matrix(ring, rows, width)


def twist_signs(width: int) -> tuple:
    """Column scale factors of the Koszul sign twist."""
    if width == O2.dim:
        return tuple(1 if t < 4 else -1 for t in range(8))
    if width == SO2.dim:
        return tuple(perm_sign(PERMS[p]) * (1 if t < 4 else -1)
                     for t in range(8) for p in range(6))
    raise ValueError(f"sign twist needs 8 or 48 columns, got {width}")


def koszul_sign_twist(M: Matrix, symmetric: bool | None = None) -> Matrix:
    """Negate second-parenthesization columns (and, when symmetric, scale by sgn)."""
    if symmetric is not None and symmetric != (M.ncols == SO2.dim):
        raise ValueError("width does not match the symmetric flag")
    signs = twist_signs(M.ncols)
    return Matrix(M.ring, [[x if s > 0 else -x for x, s in zip(r, signs)] for r in M.rows],
                  M.ncols)
