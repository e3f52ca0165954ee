"""Published matrices and relations that the computations are checked against.

Matrix rows are typed in exactly as displayed; relations are built from
trees so that their vectors follow this package's basis conventions.
"""
from __future__ import annotations

from .arith import QQq, ZZ, q
from .linalg import Matrix
from .operad import (O1, O2, SO1_POLAR, SO2, Relation, gt, jordan, lie, lt,
                     mul)

a, b, c = "a", "b", "c"

DEND_MATRIX = Matrix(ZZ, [
    [1, 0, 0, 0, -1, -1, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, -1],
    [0, 0, 1, 0, 0, 0, -1, 0],
])

TWISTED_DEND_MATRIX = Matrix(ZZ, [
    [1, 0, 0, 0, 1, 1, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, 1, 0],
])

DIAS_KERNEL = Matrix(ZZ, [
    [1, 0, 0, 0, -1, 0, 0, 0],
    [1, 0, 0, 0, 0, -1, 0, 0],
    [0, 1, 0, -1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, -1],
    [0, 0, 1, 0, 0, 0, -1, 0],
])

P_MATRIX = Matrix(ZZ, [
    [1, 0, 1, 1, 0, 1, 1, 0, -1, 1, 0, -1],
    [0, 1, -1, 0, 1, 1, 0, 1, 1, 0, 1, -1],
    [-1, 1, 0, 1, 1, 0, -1, -1, 0, 1, -1, 0],
    [0, -1, 1, 0, 1, 1, 0, 1, 1, 0, -1, 1],
    [1, -1, 0, 1, 1, 0, -1, -1, 0, -1, 1, 0],
    [-1, 0, -1, 1, 0, 1, 1, 0, -1, -1, 0, 1],
])

N2_MATRIX = Matrix(ZZ, [
    [-1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, -1, 0, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 1, 0],
    [0, -1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1],
])

N3_MATRIX = Matrix(ZZ, [
    [1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 1, -1, 0],
    [0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, -1, -1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, -1, 0, 1, 0, 0, 0],
])


def _qmat(rows) -> Matrix:
    return Matrix.from_rows(QQq, rows)


DEFORMED_HNF = _qmat([
    [q, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1],
    [0, q, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1],
    [0, 0, q, 0, 0, 0, 0, 0, 0, 1, -1, 0],
    [0, 0, 0, 1, 0, 0, 0, -1, -1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, -1, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0],
])

_J = [1, -1, -1, 1, 1, -1, 1, -1, -1, 1, 1, -1]
_A1 = [1, q, 1, -1, -q, -1, 1, q, 1, -1, -q, -1]
_A2 = [-1, -1, -q, q, 1, 1, -1, -1, -q, q, 1, 1]
_D = [1, -1, 1, -1, 1, 1, 1, -1, 1, -1, 1, 1]

# displayed as 4x12 arrays, entry k of the 48-vector at row i, column j, k = 12i + j
SPLIT_DISPLAYS = (
    _qmat([_J, _J, [-x for x in _J], [-x for x in _J]]),
    _qmat([_A1, _A1, _A2, _A2]),
    _qmat([_D, _D, [-x for x in _D], [-x for x in _D]]),
)


def display_to_vector(display: Matrix) -> tuple:
    return tuple(x for r in display.rows for x in r)


_ = 0
_FIG_TOP = [
    [1, _, _, _, _, 1],
    [_, 1, _, _, -1, 1],
    [_, _, 1, _, 1, _],
    [_, _, _, 1, 1, -1],
    [_, _, _, _, q + 3, _],
    [_, _, _, _, _, q + 3],
]
_FIG_B1_MID = [
    [-1, _, _, _, _, -1],
    [_, -1, _, _, 1, -1],
    [_, _, -1, _, -1, _],
    [_, _, _, -1, -1, 1],
    [q - 1, -q + 1, _, -q + 1, -q - 3, q - 1],
    [_, -q + 1, q - 1, -q + 1, q - 1, -q - 3],
]
_FIG_B2_MID = [
    [1, _, _, _, _, 1],
    [_, 1, _, _, -1, 1],
    [_, _, 1, _, 1, _],
    [_, _, _, 1, 1, -1],
    [_, _, _, _, q + 3, _],
    [_, _, _, _, _, q + 3],
]
_FIG_LAST = [
    [-1, _, _, _, _, -1],
    [_, -1, _, _, 1, -1],
    [_, _, -1, _, -1, _],
    [_, _, _, -1, -1, 1],
    [q - 1, -q + 1, _, -q + 1, -q - 3, q - 1],
    [_, -q + 1, q - 1, -q + 1, q - 1, -q - 3],
]

FIGURE_BLOCK_HNFS = (
    _qmat([t + m + l for t, m, l in zip(_FIG_TOP, _FIG_B1_MID, _FIG_LAST)]),
    _qmat([t + m + l for t, m, l in zip(_FIG_TOP, _FIG_B2_MID, _FIG_LAST)]),
    _qmat([t + m for t, m in zip(_FIG_TOP, _FIG_B1_MID)]),
)


# -- relations --------------------------------------------------------------

def associator() -> Relation:
    return Relation.from_terms(O1, ZZ, [(1, mul(mul(a, b), c)), (-1, mul(a, mul(b, c)))])


def polarized_associator() -> Relation:
    return Relation.from_terms(SO1_POLAR, ZZ, [
        (1, lie(lie(a, b), c)), (1, lie(lie(b, c), a)),
        (1, lie(jordan(a, b), c)), (1, lie(jordan(b, c), a)),
        (1, jordan(lie(a, b), c)), (-1, jordan(lie(b, c), a)),
        (1, jordan(jordan(a, b), c)), (-1, jordan(jordan(b, c), a)),
    ])


def polarized_basis_relations() -> list[Relation]:
    """The six three-term relations read off the reduced lattice basis."""
    L, J = lie, jordan
    terms = [
        [(1, L(L(a, b), c)), (-1, L(L(a, c), b)), (1, L(L(b, c), a))],
        [(1, L(L(a, c), b)), (1, J(J(a, b), c)), (-1, J(J(b, c), a))],
        [(1, L(L(b, c), a)), (1, J(J(a, b), c)), (-1, J(J(a, c), b))],
        [(1, L(J(a, b), c)), (1, L(J(a, c), b)), (1, L(J(b, c), a))],
        [(1, L(J(a, b), c)), (-1, J(L(a, c), b)), (-1, J(L(b, c), a))],
        [(1, L(J(a, c), b)), (-1, J(L(a, b), c)), (1, J(L(b, c), a))],
    ]
    return [Relation.from_terms(SO1_POLAR, ZZ, t) for t in terms]


def associator_relation() -> Relation:
    """(a o b) o c - a o (b o c) - [[c,a],b]."""
    return Relation.from_terms(SO1_POLAR, ZZ, [
        (1, jordan(jordan(a, b), c)), (-1, jordan(a, jordan(b, c))),
        (-1, lie(lie(c, a), b)),
    ])


def derivation_relation() -> Relation:
    """[a o b, c] - [a,c] o b - a o [b,c]."""
    return Relation.from_terms(SO1_POLAR, ZZ, [
        (1, lie(jordan(a, b), c)), (-1, jordan(lie(a, c), b)),
        (-1, jordan(a, lie(b, c))),
    ])


def deformed_relations() -> list[Relation]:
    """Jacobi, the q-deformed associator relation and the derivation relation."""
    L, J = lie, jordan
    return [
        Relation.from_terms(SO1_POLAR, QQq, [
            (1, L(L(a, b), c)), (-1, L(L(a, c), b)), (1, L(L(b, c), a))]),
        Relation.from_terms(SO1_POLAR, QQq, [
            (q, L(L(a, c), b)), (1, J(J(a, b), c)), (-1, J(J(b, c), a))]),
        Relation.from_terms(SO1_POLAR, QQq, [
            (1, L(J(a, b), c)), (-1, J(L(a, c), b)), (-1, J(L(b, c), a))]),
    ]


def poisson_relations() -> list[Relation]:
    L, J = lie, jordan
    return [
        Relation.from_terms(SO1_POLAR, QQq, [
            (1, L(L(a, b), c)), (1, L(L(b, c), a)), (1, L(L(c, a), b))]),
        Relation.from_terms(SO1_POLAR, QQq, [
            (1, J(J(a, b), c)), (-1, J(J(b, c), a))]),
        Relation.from_terms(SO1_POLAR, QQq, [
            (1, L(J(a, b), c)), (-1, J(L(a, c), b)), (-1, J(a, L(b, c)))]),
    ]


def _so2(terms) -> Relation:
    return Relation.from_terms(SO2, QQq, terms)


def _deformed_tail(o, i):
    """(q-1)[ a o (c i b) - b o (a i c) + b o (c i a) - c o (a i b) ]."""
    return [
        (q - 1, o(a, i(c, b))), (-(q - 1), o(b, i(a, c))),
        (q - 1, o(b, i(c, a))), (-(q - 1), o(c, i(a, b))),
    ]


def deformed_dendriform_relations() -> list[Relation]:
    k = q + 3
    return [
        _so2([(k, lt(gt(a, b), c)), (-k, gt(a, lt(b, c)))] + _deformed_tail(gt, lt)),
        _so2([(k, gt(lt(a, b), c)), (k, gt(gt(a, b), c)), (-k, gt(a, gt(b, c)))]
             + _deformed_tail(gt, gt)),
        _so2([(k, lt(lt(a, b), c)), (-k, lt(a, lt(b, c))), (-k, lt(a, gt(b, c)))]
             + _deformed_tail(lt, lt) + _deformed_tail(lt, gt)),
    ]


def deformed_diassociative_relations() -> list[Relation]:
    k = q + 3
    return [
        _so2([(k, lt(gt(a, b), c)), (-k, gt(a, lt(b, c)))] + _deformed_tail(gt, lt)),
        _so2([(k, gt(gt(a, b), c)), (-k, gt(a, gt(b, c)))] + _deformed_tail(gt, gt)),
        _so2([(k, lt(lt(a, b), c)), (-k, lt(a, gt(b, c)))] + _deformed_tail(lt, gt)),
        _so2([(1, gt(lt(a, b), c)), (-1, gt(gt(a, b), c))]),
        _so2([(1, lt(a, lt(b, c))), (-1, lt(a, gt(b, c)))]),
    ]


def nonsymmetric_relations(M: Matrix, ring=QQq) -> list[Relation]:
    """Rows of an 8-column matrix as O2 relations, lifted to SO2 (word abc)."""
    out = []
    for r in M.rows:
        coeffs = [ring.zero] * SO2.dim
        for t, x in enumerate(r):
            coeffs[6 * t] = ring.convert(x)
        out.append(Relation(SO2, ring, tuple(coeffs)))
    return out


def dendriform_o2() -> list[Relation]:
    return [Relation(O2, ZZ, r) for r in DEND_MATRIX.rows]


def diassociative_o2() -> list[Relation]:
    return [Relation(O2, ZZ, r) for r in DIAS_KERNEL.rows]
