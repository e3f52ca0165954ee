"""Arity-3 monomial bases, the S3 action, relation vectors and S3-modules.

Monomials are binary trees written as nested tuples ``(op, left, right)`` with
leaves ``'a'``, ``'b'``, ``'c'``.  Operation labels:

    ``'*'``       the single operation of the plain (unsplit) spaces
    ``'<'``, ``'>'``  the left and right dendriform operations
    ``'lie'``, ``'jordan'``  bracket and Jordan product of the polarized basis

A basis element of a symmetric space is an association type with its
argument slots filled positionally by a word (permutation) of ``abc``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .arith import QQq, ZZ, Poly, Ring
from .linalg import (HnfResult, Matrix, hnf, in_row_module, in_row_space,
                     rank)

__all__ = [
    "PERMS", "perm_sign", "perm_compose", "relabel", "Space", "SPACES",
    "O1", "O2", "SO1_PLAIN", "SO1_POLAR", "SO2", "Monomial", "SignedMonomial",
    "perm_act", "canonicalize_polar", "Relation", "s3_closure", "s3_module_hnf",
    "sort_rows_q_first", "extract_generators", "module_equal",
    "render_relation", "relations_matrix", "matrix_relations",
    "lie", "jordan", "mul", "lt", "gt",
]

PERMS = tuple("".join(p) for p in permutations("abc"))  # lex order
_LETTERS = "abc"


def lie(x, y):
    return ("lie", x, y)


def jordan(x, y):
    return ("jordan", x, y)


def mul(x, y):
    return ("*", x, y)


def lt(x, y):
    return ("<", x, y)


def gt(x, y):
    return (">", x, y)


def perm_sign(word: str) -> int:
    inv = sum(1 for i in range(3) for j in range(i + 1, 3) if word[i] > word[j])
    return -1 if inv % 2 else 1


def _perm_map(sigma: str) -> dict:
    return dict(zip(_LETTERS, sigma))


def perm_compose(sigma: str, tau: str) -> str:
    """The permutation x -> sigma(tau(x)), as a word."""
    s = _perm_map(sigma)
    return "".join(s[t] for t in tau)


def relabel(tree, sigma: str):
    """Substitute each leaf x by sigma(x)."""
    if isinstance(tree, str):
        return _perm_map(sigma)[tree]
    op, left, right = tree
    return (op, relabel(left, sigma), relabel(right, sigma))


def _leaves(tree) -> str:
    if isinstance(tree, str):
        return tree
    return _leaves(tree[1]) + _leaves(tree[2])


def _shape(tree, counter=None):
    if counter is None:
        counter = [0]
    if isinstance(tree, str):
        counter[0] += 1
        return counter[0] - 1
    return (tree[0], _shape(tree[1], counter), _shape(tree[2], counter))


def _fill(template, word: str):
    if isinstance(template, int):
        return word[template]
    op, left, right = template
    return (op, _fill(left, word), _fill(right, word))


def _left_comb(inner, outer):
    return (outer, (inner, 0, 1), 2)


def _right_comb(outer, inner):
    return (outer, 0, (inner, 1, 2))


class Space:
    """An ordered monomial basis of one fixed arity-3 space."""

    def __init__(self, name: str, templates, words, symmetric: bool):
        self.name = name
        self.templates = tuple(templates)
        self.words = tuple(words)
        self.symmetric = symmetric
        self.basis = tuple(_fill(t, w) for t in self.templates for w in self.words)
        self.dim = len(self.basis)
        self._index = {m: i for i, m in enumerate(self.basis)}
        self._type_of_shape = {t: k for k, t in enumerate(self.templates)}

    def __repr__(self):
        return f"<space {self.name} dim {self.dim}>"

    def index(self, type_: int, word: str) -> int:
        """Flat index of the monomial (0-based type, word)."""
        return type_ * len(self.words) + self.words.index(word)

    def monomial(self, k: int) -> "Monomial":
        t, w = divmod(k, len(self.words))
        return Monomial(self, t, self.words[w])

    def canonical(self, tree) -> tuple[int, int]:
        """Basis index and sign of a tree in this space."""
        if self is SO1_POLAR:
            sm = canonicalize_polar(tree)
            return sm.monomial.flat, sm.sign
        k = self._index.get(tree)
        if k is None:
            raise ValueError(f"{tree!r} is not a basis monomial of {self.name}")
        return k, 1

    def type_of(self, tree) -> int:
        return self._type_of_shape[_shape(tree)]


@dataclass(frozen=True)
class Monomial:
    space: Space
    type: int  # 0-based association type
    word: str

    @property
    def flat(self) -> int:
        return self.space.index(self.type, self.word)

    @property
    def tree(self):
        return _fill(self.space.templates[self.type], self.word)


@dataclass(frozen=True)
class SignedMonomial:
    monomial: Monomial
    sign: int


O1 = Space("O1", [_left_comb("*", "*"), _right_comb("*", "*")], ["abc"], False)
O2 = Space("O2", [_left_comb("<", "<"), _left_comb("<", ">"),
                  _left_comb(">", "<"), _left_comb(">", ">"),
                  _right_comb("<", "<"), _right_comb("<", ">"),
                  _right_comb(">", "<"), _right_comb(">", ">")], ["abc"], False)
SO1_PLAIN = Space("SO1_PLAIN", O1.templates, PERMS, True)
SO1_POLAR = Space("SO1_POLAR", [_left_comb("lie", "lie"), _left_comb("jordan", "lie"),
                                _left_comb("lie", "jordan"), _left_comb("jordan", "jordan")],
                  ["abc", "acb", "bca"], True)
SO2 = Space("SO2", O2.templates, PERMS, True)

SPACES = {s.name: s for s in (O1, O2, SO1_PLAIN, SO1_POLAR, SO2)}


def canonicalize_polar(tree) -> SignedMonomial:
    """Bring a bracket/Jordan tree to the polarized basis, tracking the sign."""
    if isinstance(tree, str) or len(tree) != 3:
        raise ValueError(f"malformed tree {tree!r}")
    if sorted(_leaves(tree)) != list(_LETTERS):
        raise ValueError(f"tree must use a, b, c once each: {tree!r}")
    op, left, right = tree
    for o in (op, *(t[0] for t in (left, right) if not isinstance(t, str))):
        if o not in ("lie", "jordan"):
            raise ValueError(f"unexpected operation {o!r} in polarized tree")
    sign = 1
    if isinstance(left, str):
        if isinstance(right, str):
            raise ValueError(f"malformed tree {tree!r}")
        left, right = right, left
        if op == "lie":
            sign = -sign
    elif not isinstance(right, str):
        raise ValueError(f"malformed tree {tree!r}")
    inner, x, y = left
    if not (isinstance(x, str) and isinstance(y, str)):
        raise ValueError(f"malformed tree {tree!r}")
    if x > y:
        x, y = y, x
        if inner == "lie":
            sign = -sign
    t = SO1_POLAR.templates.index(_left_comb(inner, op))
    return SignedMonomial(Monomial(SO1_POLAR, t, x + y + right), sign)


def perm_act(sigma: str, m: Monomial) -> SignedMonomial:
    """Relabel the arguments of m by sigma and renormalize."""
    if not m.space.symmetric:
        raise ValueError("no S3 action on nonsymmetric basis")
    tree = relabel(m.tree, sigma)
    if m.space is SO1_POLAR:
        return canonicalize_polar(tree)
    return SignedMonomial(Monomial(m.space, m.type, _leaves(tree)), 1)


# -- relations --------------------------------------------------------------

@dataclass(frozen=True)
class Relation:
    """Coefficient vector over a ring in the ordered basis of a space."""

    space: Space
    ring: Ring
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.space.dim:
            raise ValueError(f"width {len(self.coeffs)} does not match {self.space.name}")
        for x in self.coeffs:
            if not self.ring.contains(x):
                raise TypeError(f"coefficient {x!r} does not belong to {self.ring.name}")

    @classmethod
    def from_terms(cls, space: Space, ring: Ring, terms) -> "Relation":
        """Collect ``[(coefficient, tree), ...]`` onto the basis of ``space``."""
        c = [ring.zero] * space.dim
        for coef, tree in terms:
            k, s = space.canonical(tree)
            c[k] = c[k] + ring.convert(coef) * s
        return cls(space, ring, tuple(c))

    @classmethod
    def from_vector(cls, space: Space, ring: Ring, values) -> "Relation":
        return cls(space, ring, tuple(ring.convert(x) for x in values))

    @classmethod
    def zero(cls, space: Space, ring: Ring) -> "Relation":
        return cls(space, ring, (ring.zero,) * space.dim)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "Relation") -> "Relation":
        self._check(other)
        return Relation(self.space, self.ring,
                        tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Relation") -> "Relation":
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, s) -> "Relation":
        return Relation(self.space, self.ring, tuple(x * s for x in self.coeffs))

    def _check(self, other):
        if other.space is not self.space or other.ring is not self.ring:
            raise ValueError("relations live in different spaces or rings")

    def act(self, sigma: str) -> "Relation":
        """Apply a permutation of the arguments to every term."""
        c = [self.ring.zero] * self.space.dim
        for k, x in enumerate(self.coeffs):
            if x:
                sm = perm_act(sigma, self.space.monomial(k))
                c[sm.monomial.flat] = c[sm.monomial.flat] + x * sm.sign
        return Relation(self.space, self.ring, tuple(c))

    def orbit(self) -> list["Relation"]:
        return [self.act(s) for s in PERMS]

    def to_dict(self) -> dict:
        return {"space": self.space.name, "ring": self.ring.name,
                "coeffs": [self.ring.format(x) for x in self.coeffs]}

    def render(self, unicode: bool = False) -> str:
        return render_relation(self, unicode=unicode)


def relations_matrix(relations, space: Space | None = None, ring: Ring | None = None) -> Matrix:
    relations = list(relations)
    if not relations:
        return Matrix(ring, [], space.dim)
    r0 = relations[0]
    for r in relations:
        r0._check(r)
    return Matrix(r0.ring, [r.coeffs for r in relations], r0.space.dim)


def matrix_relations(M: Matrix, space: Space) -> list[Relation]:
    return [Relation(space, M.ring, r) for r in M.rows]


def s3_closure(generators) -> Matrix:
    """All six images of each generator, generator-major, permutations in lex order."""
    gens = list(generators)
    if not gens:
        raise ValueError("no generators")
    for g in gens:
        gens[0]._check(g)
        if not g.space.symmetric:
            raise ValueError("no S3 action on nonsymmetric basis")
    return relations_matrix([img for g in gens for img in g.orbit()])


def s3_module_hnf(generators) -> tuple[Matrix, HnfResult]:
    closure = s3_closure(generators)
    return closure, hnf(closure)


def _entry_key(x):
    if isinstance(x, Poly):
        return (x.degree, x.coeffs)
    return (0 if x == 0 else 1, x)


def sort_rows_q_first(M: Matrix) -> Matrix:
    """Rows containing q first, then fewer nonzero entries, then leading column."""
    def key(row):
        has_q = any(isinstance(x, Poly) and x.degree >= 1 for x in row)
        nnz = sum(1 for x in row if x)
        lead = next((j for j, x in enumerate(row) if x), len(row))
        return (not has_q, nnz, lead, tuple(_entry_key(x) for x in row))
    return Matrix(M.ring, sorted(M.rows, key=key), M.ncols)


def _module_contains(kept, r, mode):
    if not kept:
        return r.is_zero()
    closure, res = s3_module_hnf(kept)
    if mode == "field":
        return in_row_space(closure, r.coeffs)
    return in_row_module(res.H, r.coeffs)


def extract_generators(rows, minimize: bool = False, mode: str = "ring") -> list[int]:
    """Indices of a generating subset of ``rows`` for their S3-module.

    Forward pass keeps each row outside the module of the rows kept so far.
    With ``minimize``, a second pass drops every kept row whose omission
    leaves the generated module unchanged.
    """
    rows = list(rows)
    if mode not in ("ring", "field"):
        raise ValueError(f"unknown membership mode {mode!r}")
    kept: list[int] = []
    for i, r in enumerate(rows):
        if not _module_contains([rows[k] for k in kept], r, mode):
            kept.append(i)
    if minimize:
        for i in list(kept):
            rest = [k for k in kept if k != i]
            if rest and _module_contains([rows[k] for k in rest], rows[i], mode):
                kept = rest
    return kept


def module_equal(a, b, mode: str = "ring") -> bool:
    """Do two generator lists span the same S3-module?

    ``mode="ring"`` compares canonical HNFs over the relations' own ring;
    ``mode="field"`` compares spans over its fraction field (Q or Q(q)).
    """
    a, b = list(a), list(b)
    if not a or not b:
        raise ValueError("empty generator list")
    a[0]._check(b[0])
    if mode not in ("ring", "field"):
        raise ValueError(f"unknown membership mode {mode!r}")
    ca, ha = s3_module_hnf(a)
    cb, hb = s3_module_hnf(b)
    if mode == "field":
        if ca.ring is ZZ:
            # over Q the canonical HNF of a constant matrix is its reduced echelon form
            return hnf(ca.to_ring(QQq)).H.nonzero_rows() == hnf(cb.to_ring(QQq)).H.nonzero_rows()
        return ha.rank == hb.rank == rank(ca.vstack(cb))
    return ha.H.nonzero_rows() == hb.H.nonzero_rows()


# -- rendering --------------------------------------------------------------

_GLYPHS = {"<": "<", ">": ">", "jordan": " o "}
_UGLYPHS = {"<": "≺", ">": "≻", "jordan": " ∘ "}


def _render_tree(tree, glyphs, top=True) -> str:
    if isinstance(tree, str):
        return tree
    op, left, right = tree
    inside = op == "lie"
    l = _render_tree(left, glyphs, inside)
    r = _render_tree(right, glyphs, inside)
    if op == "lie":
        return f"[{l},{r}]"
    if op == "*":
        s = f"{l}{r}"
        return s if top else f"({s})"
    s = f"{l}{glyphs[op]}{r}"
    if op == "jordan" and top:
        return s
    return f"({s})"


def _coef_text(x, ring: Ring) -> tuple[int, str]:
    """Sign and magnitude text of a coefficient."""
    if isinstance(x, Poly):
        neg = x.lc < 0
        mag = -x if neg else x
        if mag == 1:
            return (-1 if neg else 1), ""
        text = ring.format(mag)
        if len(mag.coeffs) > 1 and sum(1 for c in mag.coeffs if c) > 1:
            text = f"({text})"
        elif mag.degree == 0 and mag.lc.denominator != 1:
            text = f"({text})"
        return (-1 if neg else 1), text + "*"
    neg = x < 0
    mag = -x if neg else x
    return (-1 if neg else 1), ("" if mag == 1 else f"{mag}*")


def render_relation(r: Relation, unicode: bool = False) -> str:
    glyphs = _UGLYPHS if unicode else _GLYPHS
    parts = []
    for k, x in enumerate(r.coeffs):
        if not x:
            continue
        sign, coef = _coef_text(x, r.ring)
        mono = _render_tree(r.space.basis[k], glyphs)
        if not parts:
            parts.append(("-" if sign < 0 else "") + coef + mono)
        else:
            parts.append((" - " if sign < 0 else " + ") + coef + mono)
    return "".join(parts) if parts else "0"
