"""Randomized invariants, each run on 1000 generated cases."""
from fractions import Fraction
from itertools import product

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from operadlab.arith import QQq, ZZ, Poly
from operadlab.lattice import (is_size_reduced, lattice_equal, lll_reduce,
                               satisfies_lovasz)
from operadlab.linalg import (Matrix, determinant, hnf, hnf_with_transform,
                              in_row_module, in_row_space, nullspace_basis)
from operadlab.morphisms import expand_polarized, polarize
from operadlab.operad import (PERMS, SO1_PLAIN, SO1_POLAR, SO2, Relation,
                              perm_act, perm_compose, perm_sign)

CASES = settings(max_examples=1000, deadline=None,
                 suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])


def _frac_rank(rows) -> int:
    """Plain Gaussian elimination over Q; independent of the HNF code."""
    a = [[Fraction(x) for x in r] for r in rows]
    r = 0
    ncols = len(a[0]) if a else 0
    for j in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][j]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(len(a)):
            if i != r and a[i][j]:
                f = a[i][j] / a[r][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def _coordinates(rows, w):
    """Coefficients expressing w in independent rows, by elimination on the transpose."""
    m, n = len(rows), len(w)
    a = [[Fraction(rows[i][j]) for i in range(m)] + [Fraction(w[j])] for j in range(n)]
    piv = []
    r = 0
    for j in range(m):
        p = next(i for i in range(r, n) if a[i][j])
        a[r], a[p] = a[p], a[r]
        a[r] = [x / a[r][j] for x in a[r]]
        for i in range(n):
            if i != r and a[i][j]:
                f = a[i][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv.append(r)
        r += 1
    return [a[i][m] for i in piv]


def _mat_vec_zero(rows, v) -> bool:
    return all(sum(x * y for x, y in zip(r, v)) == 0 for r in rows)


@st.composite
def int_matrices(draw, max_rows=6, max_cols=8, bound=5):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
                         min_size=m, max_size=m))
    return Matrix(ZZ, rows, n)


small_fracs = st.fractions(min_value=-3, max_value=3, max_denominator=3)
polys = st.lists(small_fracs, max_size=3).map(Poly)


@st.composite
def poly_matrices(draw, max_rows=3, max_cols=4):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(polys, min_size=n, max_size=n), min_size=m, max_size=m))
    return Matrix(QQq, rows, n)


@st.composite
def unimodular_ops(draw, ring, m):
    """A list of elementary row operations invertible over ``ring``."""
    ops = []
    if m == 1:
        unit = draw(st.sampled_from([-1, 1]) if ring is ZZ
                    else small_fracs.filter(bool))
        return [("scale", 0, 0, unit)]
    for _ in range(draw(st.integers(0, 8))):
        i, j = draw(st.integers(0, m - 1)), draw(st.integers(0, m - 1))
        kind = draw(st.sampled_from(["add", "swap", "scale"]))
        if kind == "add" and i != j:
            k = draw(st.integers(-3, 3)) if ring is ZZ else draw(polys)
            ops.append(("add", i, j, k))
        elif kind == "swap":
            ops.append(("swap", i, j, None))
        elif kind == "scale":
            unit = draw(st.sampled_from([-1, 1]) if ring is ZZ else small_fracs.filter(bool))
            ops.append(("scale", i, j, unit))
    return ops


def _apply_ops(M: Matrix, ops) -> Matrix:
    ring = M.ring
    rows = [list(r) for r in M.rows]
    for kind, i, j, k in ops:
        if kind == "add":
            rows[i] = [x + ring.convert(k) * y for x, y in zip(rows[i], rows[j])]
        elif kind == "swap":
            rows[i], rows[j] = rows[j], rows[i]
        else:
            rows[i] = [x * k for x in rows[i]]
    return Matrix(ring, rows, M.ncols)


# -- HNF ----------------------------------------------------------------------

@CASES
@given(st.data())
def test_hnf_canonical_under_integer_row_mixing(data):
    M = data.draw(int_matrices())
    ops = data.draw(unimodular_ops(ZZ, M.nrows))
    assert hnf(_apply_ops(M, ops)).H == hnf(M).H


@CASES
@given(st.data())
def test_hnf_canonical_under_polynomial_row_mixing(data):
    M = data.draw(poly_matrices())
    ops = data.draw(unimodular_ops(QQq, M.nrows))
    assert hnf(_apply_ops(M, ops)).H == hnf(M).H


@CASES
@given(int_matrices())
def test_integer_transform_is_unimodular(M):
    res = hnf_with_transform(M)
    assert res.U @ M == res.H
    assert abs(determinant(res.U)) == 1
    assert hnf(res.H).H == res.H
    assert res.rank == _frac_rank(M.rows)


@CASES
@given(poly_matrices())
def test_polynomial_transform_has_constant_determinant(M):
    res = hnf_with_transform(M)
    assert res.U @ M == res.H
    d = determinant(res.U)
    assert d and d.degree == 0
    assert hnf(res.H).H == res.H


# -- LLL ----------------------------------------------------------------------

@CASES
@given(int_matrices(max_rows=5, max_cols=6, bound=9),
       st.sampled_from([Fraction(3, 4), Fraction(9, 10), Fraction(99, 100), Fraction(1, 2)]))
def test_lll_certificates(M, delta):
    assume(_frac_rank(M.rows) == M.nrows)
    R = lll_reduce(M, delta)
    assert R.shape == M.shape
    assert lattice_equal(R, M)
    assert is_size_reduced(R)
    assert satisfies_lovasz(R, delta)


# -- S3 action ----------------------------------------------------------------

spaces = st.sampled_from([SO1_PLAIN, SO1_POLAR, SO2])


@st.composite
def sym_relations(draw):
    space = draw(spaces)
    coeffs = draw(st.lists(st.integers(-4, 4), min_size=space.dim, max_size=space.dim))
    return Relation(space, ZZ, tuple(coeffs))


@CASES
@given(sym_relations(), st.sampled_from(PERMS), st.sampled_from(PERMS))
def test_action_composes(r, sigma, tau):
    assert r.act(sigma).act(tau) == r.act(perm_compose(tau, sigma))
    assert r.act("abc") == r


@CASES
@given(spaces, st.data(), st.sampled_from(PERMS), st.sampled_from(PERMS))
def test_monomial_signs_multiply(space, data, sigma, tau):
    m = space.monomial(data.draw(st.integers(0, space.dim - 1)))
    first = perm_act(sigma, m)
    second = perm_act(tau, first.monomial)
    both = perm_act(perm_compose(tau, sigma), m)
    assert second.monomial == both.monomial
    assert first.sign * second.sign == both.sign
    assert perm_sign(perm_compose(tau, sigma)) == perm_sign(tau) * perm_sign(sigma)


# -- polarization -------------------------------------------------------------

@CASES
@given(st.lists(st.integers(-10, 10), min_size=12, max_size=12),
       st.lists(polys, min_size=12, max_size=12))
def test_polarize_round_trip_is_four(zc, pc):
    for r in (Relation(SO1_PLAIN, ZZ, tuple(zc)), Relation(SO1_PLAIN, QQq, tuple(pc))):
        assert expand_polarized(polarize(r)) == r.scale(4)


# -- kernels and membership vs brute force -----------------------------------

@CASES
@given(int_matrices(bound=3))
def test_kernel_matches_brute_force(M):
    K = nullspace_basis(M)
    n = M.ncols
    assert K.nrows == n - _frac_rank(M.rows)
    assert all(_mat_vec_zero(M.rows, k) for k in K.rows)
    HK = hnf(K).H
    box = 1 if n > 5 else 2
    for v in product(range(-box, box + 1), repeat=n):
        if _mat_vec_zero(M.rows, v):
            assert in_row_module(HK, v)


@CASES
@given(int_matrices(bound=4), st.data())
def test_membership_matches_brute_force(M, data):
    H = hnf(M).H
    coefs = data.draw(st.lists(st.integers(-2, 2), min_size=M.nrows, max_size=M.nrows))
    v = [sum(c * r[j] for c, r in zip(coefs, M.rows)) for j in range(M.ncols)]
    assert in_row_module(H, v)
    assert in_row_space(M, v)
    w = data.draw(st.lists(st.integers(-3, 3), min_size=M.ncols, max_size=M.ncols))
    in_span = _frac_rank(list(M.rows) + [w]) == _frac_rank(M.rows)
    assert in_row_space(M, w) == in_span
    if not in_span:
        assert not in_row_module(H, w)
    if in_span and _frac_rank(M.rows) == M.nrows:
        c = _coordinates(M.rows, w)
        assert in_row_module(H, w) == all(x.denominator == 1 for x in c)
