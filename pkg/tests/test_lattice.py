from fractions import Fraction

import pytest

from operadlab import targets as T
from operadlab.arith import ZZ
from operadlab.lattice import (is_size_reduced, lattice_equal, lll_reduce, parse_delta,
                               satisfies_lovasz, squared_lengths, triangular_form)
from operadlab.linalg import Matrix, rowspace_saturation_basis


def test_printed_n2_reduces_to_length_three():
    R = lll_reduce(T.N2_MATRIX, Fraction(9, 10))
    assert squared_lengths(R) == [3] * 6
    assert triangular_form(R) == T.N3_MATRIX


def test_computed_saturation_reduces_to_length_three():
    sat = rowspace_saturation_basis(T.P_MATRIX)
    R = lll_reduce(sat, Fraction(9, 10))
    assert sorted(squared_lengths(R)) == [3] * 6
    assert lattice_equal(R, T.N3_MATRIX)


def test_orthogonal_basis_is_fixed():
    M = Matrix(ZZ, [[2, 0], [0, 3]])
    assert lll_reduce(M) == M


def test_shear_is_undone():
    R = lll_reduce(Matrix(ZZ, [[1, 0], [4, 1]]))
    assert sorted(squared_lengths(R)) == [1, 1]
    assert is_size_reduced(R) and satisfies_lovasz(R, Fraction(3, 4))


def test_lattice_equality():
    assert lattice_equal(Matrix(ZZ, [[1, 0], [0, 1]]), Matrix(ZZ, [[1, 1], [0, 1]]))
    assert not lattice_equal(Matrix(ZZ, [[2, 0], [0, 1]]), Matrix(ZZ, [[1, 0], [0, 1]]))
    with pytest.raises(ValueError):
        lattice_equal(Matrix(ZZ, [[1]]), Matrix(ZZ, [[1, 0]]))


def test_dependent_rows_rejected():
    with pytest.raises(ValueError, match="independent"):
        lll_reduce(Matrix(ZZ, [[1, 2], [2, 4]]))


@pytest.mark.parametrize("bad", [Fraction(1, 4), Fraction(0), Fraction(11, 10), 2])
def test_delta_range(bad):
    with pytest.raises(ValueError):
        parse_delta(bad)
    assert parse_delta(1) == 1


def test_triangular_form_keeps_rows_up_to_sign():
    M = Matrix(ZZ, [[0, -1, 1], [-1, 0, 2]])
    F = triangular_form(M)
    assert F == Matrix(ZZ, [[1, 0, -2], [0, 1, -1]])
    assert lattice_equal(F, M)
