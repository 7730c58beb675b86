from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st

from burstcodes.gf import PrimeField
from burstcodes.linalg import (
    Matrix,
    IntegerMatrix,
    identity,
    zeros,
    ones,
    transpose,
    rank,
    inverse,
    solve,
    nullspace_vector,
    nullspace_basis,
    row_reduce,
    hconcat,
    vconcat,
    block,
    cyclic_shift_columns,
    scale_columns,
    submatrix,
    lower_left,
    is_systematic,
)
from burstcodes.construct import m_matrix
from burstcodes.exceptions import (
    DimensionMismatchError,
    FieldMismatchError,
    IndexRangeError,
    NullspaceDimensionError,
    SingularMatrixError,
    ZeroScalarError,
)


@st.composite
def matrices(draw, primes=(2, 3, 5), max_rows=8, max_cols=8, square=False):
    p = draw(st.sampled_from(primes))
    rows = draw(st.integers(1, max_rows))
    cols = rows if square else draw(st.integers(1, max_cols))
    values = draw(st.lists(st.integers(0, p - 1), min_size=rows * cols, max_size=rows * cols))
    return Matrix(np.array(values, dtype=np.int64).reshape(rows, cols), PrimeField(p))


def M(rows, p):
    return Matrix.from_rows(rows, PrimeField(p))


# --- construction and access ---


def test_entries_reduced_and_read_only():
    A = M([[5, -1], [7, 3]], 5)
    assert A.to_list() == [[0, 4], [2, 3]]
    with pytest.raises(ValueError):
        A.entries[0, 0] = 1


def test_ragged_rows_rejected():
    with pytest.raises(DimensionMismatchError):
        M([[1, 0], [1]], 2)


def test_one_based_access():
    A = M([[1, 2, 3], [4, 0, 1]], 5)
    assert A.entry(2, 1).value == 4
    assert A.row(1).to_list() == [[1, 2, 3]]
    assert A.column(3).to_list() == [[3], [1]]
    assert A.select_columns([3, 1]).to_list() == [[3, 1], [1, 4]]
    with pytest.raises(IndexRangeError):
        A.entry(0, 1)
    with pytest.raises(IndexRangeError):
        A.select_columns([4])


def test_zero_row_matrix():
    Z = Matrix.from_rows([], PrimeField(3), cols=4)
    assert Z.shape == (0, 4)
    assert rank(Z) == 0
    assert len(nullspace_basis(Z)) == 4


def test_matrix_dict_round_trip():
    A = M([[1, 0, 2]], 3)
    assert Matrix.from_dict(A.to_dict()) == A


def test_field_mismatch_on_product():
    with pytest.raises(FieldMismatchError):
        identity(2, 2) @ identity(2, 3)


# --- identity / rank / inverse / solve ---


def test_identity_examples():
    assert identity(1, 2).to_list() == [[1]]
    assert identity(2, 3).to_list() == [[1, 0], [0, 1]]
    assert all(rank(identity(k, 5)) == k for k in range(1, 9))
    assert identity(3, 7).is_identity()


def test_rank_examples():
    assert rank(M([[1, 0], [1, 0]], 2)) == 1
    assert rank(m_matrix(1)) == 2
    assert rank(M([[2, 3], [1, 3]], 2)) == 2


def test_row_reduce_pivots_are_one_based():
    R, pivots = row_reduce(M([[0, 1, 1], [0, 1, 0]], 2))
    assert pivots == [2, 3]
    assert R.to_list() == [[0, 1, 0], [0, 0, 1]]


def test_inverse_examples():
    assert inverse(identity(4, 3)) == identity(4, 3)
    assert inverse(M([[0, 1], [1, 1]], 2)).to_list() == [[1, 1], [1, 0]]
    with pytest.raises(SingularMatrixError):
        inverse(M([[1, 0], [1, 0]], 2))
    with pytest.raises(DimensionMismatchError):
        inverse(M([[1, 0, 1]], 2))


def test_solve_examples():
    b = [1, 2, 0]
    assert solve(identity(3, 3), b).to_list() == [[1], [2], [0]]
    assert solve(M([[0, 1], [1, 1]], 2), [1, 0]).to_list() == [[1], [1]]
    with pytest.raises(SingularMatrixError):
        solve(M([[1, 1], [1, 1]], 3), [1, 0])


def test_galois_array_matches_entries():
    A = M([[1, 2, 3], [4, 0, 1]], 5)
    G = A.galois_array()
    assert type(G) is PrimeField(5).array_class
    assert Matrix.from_galois(G, A.field) == A


def test_linear_algebra_over_large_prime():
    p = 65521
    A = M([[3, 65520, 7], [0, 2, 65519], [11, 13, 1]], p)
    assert rank(A) == 3
    assert inverse(A) @ A == identity(3, p)
    x = solve(A, [1, 2, 3])
    assert (A @ x).to_list() == [[1], [2], [3]]
    assert rank(M([[1, 2], [2, 4]], p)) == 1
    assert nullspace_vector(M([[1, 2]], p)).to_list() == [[1], [(p - 1) // 2]]


def test_empty_systems():
    Z = Matrix.from_rows([], PrimeField(2), cols=0)
    assert inverse(Z) == Z
    assert row_reduce(Matrix.from_rows([], PrimeField(2), cols=3))[1] == []
    assert nullspace_basis(identity(3, 2)) == []


@given(matrices(square=True))
def test_rank_iff_invertible(A):
    n = A.rows
    if rank(A) == n:
        assert inverse(A) @ A == identity(n, A.field)
        assert A @ inverse(A) == identity(n, A.field)
    else:
        with pytest.raises(SingularMatrixError):
            inverse(A)


@given(matrices(square=True))
def test_solve_satisfies_system(A):
    b = Matrix.column_vector(list(range(A.rows)), A.field)
    if rank(A) == A.rows:
        assert A @ solve(A, b) == b
    else:
        with pytest.raises(SingularMatrixError):
            solve(A, b)


@given(matrices())
def test_transpose_properties(A):
    assert transpose(transpose(A)) == A
    assert rank(A) == rank(A.T)
    assert rank(A) <= min(A.shape)


# --- nullspace ---


def test_nullspace_vector_examples():
    assert nullspace_vector(M([[1, 0]], 2)).to_list() == [[0], [1]]
    assert nullspace_vector(M([[1, 0, 0], [0, 1, 0]], 2)).to_list() == [[0], [0], [1]]
    assert nullspace_vector(M([[1, 1]], 3)).to_list() == [[1], [2]]


def test_nullspace_vector_wrong_dimension():
    with pytest.raises(NullspaceDimensionError) as e:
        nullspace_vector(M([[1, 0, 0]], 2))
    assert e.value.dimension == 2
    with pytest.raises(NullspaceDimensionError):
        nullspace_vector(identity(3, 2))


@given(matrices())
def test_nullspace_basis_annihilates(A):
    basis = nullspace_basis(A)
    assert len(basis) == A.cols - rank(A)
    for x in basis:
        assert not x.is_zero()
        assert (A @ x).is_zero()


@given(matrices(max_rows=4, max_cols=5))
def test_nullspace_vector_is_normalised(A):
    if A.cols - rank(A) != 1:
        with pytest.raises(NullspaceDimensionError):
            nullspace_vector(A)
        return
    x = nullspace_vector(A)
    assert (A @ x).is_zero()
    first = next(v for v in x.entries.ravel() if v != 0)
    assert first == 1


# --- structure ---


def test_concat_examples():
    assert hconcat(identity(2, 2), identity(2, 2)).to_list() == [[1, 0, 1, 0], [0, 1, 0, 1]]
    assert vconcat(identity(1, 2), identity(1, 2)).to_list() == [[1], [1]]
    P56 = hconcat(identity(5, 2), ones(5, 1, 2))
    assert P56.shape == (5, 6)
    assert P56.column(6).to_list() == [[1]] * 5
    with pytest.raises(DimensionMismatchError):
        hconcat(identity(2, 2), identity(3, 2))
    with pytest.raises(DimensionMismatchError):
        vconcat(identity(2, 2), identity(3, 2))


def test_block_assembles_grid():
    I = identity(1, 3)
    Z = zeros(1, 1, 3)
    assert block([[I, Z], [I, I]]).to_list() == [[1, 0], [1, 1]]


def test_cyclic_shift_examples():
    A = M([[1, 2, 3]], 5)
    assert cyclic_shift_columns(A, 0) == A
    assert cyclic_shift_columns(A, 3) == A
    assert cyclic_shift_columns(A, 1).to_list() == [[3, 1, 2]]
    assert cyclic_shift_columns(A, -1).to_list() == [[2, 3, 1]]


@given(matrices(), st.integers(-20, 20))
def test_cyclic_shift_inverse(A, s):
    assert cyclic_shift_columns(cyclic_shift_columns(A, s), A.cols - s) == A


def test_scale_columns_examples():
    A = M([[1, 2], [2, 1]], 3)
    assert scale_columns(A, [1, 1]) == A
    assert scale_columns(A, [2, 1]).column(1).to_list() == [[2], [1]]
    B = M([[1, 0, 1]], 2)
    assert scale_columns(B, [1, 1, 1]) == B
    with pytest.raises(ZeroScalarError):
        scale_columns(B, [1, 0, 1])
    with pytest.raises(ZeroScalarError):
        scale_columns(A, [3, 1])


def test_submatrix_examples():
    A = M([[1, 2, 3], [4, 0, 1]], 5)
    assert submatrix(A, (1, 2), (1, 3)) == A
    assert submatrix(A, (2, 2), (2, 3)).to_list() == [[0, 1]]
    assert lower_left(m_matrix(1), 1, 1).to_list() == [[1]]
    assert lower_left(m_matrix(2), 2, 2) == m_matrix(1)
    with pytest.raises(IndexRangeError):
        submatrix(A, (0, 1), (1, 1))
    with pytest.raises(IndexRangeError):
        submatrix(A, (1, 3), (1, 1))


def test_is_systematic():
    assert is_systematic(M([[1, 0, 1], [0, 1, 1]], 2))
    assert not is_systematic(M([[0, 1, 1], [1, 0, 1]], 2))
    assert not is_systematic(M([[1, 0]], 2).T)


# --- integer matrices ---


def test_integer_matrix_determinant():
    assert IntegerMatrix(((2, 3), (1, 3))).determinant() == 3
    assert IntegerMatrix(((1, 2), (2, 4))).determinant() == 0
    assert IntegerMatrix(((0, 1), (1, 0))).determinant() == -1
    assert IntegerMatrix(((1, 1, 0), (0, 1, 1), (0, 0, 1))).determinant() == 1
    assert IntegerMatrix(((2, 0, 1), (1, 3, 2), (1, 1, 1))).determinant() == 0


def test_integer_matrix_inverses():
    W = IntegerMatrix(((2, 3), (1, 3)))
    assert not W.is_unimodular()
    assert W.integer_inverse() is None
    assert W.rational_inverse() == (
        (Fraction(1), Fraction(-1)),
        (Fraction(-1, 3), Fraction(2, 3)),
    )
    U = IntegerMatrix(((1, 0), (1, 1)))
    assert U.is_unimodular()
    assert U.integer_inverse() == IntegerMatrix(((1, 0), (-1, 1)))
    with pytest.raises(SingularMatrixError):
        IntegerMatrix(((1, 2), (2, 4))).rational_inverse()


def test_integer_matrix_reduce():
    W = IntegerMatrix(((2, 3), (1, 3)))
    assert W.reduce(2).to_list() == [[0, 1], [1, 1]]
    assert W[2, 1] == 1
    assert (W @ W.transpose())[1, 1] == 13
