"""
operations.py - structural matrix manipulations used by every construction.

Ranges and positions are 1-based and inclusive.
"""

from typing import Sequence, Tuple, Union

import numpy as np

from .matrix import Matrix
from ..gf.field import FieldElement, PrimeField, as_field
from ..exceptions.Exceptions import (
    DimensionMismatchError,
    FieldMismatchError,
    IndexRangeError,
    ZeroScalarError,
)


def identity(k: int, field: Union[PrimeField, int]) -> Matrix:
    """
    I_k over the field. identity(0, ...) is the empty 0x0 matrix.
    """
    if k < 0:
        raise ValueError(f"identity needs k >= 0, got {k}.")
    return Matrix(np.eye(k, dtype=np.int64), as_field(field))


def zeros(rows: int, cols: int, field: Union[PrimeField, int]) -> Matrix:
    return Matrix(np.zeros((rows, cols), dtype=np.int64), as_field(field))


def ones(rows: int, cols: int, field: Union[PrimeField, int]) -> Matrix:
    return Matrix(np.ones((rows, cols), dtype=np.int64), as_field(field))


def transpose(M: Matrix) -> Matrix:
    return M.transpose()


def matmul(A: Matrix, B: Matrix) -> Matrix:
    return A @ B


def _check_fields(A: Matrix, B: Matrix) -> None:
    if A.field != B.field:
        raise FieldMismatchError(
            f"Cannot concatenate matrices over {A.field} and {B.field}."
        )


def hconcat(A: Matrix, B: Matrix) -> Matrix:
    """
    (A B): B placed to the right of A.
    """
    _check_fields(A, B)
    if A.rows != B.rows:
        raise DimensionMismatchError(
            f"hconcat needs equal row counts, got {A.rows} and {B.rows}."
        )
    return Matrix(np.hstack([A.entries, B.entries]), A.field)


def vconcat(A: Matrix, B: Matrix) -> Matrix:
    """
    A stacked on top of B.
    """
    _check_fields(A, B)
    if A.cols != B.cols:
        raise DimensionMismatchError(
            f"vconcat needs equal column counts, got {A.cols} and {B.cols}."
        )
    return Matrix(np.vstack([A.entries, B.entries]), A.field)


def block(blocks: Sequence[Sequence[Matrix]]) -> Matrix:
    """
    Assemble a block matrix from a grid of matrices over one field.
    """
    assembled = None
    for blocks_row in blocks:
        row = blocks_row[0]
        for right in blocks_row[1:]:
            row = hconcat(row, right)
        assembled = row if assembled is None else vconcat(assembled, row)
    if assembled is None:
        raise DimensionMismatchError("block needs at least one row of blocks.")
    return assembled


def cyclic_shift_columns(M: Matrix, s: int) -> Matrix:
    """
    Rotate the columns s places to the right: column j of the result is
    column (j - s mod cols) of M.
    """
    if M.cols == 0:
        return M
    return Matrix(np.roll(M.entries, s % M.cols, axis=1), M.field)


def scale_columns(M: Matrix, c: Sequence[Union[FieldElement, int]]) -> Matrix:
    """
    Multiply column j of M by the nonzero scalar c_j.

    Raises:
        ZeroScalarError: If any c_j is zero.
    """
    if len(c) != M.cols:
        raise DimensionMismatchError(
            f"Need {M.cols} scalars, got {len(c)}."
        )
    scalars = []
    for j, cj in enumerate(c, start=1):
        if isinstance(cj, FieldElement):
            if cj.field != M.field:
                raise FieldMismatchError(
                    f"Scalar {j} is in {cj.field}, matrix is over {M.field}."
                )
            cj = cj.value
        cj = int(cj) % M.p
        if cj == 0:
            raise ZeroScalarError(f"Column {j} would be scaled by zero.")
        scalars.append(cj)
    return Matrix(M.entries * np.array(scalars, dtype=np.int64), M.field)


def submatrix(
    M: Matrix, row_range: Tuple[int, int], col_range: Tuple[int, int]
) -> Matrix:
    """
    The block of M spanning rows row_range[0]..row_range[1] and columns
    col_range[0]..col_range[1] (1-based, inclusive).

    Raises:
        IndexRangeError: If a range is empty or falls outside of M.
    """
    (r0, r1), (c0, c1) = row_range, col_range
    if not (1 <= r0 <= r1 <= M.rows):
        raise IndexRangeError(f"Row range {row_range} outside 1..{M.rows}.")
    if not (1 <= c0 <= c1 <= M.cols):
        raise IndexRangeError(f"Column range {col_range} outside 1..{M.cols}.")
    return Matrix(M.entries[r0 - 1 : r1, c0 - 1 : c1], M.field)


def lower_left(M: Matrix, rows: int, cols: int) -> Matrix:
    """
    The rows x cols block in the lower left corner of M.
    """
    return submatrix(M, (M.rows - rows + 1, M.rows), (1, cols))


def select_columns(M: Matrix, positions) -> Matrix:
    return M.select_columns(positions)


def is_systematic(M: Matrix) -> bool:
    """
    Whether the first M.rows columns form the identity.
    """
    k = M.rows
    if M.cols < k:
        return False
    return bool(np.array_equal(M.entries[:, :k], np.eye(k, dtype=np.int64)))
