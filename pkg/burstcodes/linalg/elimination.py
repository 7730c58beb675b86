"""
elimination.py - rank, inverse, solve and nullspace over Z_p.

The elimination itself runs on galois FieldArrays; this module keeps the
Matrix facade, 1-based pivot positions and the package's error types on top.
"""

from typing import List, Sequence, Tuple, Union

import numpy as np

from .matrix import Matrix
from ..exceptions.Exceptions import (
    DimensionMismatchError,
    NullspaceDimensionError,
    SingularMatrixError,
)


def _pivot_columns(reduced: np.ndarray) -> List[int]:
    """
    0-based pivot columns of an array already in reduced row echelon form.
    """
    pivots = []
    for row in reduced:
        nonzero = np.flatnonzero(row)
        if nonzero.size == 0:
            break
        pivots.append(int(nonzero[0]))
    return pivots


def row_reduce(M: Matrix) -> Tuple[Matrix, List[int]]:
    """
    Reduced row echelon form of M.

    Returns:
        Tuple[Matrix, List[int]]: The reduced matrix and its 1-based pivot columns.
    """
    if M.rows == 0 or M.cols == 0:
        return M, []
    reduced = Matrix.from_galois(M.galois_array().row_reduce(), M.field)
    return reduced, [c + 1 for c in _pivot_columns(reduced.entries)]


def rank(M: Matrix) -> int:
    """
    Row rank of M over its field.
    """
    if M.rows == 0 or M.cols == 0:
        return 0
    return int(np.linalg.matrix_rank(M.galois_array()))


def _require_square(M: Matrix, op: str) -> None:
    if M.rows != M.cols:
        raise DimensionMismatchError(
            f"{op} needs a square matrix, got {M.rows}x{M.cols}."
        )


def _require_nonsingular(M: Matrix, what: str) -> None:
    r = rank(M)
    if r != M.rows:
        raise SingularMatrixError(
            f"{M.rows}x{M.cols} {what} over {M.field} is singular (rank {r})."
        )


def inverse(M: Matrix) -> Matrix:
    """
    Inverse of a square matrix.

    Raises:
        SingularMatrixError: If M has no inverse over its field.
    """
    _require_square(M, "inverse")
    if M.rows == 0:
        return M
    _require_nonsingular(M, "matrix")
    return Matrix.from_galois(np.linalg.inv(M.galois_array()), M.field)


def _as_column(b: Union[Matrix, Sequence], M: Matrix) -> Matrix:
    if isinstance(b, Matrix):
        return b
    return Matrix.column_vector(b, M.field)


def solve(A: Matrix, b: Union[Matrix, Sequence]) -> Matrix:
    """
    The unique x with A x = b, for square nonsingular A.

    Params:
        A (Matrix): Square coefficient matrix.
        b (Union[Matrix, Sequence]): Right-hand side, a column Matrix or a sequence.

    Returns:
        Matrix: x as a column (or as many columns as b has).

    Raises:
        SingularMatrixError: If A is singular.
    """
    _require_square(A, "solve")
    b = _as_column(b, A)
    if b.field != A.field or b.rows != A.rows:
        raise DimensionMismatchError(
            f"Right-hand side {b.rows}x{b.cols} over {b.field} does not fit {A.rows}x{A.cols} over {A.field}."
        )
    if A.rows == 0:
        return b
    _require_nonsingular(A, "system")
    x = np.linalg.solve(A.galois_array(), b.galois_array())
    return Matrix.from_galois(x, A.field)


def nullspace_vector(A: Matrix) -> Matrix:
    """
    The generator of a one-dimensional nullspace, as a column.

    The result x satisfies A x = 0 and is scaled so that its first nonzero
    coordinate is 1, which makes it unique.

    Raises:
        NullspaceDimensionError: If the nullspace of A is not one-dimensional.
    """
    basis = nullspace_basis(A)
    if len(basis) != 1:
        raise NullspaceDimensionError(
            f"Nullspace of the {A.rows}x{A.cols} matrix has dimension {len(basis)}, expected 1.",
            dimension=len(basis),
        )
    x = basis[0].entries.ravel()
    lead = int(x[np.flatnonzero(x)[0]])
    return Matrix(((x * pow(lead, -1, A.p)) % A.p).reshape(-1, 1), A.field)


def nullspace_basis(A: Matrix) -> List[Matrix]:
    """
    A basis of the nullspace of A, one column per vector. The vectors are the
    rows of a matrix in reduced row echelon form.
    """
    cols = A.cols
    if cols == 0:
        return []
    if A.rows == 0:
        units = np.eye(cols, dtype=np.int64)
        return [Matrix(units[:, j : j + 1], A.field) for j in range(cols)]
    if rank(A) == cols:
        return []
    basis = Matrix.from_galois(A.galois_array().null_space(), A.field)
    return [basis.row(i).transpose() for i in range(1, basis.rows + 1)]
