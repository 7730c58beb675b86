"""
extension.py - add a single column to a good matrix so that it stays good.

For a good k x n matrix M = (m_0 ... m_{n-1}) and each i = k-1, ..., 0, let b_i
be the normalised vector orthogonal to the k-1 columns

    m_{n-i}, ..., m_{n-1}, m_0, ..., m_{k-i-2}

that sit around the new column in its i-th window. (M x) is good exactly when
(x, b_i) != 0 for every i. The b_i are independent, so x = B^{-1} lambda for
each lambda with all coordinates nonzero, giving (q-1)^k extension columns.
"""

from itertools import product
from typing import Sequence, Union

import numpy as np

from .data_classes.code import Code
from .extenders import _as_matrix, _require_good
from ..base.base_list import BaseList
from ..base.limits import LIMITS
from ..gf.field import PrimeField, as_field
from ..linalg.elimination import inverse, nullspace_vector, solve
from ..linalg.matrix import Matrix
from ..linalg.operations import hconcat, identity, vconcat
from ..exceptions.Exceptions import (
    DimensionMismatchError,
    LimitExceededError,
    NotBinaryError,
    ZeroScalarError,
)


def _neighbour_positions(i: int, k: int, n: int) -> list:
    # 1-based positions of m_{n-i}, ..., m_{n-1}, m_0, ..., m_{k-i-2}
    return list(range(n - i + 1, n + 1)) + list(range(1, k - i))


def extension_basis(G: Union[Matrix, Code]) -> Matrix:
    """
    The k x k matrix B whose row i (0-based) is b_i.

    Raises:
        NotGoodError: If G is not good.
    """
    G = _as_matrix(G)
    _require_good(G, "extension_basis")
    k, n = G.rows, G.cols
    rows = {}
    for i in range(k - 1, -1, -1):
        neighbours = G.select_columns(_neighbour_positions(i, k, n)).transpose()
        rows[i] = nullspace_vector(neighbours).transpose()
    B = rows[0]
    for i in range(1, k):
        B = vconcat(B, rows[i])
    return B


def _check_lambda(lam: Sequence, G: Matrix) -> list:
    lam = [int(v) % G.p for v in lam]
    if len(lam) != G.rows:
        raise DimensionMismatchError(f"Need {G.rows} values of lambda, got {len(lam)}.")
    if any(v == 0 for v in lam):
        raise ZeroScalarError("Every lambda_i must be nonzero.")
    return lam


def extension_column(G: Union[Matrix, Code], lam: Sequence = None) -> Matrix:
    """
    The column x with (x, b_i) = lambda_i for every i, so that (G x) is good.

    Params:
        G (Union[Matrix, Code]): A good k x n matrix.
        lam (Sequence): k nonzero field values. Defaults to all ones.

    Returns:
        Matrix: x as a k x 1 column.
    """
    G = _as_matrix(G)
    lam = _check_lambda([1] * G.rows if lam is None else lam, G)
    return solve(extension_basis(G), lam)


def extension_columns(G: Union[Matrix, Code], enumerate_limit: int = None) -> BaseList:
    """
    Every column x for which (G x) is good, in lexicographic order of lambda.

    Params:
        G (Union[Matrix, Code]): A good k x n matrix.
        enumerate_limit (int): Refuse to list more than this many columns.
            Defaults to LIMITS["default_enumerate_limit"].

    Returns:
        BaseList[Matrix]: (q-1)^k columns, each k x 1.

    Raises:
        LimitExceededError: If (q-1)^k exceeds enumerate_limit.
        NotGoodError: If G is not good.
    """
    G = _as_matrix(G)
    limit = LIMITS["default_enumerate_limit"] if enumerate_limit is None else enumerate_limit
    k, p = G.rows, G.p
    count = (p - 1) ** k
    if count > limit:
        raise LimitExceededError(
            f"{count} extension columns exceed the enumeration limit of {limit}."
        )
    B_inv = inverse(extension_basis(G))
    lambdas = np.array(list(product(range(1, p), repeat=k)), dtype=np.int64)
    xs = (B_inv.entries @ lambdas.T) % p
    return BaseList(Matrix(xs[:, t : t + 1], G.field) for t in range(xs.shape[1]))


def unique_binary_extension(G: Union[Matrix, Code]) -> Matrix:
    """
    The only column x over Z_2 for which (G x) is good.

    Raises:
        NotBinaryError: If G is not over Z_2.
        NotGoodError: If G is not good.
    """
    G = _as_matrix(G)
    if G.p != 2:
        raise NotBinaryError(
            f"unique_binary_extension needs a matrix over Z_2, got {G.field}."
        )
    return extension_column(G)


def generator_column_extended(k: int, n: int, field: Union[PrimeField, int]) -> Code:
    """
    Grow I_k to a k x n matrix one column at a time, each time appending
    extension_column(G) (lambda = all ones). Every prefix of at least k
    columns is good by construction.

    Returns:
        Code: The code, with provenance "column-extended".
    """
    if not 1 <= k <= n:
        raise ValueError(
            f"generator_column_extended needs 1 <= k <= n, got k={k}, n={n}."
        )
    fld = as_field(field)
    G = identity(k, fld)
    for _ in range(n - k):
        G = hconcat(G, extension_column(G))
    return Code(G=G, provenance="column-extended")
