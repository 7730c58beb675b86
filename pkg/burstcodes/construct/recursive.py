"""
recursive.py - the recursive 0/1 matrices P_{k,r} and the systematic
generators (I_k P_{k,n-k}) built from them.
"""

from typing import Union

from .data_classes.code import Code
from ..gf.field import PrimeField, as_field
from ..linalg.matrix import Matrix
from ..linalg.operations import hconcat, identity, vconcat


def p_matrix(k: int, r: int, field: Union[PrimeField, int]) -> Matrix:
    """
    The k x r matrix P_{k,r}:

        (I_r over P_{k-r,r})   if r < k
        I_k                    if r = k
        (I_k  P_{k,r-k})       if r > k

    The recursion follows the subtractive Euclidean algorithm on (k, r). It is
    unwound with an explicit stack, so skewed shapes such as (1, 10000) do not
    hit the recursion limit. Entries are 0/1 in every field.

    Params:
        k (int): Number of rows, k >= 1.
        r (int): Number of columns, r >= 1.
        field (Union[PrimeField, int]): The field (or prime) to build over.

    Returns:
        Matrix: P_{k,r}.
    """
    if k < 1 or r < 1:
        raise ValueError(f"p_matrix needs k, r >= 1, got k={k}, r={r}.")
    fld = as_field(field)
    steps = []
    while k != r:
        if r < k:
            steps.append(("stack", r))
            k -= r
        else:
            steps.append(("append", k))
            r -= k
    P = identity(k, fld)
    for kind, size in reversed(steps):
        if kind == "stack":
            P = vconcat(identity(size, fld), P)
        else:
            P = hconcat(identity(size, fld), P)
    return P


def generator_recursive(k: int, n: int, field: Union[PrimeField, int]) -> Code:
    """
    The good systematic generator (I_k P_{k,n-k}), or I_k when n = k.

    Params:
        k (int): Dimension, 1 <= k.
        n (int): Length, k <= n.
        field (Union[PrimeField, int]): The field (or prime) to build over.

    Returns:
        Code: The code, with provenance "recursive".
    """
    if not 1 <= k <= n:
        raise ValueError(f"generator_recursive needs 1 <= k <= n, got k={k}, n={n}.")
    fld = as_field(field)
    if n == k:
        G = identity(k, fld)
    else:
        G = hconcat(identity(k, fld), p_matrix(k, n - k, fld))
    return Code(G=G, provenance="recursive")
