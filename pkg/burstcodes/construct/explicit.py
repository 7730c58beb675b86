"""
explicit.py - the explicit binomial matrices Q_{k,r} over Z_p, the binary
doubling matrices M_m, and the prefix-good generators (I_k Q_{k,n-k}).
"""

from typing import Union

import numpy as np

from .data_classes.code import Code
from ..base.limits import LIMITS
from ..gf.binomial import binom_mod_p
from ..gf.field import PrimeField, as_field
from ..linalg.matrix import Matrix
from ..linalg.operations import block, hconcat, identity, zeros
from ..exceptions.Exceptions import SizeCapError


def q_exponent(p: int, k: int, r: int) -> int:
    """
    The smallest m >= 0 with p^m >= k and p^m >= r.
    """
    m, size = 0, 1
    while size < k or size < r:
        m += 1
        size *= p
    return m


def q_matrix(p: Union[int, PrimeField], k: int, r: int) -> Matrix:
    """
    The k x r matrix Q_{k,r} over Z_p with

        Q_{k,r}(i, j) = C(p^m - k + i - 1, j - 1) mod p,   1 <= i <= k, 1 <= j <= r,

    where m = q_exponent(p, k, r). Q_{k,r} is the lower left k x r corner of
    Q_{p^m,p^m}, so Q_{k,r+1} is Q_{k,r} with one more column.

    Params:
        p (Union[int, PrimeField]): The prime (or its field).
        k (int): Rows, k >= 1.
        r (int): Columns, r >= 1.
    """
    if k < 1 or r < 1:
        raise ValueError(f"q_matrix needs k, r >= 1, got k={k}, r={r}.")
    fld = as_field(p)
    top = fld.p ** q_exponent(fld.p, k, r) - k
    return Matrix.from_rows(
        [
            [binom_mod_p(top + i - 1, j - 1, fld).value for j in range(1, r + 1)]
            for i in range(1, k + 1)
        ],
        fld,
    )


def m_matrix(m: int) -> Matrix:
    """
    The binary 2^m x 2^m matrix M_m:

        M_1 = ( 1 0 )      M_{m+1} = ( M_m  0   )
              ( 1 1 )                ( M_m  M_m )

    Raises:
        SizeCapError: If m exceeds LIMITS["max_m_exponent"].
    """
    if m < 1:
        raise ValueError(f"m_matrix needs m >= 1, got {m}.")
    if m > LIMITS["max_m_exponent"]:
        raise SizeCapError(
            f"M_{m} would be {2**m}x{2**m}; the limit is m <= {LIMITS['max_m_exponent']}."
        )
    Z2 = PrimeField(2)
    M = Matrix.from_rows([[1, 0], [1, 1]], Z2)
    for _ in range(m - 1):
        M = block([[M, zeros(M.rows, M.cols, Z2)], [M, M]])
    return M


def generator_explicit(p: Union[int, PrimeField], k: int, n: int) -> Code:
    """
    The generator (I_k Q_{k,n-k}), or I_k when n = k. Every prefix of j >= k
    columns is itself a good k x j matrix.

    Params:
        p (Union[int, PrimeField]): The prime (or its field).
        k (int): Dimension, 1 <= k.
        n (int): Length, k <= n.

    Returns:
        Code: The code, with provenance "explicit".
    """
    if not 1 <= k <= n:
        raise ValueError(f"generator_explicit needs 1 <= k <= n, got k={k}, n={n}.")
    fld = as_field(p)
    if n == k:
        G = identity(k, fld)
    else:
        G = hconcat(identity(k, fld), q_matrix(fld, k, n - k))
    return Code(G=G, provenance="explicit")
