"""
lemmas.py - the small square matrices whose invertibility makes the explicit
construction work. They are exposed as test oracles.

V_b and W_b are the blocks that show up in the windows of (I_k Q_{k,r});
S and T are the unimodular matrices used to reduce them by induction on b.
"""

from typing import Union

from ..gf.binomial import binom_int
from ..gf.field import PrimeField, as_field
from ..linalg.integer_matrix import IntegerMatrix
from ..linalg.matrix import Matrix
from ..exceptions.Exceptions import PreconditionViolatedError


def lemma_v_matrix(n0: int, b: int) -> IntegerMatrix:
    """
    The integer b x b matrix V_b(i, j) = C(n0 + i - 1, j - 1). It is
    unimodular for every n0 >= 0, so it is invertible mod every prime.

    Entries stay exact integers; call .reduce(p) for the residues.
    """
    if n0 < 0 or b < 1:
        raise PreconditionViolatedError(f"lemma_v_matrix needs n0 >= 0, b >= 1, got n0={n0}, b={b}.")
    return IntegerMatrix(
        tuple(
            tuple(binom_int(n0 + i - 1, j - 1) for j in range(1, b + 1))
            for i in range(1, b + 1)
        )
    )


def lemma_w_integer_matrix(p: int, m: int, a: int, b: int) -> IntegerMatrix:
    """
    The integer b x b matrix W_b(i, j) = C(p^m - 1 + i - b, a + j - 1).

    Raises:
        PreconditionViolatedError: If a + b > p^m, a < 0 or b < 1.
    """
    p = as_field(p).p
    if a < 0 or b < 1 or m < 0:
        raise PreconditionViolatedError(f"lemma_w_matrix needs a >= 0, b >= 1, m >= 0, got a={a}, b={b}, m={m}.")
    if a + b > p**m:
        raise PreconditionViolatedError(
            f"lemma_w_matrix needs a + b <= p^m, got {a} + {b} > {p}^{m}."
        )
    top = p**m - 1 - b
    return IntegerMatrix(
        tuple(
            tuple(binom_int(top + i, a + j - 1) for j in range(1, b + 1))
            for i in range(1, b + 1)
        )
    )


def lemma_w_matrix(p: Union[int, PrimeField], m: int, a: int, b: int) -> Matrix:
    """
    W_b reduced mod p. It is invertible over Z_p whenever a + b <= p^m,
    although its integer determinant need not be +-1.
    """
    fld = as_field(p)
    return lemma_w_integer_matrix(fld.p, m, a, b).reduce(fld)


def lemma_s_matrix(b: int) -> IntegerMatrix:
    """
    b x b: 1 on the diagonal, -1 directly below it. Its inverse is the
    lower-triangular all-ones matrix.
    """
    if b < 1:
        raise PreconditionViolatedError(f"lemma_s_matrix needs b >= 1, got {b}.")
    return IntegerMatrix(
        tuple(
            tuple(1 if i == j else (-1 if i == j + 1 else 0) for j in range(1, b + 1))
            for i in range(1, b + 1)
        )
    )


def lemma_t_matrix(b: int) -> IntegerMatrix:
    """
    b x b: 1 on the diagonal and directly above it. Its inverse is
    (-1)^(j-i) on and above the diagonal, 0 below.
    """
    if b < 1:
        raise PreconditionViolatedError(f"lemma_t_matrix needs b >= 1, got {b}.")
    return IntegerMatrix(
        tuple(
            tuple(1 if (i == j or i == j - 1) else 0 for j in range(1, b + 1))
            for i in range(1, b + 1)
        )
    )
