"""
extenders.py - grow a good systematic matrix (I_k P) while keeping it good,
and build its dual.

extend_fixed_dimension keeps k and adds k columns; extend_fixed_redundancy
keeps n - k and adds n - k rows and columns.
"""

from typing import Union

from .data_classes.code import Code
from ..goodness.checks import failing_windows
from ..linalg.matrix import Matrix
from ..linalg.operations import block, hconcat, identity, is_systematic, zeros
from ..exceptions.Exceptions import NotGoodError, NotSystematicError


def _as_matrix(G: Union[Matrix, Code]) -> Matrix:
    return G.G if isinstance(G, Code) else G


def _require_systematic(G: Matrix, op: str) -> None:
    if G.rows < 1 or not is_systematic(G):
        raise NotSystematicError(f"{op} needs a matrix of the form (I_k P).")


def _require_good(G: Matrix, op: str) -> None:
    failing = failing_windows(G)
    if failing:
        raise NotGoodError(
            f"{op} needs a good matrix; windows {[w.window_start for w in failing]} are dependent.",
            failing_windows=failing,
        )


def extend_fixed_dimension(G: Union[Matrix, Code]) -> Matrix:
    """
    (I_k I_k P) from a good k x n matrix (I_k P). The result is a good
    k x (k + n) matrix: each of its windows is either k distinct unit vectors
    or a window of G.

    Raises:
        NotSystematicError: If G does not start with I_k.
        NotGoodError: If G is not good.
    """
    G = _as_matrix(G)
    _require_systematic(G, "extend_fixed_dimension")
    _require_good(G, "extend_fixed_dimension")
    return hconcat(identity(G.rows, G.field), G)


def extend_fixed_redundancy(G: Union[Matrix, Code]) -> Matrix:
    """
    The n x (2n - k) matrix

        ( I_r  0    I_r )
        ( 0    I_k  P   )

    from a good k x n matrix (I_k P), where r = n - k. G must be in systematic
    form; non-systematic good matrices are rejected rather than row-reduced.

    Raises:
        NotSystematicError: If G does not start with I_k.
        NotGoodError: If G is not good.
    """
    G = _as_matrix(G)
    _require_systematic(G, "extend_fixed_redundancy")
    _require_good(G, "extend_fixed_redundancy")
    k, n, fld = G.rows, G.cols, G.field
    r = n - k
    if r == 0:
        # (I_k) extends to itself
        return G
    P = G.select_columns(range(k + 1, n + 1))
    return block(
        [
            [identity(r, fld), zeros(r, k, fld), identity(r, fld)],
            [zeros(k, r, fld), identity(k, fld), P],
        ]
    )


def dual_generator(G: Union[Matrix, Code]) -> Matrix:
    """
    (-P^T I_{n-k}), the generator of the dual of the code generated by (I_k P).

    Negation is done in the field, so over Z_2 this is just (P^T I_{n-k}).
    For n = k the dual is the zero code and the result is a 0 x n matrix,
    which counts as good.

    Raises:
        NotSystematicError: If G does not start with I_k.
    """
    G = _as_matrix(G)
    _require_systematic(G, "dual_generator")
    k, n, fld = G.rows, G.cols, G.field
    if n == k:
        return Matrix.from_rows([], fld, cols=n)
    P = G.select_columns(range(k + 1, n + 1))
    return hconcat(-P.transpose(), identity(n - k, fld))


def redundancy_parity_check(G: Union[Matrix, Code]) -> Matrix:
    """
    H' = (-I_r  -P^T  I_r) for a good (I_k P) with r = n - k.

    H' is a full-rank parity-check matrix for extend_fixed_redundancy(G) and
    is itself good.

    Raises:
        NotSystematicError: If G does not start with I_k.
    """
    G = _as_matrix(G)
    _require_systematic(G, "redundancy_parity_check")
    k, n, fld = G.rows, G.cols, G.field
    r = n - k
    if r == 0:
        return Matrix.from_rows([], fld, cols=n)
    P = G.select_columns(range(k + 1, n + 1))
    return block([[-identity(r, fld), -P.transpose(), identity(r, fld)]])
