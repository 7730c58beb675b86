"""
checks.py - brute-force oracles for good matrices, prefix-goodness,
information sets, and burst-erasure decodability.

A k x n matrix is good when each of its n windows of k cyclically consecutive
columns has rank k. Windows are numbered by their 1-based start position and
always visited in increasing order.
"""

from itertools import product
from typing import Iterable, Tuple, Union

import numpy as np

from .data_classes.window_report import WindowReport
from ..base.base_list import BaseList
from ..base.cyclic import cyclic_interval
from ..base.limits import LIMITS
from ..linalg.elimination import rank
from ..linalg.matrix import Matrix
from ..linalg.operations import is_systematic
from ..exceptions.Exceptions import (
    DimensionMismatchError,
    InvalidIndexSetError,
    LimitExceededError,
    NotSystematicError,
)


def _require_wide(G: Matrix) -> None:
    if G.rows > G.cols:
        raise DimensionMismatchError(
            f"Goodness needs k <= n, got a {G.rows}x{G.cols} matrix."
        )


def _window(G: Matrix, start: int) -> WindowReport:
    k, n = G.rows, G.cols
    columns = cyclic_interval(start, k, n)
    r = rank(G.select_columns(columns))
    return WindowReport(window_start=start, columns=columns, rank=r, ok=r == k)


def window_reports(G: Matrix) -> BaseList:
    """
    Check every cyclic window of G.

    Params:
        G (Matrix): A k x n matrix with k <= n.

    Returns:
        BaseList[WindowReport]: One report per start position 1..n. Empty when k = 0.
    """
    _require_wide(G)
    if G.rows == 0:
        return BaseList()
    return BaseList(_window(G, start) for start in range(1, G.cols + 1))


def failing_windows(G: Matrix) -> BaseList:
    """
    Only the windows of G that are not of full rank.
    """
    return BaseList(r for r in window_reports(G) if not r.ok)


def is_good(G: Matrix, report: bool = False) -> Union[bool, Tuple[bool, BaseList]]:
    """
    Whether every k cyclically consecutive columns of G are independent.

    A 0 x n matrix is vacuously good.

    Params:
        G (Matrix): A k x n matrix with k <= n.
        report (bool): If True, return (ok, reports) with a WindowReport for
            every window instead of stopping at the first failure.

    Returns:
        Union[bool, Tuple[bool, BaseList[WindowReport]]]

    Raises:
        DimensionMismatchError: If k > n.
    """
    if report:
        reports = window_reports(G)
        return all(r.ok for r in reports), reports
    _require_wide(G)
    if G.rows == 0:
        return True
    return all(_window(G, start).ok for start in range(1, G.cols + 1))


def is_prefix_good(G: Matrix, k: int = None) -> bool:
    """
    Whether, for every j in [k, n], the j leftmost columns of G form a good matrix.

    Params:
        G (Matrix): A k x n matrix whose first k columns are I_k.
        k (int): The number of rows. Defaults to G.rows.

    Raises:
        NotSystematicError: If the first k columns of G are not I_k.
    """
    k = G.rows if k is None else k
    if k != G.rows:
        raise DimensionMismatchError(f"k={k} does not match a matrix with {G.rows} rows.")
    if not is_systematic(G):
        raise NotSystematicError("is_prefix_good needs the first k columns to be I_k.")
    return all(
        is_good(G.select_columns(range(1, j + 1))) for j in range(k, G.cols + 1)
    )


def is_information_set(G: Matrix, positions: Iterable[int]) -> bool:
    """
    Whether the columns of G at the given 1-based positions have rank k.

    Raises:
        InvalidIndexSetError: If the set does not have exactly k distinct
            positions in 1..n.
    """
    positions = list(positions)
    k, n = G.rows, G.cols
    if len(set(positions)) != len(positions):
        raise InvalidIndexSetError(f"Positions {positions} contain duplicates.")
    if len(positions) != k:
        raise InvalidIndexSetError(f"Need exactly {k} positions, got {len(positions)}.")
    if any(not 1 <= q <= n for q in positions):
        raise InvalidIndexSetError(f"Positions {positions} fall outside 1..{n}.")
    if k == 0:
        return True
    return rank(G.select_columns(sorted(positions))) == k


def complement_positions(positions: Iterable[int], n: int) -> Tuple[int, ...]:
    """
    {1..n} minus the given positions, in increasing order.
    """
    taken = set(positions)
    return tuple(q for q in range(1, n + 1) if q not in taken)


def burst_decodable_bruteforce(G: Matrix, limit: int = None) -> bool:
    """
    From-scratch erasure oracle: enumerate every message and check that no
    nonzero message encodes to a word that vanishes on the k positions left
    after any cyclic burst of n - k erasures. Two messages whose codewords
    agree outside a burst differ by such a message, so this is exactly unique
    decodability.

    Params:
        G (Matrix): A k x n generator matrix.
        limit (int): Largest p^k to enumerate. Defaults to LIMITS["default_enumerate_limit"].

    Raises:
        LimitExceededError: If p^k exceeds limit.
    """
    _require_wide(G)
    limit = LIMITS["default_enumerate_limit"] if limit is None else limit
    k, n, p = G.rows, G.cols, G.p
    if k == 0:
        return True
    if p**k > limit:
        raise LimitExceededError(f"{p}^{k} messages exceed the limit of {limit}.")
    messages = np.array(list(product(range(p), repeat=k)), dtype=np.int64)
    codewords = (messages @ G.entries) % p
    nonzero = messages.any(axis=1)
    for burst_start in range(1, n + 1):
        known = cyclic_interval((burst_start - 1 + n - k) % n + 1, k, n)
        vanishes = ~codewords[:, [q - 1 for q in known]].any(axis=1)
        if (vanishes & nonzero).any():
            return False
    return True
