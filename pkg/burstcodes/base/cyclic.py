"""
cyclic.py - 1-based cyclic interval arithmetic shared by goodness checks and the codec.
"""

from typing import Tuple


def cyclic_interval(start: int, length: int, n: int) -> Tuple[int, ...]:
    """
    Positions start, start+1, ..., start+length-1 taken cyclically in 1..n.

    Params:
        start (int): 1-based first position.
        length (int): Number of positions, 0 <= length <= n.
        n (int): Word length.

    Returns:
        Tuple[int, ...]: The 1-based positions in order.
    """
    if not 1 <= start <= n:
        raise ValueError(f"start must be in 1..{n}, got {start}.")
    if not 0 <= length <= n:
        raise ValueError(f"length must be in 0..{n}, got {length}.")
    return tuple((start - 1 + t) % n + 1 for t in range(length))


def as_cyclic_interval(positions, n: int):
    """
    Recognise a set of positions as a single cyclic interval.

    Params:
        positions: 1-based positions.
        n (int): Word length.

    Returns:
        Tuple[int, int] | None: (start, length) if the positions form one cyclic
        interval, (1, 0) for the empty set, None otherwise.
    """
    pos = set(positions)
    if not pos:
        return (1, 0)
    if len(pos) == n:
        return (1, n)
    # the interval starts at the unique position whose predecessor is missing
    starts = [q for q in pos if ((q - 2) % n) + 1 not in pos]
    if len(starts) != 1:
        return None
    return (starts[0], len(pos))
