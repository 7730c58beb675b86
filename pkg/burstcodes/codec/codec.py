"""
codec.py - systematic encoding, burst erasure and burst-erasure decoding for
codes with a good generator matrix.

Decoding uses the k unerased positions that immediately follow the burst
cyclically. For a good G those k columns form an invertible window.
"""

from typing import *

import numpy as np

from .data_classes.burst import ERASURE, BurstPattern, ReceivedWord
from ..base.cyclic import cyclic_interval
from ..construct.data_classes.code import Code
from ..gf.field import FieldElement, PrimeField, as_field
from ..goodness.checks import complement_positions
from ..linalg.elimination import nullspace_basis, solve
from ..linalg.matrix import Matrix
from ..exceptions.Exceptions import (
    BurstTooLongError,
    FieldMismatchError,
    InconsistentWordError,
    InternalSingularError,
    InvalidIndexSetError,
    MessageLengthError,
    PreconditionViolatedError,
    SingularMatrixError,
)

Word = Tuple[FieldElement, ...]


def _as_values(symbols: Sequence, fld: PrimeField, what: str) -> np.ndarray:
    values = []
    for q, s in enumerate(symbols, start=1):
        if isinstance(s, FieldElement):
            if s.field != fld:
                raise FieldMismatchError(f"{what} symbol {q} is in {s.field}, expected {fld}.")
            values.append(s.value)
        else:
            values.append(int(s) % fld.p)
    return np.array(values, dtype=np.int64)


def _to_word(values: np.ndarray, fld: PrimeField) -> Word:
    return tuple(FieldElement(int(v), fld) for v in values)


def encode(code: Code, message: Sequence) -> Word:
    """
    Encode a message u of length k as the codeword u G.

    For a systematic G the first k symbols of the codeword are u itself.

    Params:
        code (Code): The code to encode with.
        message (Sequence): k field elements (or ints, reduced mod p).

    Returns:
        Tuple[FieldElement, ...]: The n codeword symbols.

    Raises:
        MessageLengthError: If len(message) != k.
    """
    if len(message) != code.k:
        raise MessageLengthError(
            f"Message has {len(message)} symbols; the [{code.n},{code.k}] code needs {code.k}."
        )
    u = _as_values(message, code.field, "Message")
    return _to_word((u @ code.G.entries) % code.p, code.field)


def erase(
    codeword: Sequence, burst: BurstPattern, field: Union[PrimeField, int] = None
) -> ReceivedWord:
    """
    Replace the burst positions of a codeword by ERASURE.

    Params:
        codeword (Sequence): n FieldElements, or ints together with field.
        burst (BurstPattern): The burst to erase.
        field (Union[PrimeField, int]): Needed only when codeword holds plain ints.

    Raises:
        BurstTooLongError: If the burst does not fit in n positions.
        IndexRangeError: If the burst starts outside 1..n.
    """
    if field is None:
        first = next((s for s in codeword if isinstance(s, FieldElement)), None)
        if first is None:
            raise TypeError("erase needs a field when the codeword holds plain ints.")
        field = first.field
    fld = as_field(field)
    n = len(codeword)
    erased = set(burst.positions(n))
    symbols = tuple(
        ERASURE if q in erased else s for q, s in enumerate(codeword, start=1)
    )
    return ReceivedWord(symbols=symbols, field=fld)


def decoding_window(code: Code, burst: BurstPattern) -> Tuple[int, ...]:
    """
    The k positions the decoder reads: those right after the burst, or
    1..k when nothing is erased.

    Raises:
        BurstTooLongError: If the burst is longer than n - k.
    """
    n, k = code.n, code.k
    if burst.length > n - k:
        raise BurstTooLongError(
            f"Burst of length {burst.length} exceeds n - k = {n - k} for the [{n},{k}] code."
        )
    start = (burst.start - 1 + burst.length) % n + 1 if burst.length else 1
    return cyclic_interval(start, k, n)


def decode(code: Code, received: ReceivedWord) -> Tuple[Word, Word]:
    """
    Recover the codeword and message from a word with one erased burst.

    The decoder never reads an erased position. After solving for the
    message it re-encodes and checks every known symbol.

    Params:
        code (Code): The code the word was encoded with.
        received (ReceivedWord): The received word.

    Returns:
        Tuple[Word, Word]: (codeword, message).

    Raises:
        MessageLengthError: If the word length is not n.
        BurstTooLongError: If more than n - k symbols are erased.
        InternalSingularError: If the decoding window is singular, which a good G rules out.
        InconsistentWordError: If the known symbols are not those of any codeword.
    """
    if received.n != code.n:
        raise MessageLengthError(
            f"Received word has {received.n} symbols; the [{code.n},{code.k}] code needs {code.n}."
        )
    if received.field != code.field:
        raise FieldMismatchError(
            f"Received word is over {received.field}, the code is over {code.field}."
        )
    window = decoding_window(code, received.burst)
    y = [received.symbol(q).value for q in window]
    try:
        u = solve(code.G.select_columns(window).transpose(), y)
    except SingularMatrixError as e:
        raise InternalSingularError(
            f"Decoding window {list(window)} of a good generator is singular: {e}"
        )
    message = u.to_vector()
    codeword = encode(code, message)
    for q in received.known_positions:
        if codeword[q - 1] != received.symbol(q):
            raise InconsistentWordError(
                f"Position {q} holds {received.symbol(q)}, but the decoded codeword has {codeword[q - 1]}."
            )
    return codeword, message


def ambiguous_pair(G: Union[Code, Matrix], erased: Iterable[int]) -> Tuple[Word, Word]:
    """
    Two distinct codewords that agree outside the erased positions.

    Any [n,k] code has such a pair once more than n - k positions are erased,
    which is why n - k is the longest correctable burst. The pair returned is
    the zero word and u G for a nonzero u vanishing on the unerased columns.

    Raises:
        InvalidIndexSetError: If an erased position lies outside 1..n.
        PreconditionViolatedError: If at most n - k positions are erased.
    """
    if isinstance(G, Code):
        G = G.G
    k, n = G.rows, G.cols
    erased = tuple(sorted(set(erased)))
    outside = [q for q in erased if not 1 <= q <= n]
    if outside:
        raise InvalidIndexSetError(f"Erased positions {outside} are outside 1..{n}.")
    if len(erased) <= n - k:
        raise PreconditionViolatedError(
            f"ambiguous_pair needs more than n - k = {n - k} erasures, got {len(erased)}."
        )
    known = complement_positions(erased, n)
    basis = nullspace_basis(G.select_columns(known).transpose())
    u = basis[0].entries.ravel()
    zero = _to_word(np.zeros(n, dtype=np.int64), G.field)
    return zero, _to_word((u @ G.entries) % G.p, G.field)
