import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st

from burstcodes.gf import PrimeField
from burstcodes.construct import generator_recursive, generator_explicit
from burstcodes.codec import (
    ERASURE,
    Erasure,
    BurstPattern,
    ReceivedWord,
    encode,
    erase,
    decode,
    decoding_window,
    ambiguous_pair,
)
from burstcodes.exceptions import (
    BurstTooLongError,
    FieldMismatchError,
    InconsistentWordError,
    IndexRangeError,
    InputError,
    InvalidIndexSetError,
    MessageLengthError,
    NotABurstError,
    PreconditionViolatedError,
)


def values(word):
    return [s.value for s in word]


# --- data classes ---


def test_erasure_is_a_singleton():
    assert Erasure() is ERASURE
    assert str(ERASURE) == "?"
    assert repr(ERASURE) == "ERASURE"


def test_burst_pattern_validation():
    with pytest.raises(TypeError):
        BurstPattern(start=0, length=1)
    with pytest.raises(TypeError):
        BurstPattern(start=1, length=-1)
    with pytest.raises(BurstTooLongError):
        BurstPattern(start=1, length=4).positions(3)
    with pytest.raises(IndexRangeError):
        BurstPattern(start=4, length=1).positions(3)
    assert BurstPattern(start=2, length=0).positions(3) == ()
    assert BurstPattern.from_dict(BurstPattern(3, 2).to_dict()) == BurstPattern(3, 2)


def test_received_word_from_csv(Z3):
    word = ReceivedWord.from_csv("?,?,2,0", Z3)
    assert word.n == 4
    assert word.erased_positions == (1, 2)
    assert word.known_positions == (3, 4)
    assert word.burst == BurstPattern(1, 2)
    assert word.to_csv() == "?,?,2,0"
    assert word.to_dict() == {"p": 3, "symbols": [None, None, 2, 0]}
    assert ReceivedWord.from_dict(word.to_dict()) == word


def test_received_word_wrapping_burst(Z2):
    word = ReceivedWord.from_csv("?,1,0,?", Z2)
    assert word.burst == BurstPattern(4, 2)


def test_received_word_without_erasures(Z2):
    assert ReceivedWord.from_csv("1,0,1", Z2).burst == BurstPattern(1, 0)


@pytest.mark.parametrize("text", ["1,2,0", "1,x,0", "1,,0", "-1,0,0"])
def test_received_word_rejects_bad_tokens(text, Z2):
    with pytest.raises(InputError):
        ReceivedWord.from_csv(text, Z2)


def test_received_word_rejects_scattered_erasures(Z2):
    with pytest.raises(NotABurstError):
        ReceivedWord.from_csv("?,1,?,1,1", Z2)


def test_received_word_rejects_foreign_symbols(Z2, Z3):
    with pytest.raises(FieldMismatchError):
        ReceivedWord(symbols=(Z3(1), ERASURE), field=Z2)


# --- encode / erase ---


def test_encode_examples(code_3_2):
    assert values(encode(code_3_2, [1, 0])) == [1, 0, 1]
    assert values(encode(code_3_2, [1, 1])) == [1, 1, 0]
    assert values(encode(code_3_2, [0, 0])) == [0, 0, 0]


def test_encode_is_systematic(code_7_3):
    for u in ([1, 0, 0], [1, 1, 0], [0, 1, 1]):
        assert values(encode(code_7_3, u))[:3] == u


def test_encode_wrong_length(code_3_2):
    with pytest.raises(MessageLengthError):
        encode(code_3_2, [1])
    with pytest.raises(MessageLengthError):
        encode(code_3_2, [1, 0, 1])


def test_erase_wraps_around(Z2):
    received = erase([Z2(1), Z2(0), Z2(1), Z2(1), Z2(0)], BurstPattern(4, 3))
    assert received.erased_positions == (1, 4, 5)
    assert received.to_csv() == "?,0,1,?,?"


def test_erase_needs_field_for_plain_ints(Z5):
    with pytest.raises(TypeError):
        erase([1, 2, 3], BurstPattern(1, 1))
    assert erase([1, 2, 3], BurstPattern(2, 1), Z5).to_csv() == "1,?,3"


# --- decode ---


def test_decode_without_erasures(code_3_2, Z2):
    codeword, message = decode(code_3_2, ReceivedWord.from_csv("1,1,0", Z2))
    assert values(codeword) == [1, 1, 0]
    assert values(message) == [1, 1]


def test_decode_single_erasure(code_3_2, Z2):
    codeword, message = decode(code_3_2, ReceivedWord.from_csv("1,0,?", Z2))
    assert values(codeword) == [1, 0, 1]
    assert values(message) == [1, 0]


def test_decoding_window_follows_the_burst(code_7_3):
    assert decoding_window(code_7_3, BurstPattern(1, 0)) == (1, 2, 3)
    assert decoding_window(code_7_3, BurstPattern(2, 4)) == (6, 7, 1)
    assert decoding_window(code_7_3, BurstPattern(6, 3)) == (2, 3, 4)
    for start in range(1, 8):
        for length in range(0, 5):
            burst = BurstPattern(start, length)
            assert not set(decoding_window(code_7_3, burst)) & set(burst.positions(7))


def test_decode_every_burst_of_maximal_length(code_7_3, Z2):
    messages = [[a, b, c] for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    for u in messages:
        codeword = encode(code_7_3, u)
        for start in range(1, 8):
            received = erase(codeword, BurstPattern(start, 4))
            decoded, message = decode(code_7_3, received)
            assert decoded == codeword
            assert values(message) == u


def test_decode_rejects_long_burst(code_3_2, Z2):
    with pytest.raises(BurstTooLongError):
        decode(code_3_2, ReceivedWord.from_csv("?,?,1", Z2))


def test_decode_rejects_non_codeword(code_3_2, Z2):
    with pytest.raises(InconsistentWordError):
        decode(code_3_2, ReceivedWord.from_csv("1,1,1", Z2))


def test_decode_checks_length_and_field(code_3_2, Z2, Z3):
    with pytest.raises(MessageLengthError):
        decode(code_3_2, ReceivedWord.from_csv("1,0,1,1", Z2))
    with pytest.raises(FieldMismatchError):
        decode(code_3_2, ReceivedWord.from_csv("1,0,1", Z3))


@given(
    st.sampled_from([2, 3, 5]),
    st.integers(1, 5),
    st.integers(0, 5),
    st.data(),
)
def test_encode_erase_decode_round_trip(p, k, r, data):
    code = generator_explicit(p, k, k + r)
    n = code.n
    u = data.draw(st.lists(st.integers(0, p - 1), min_size=k, max_size=k))
    start = data.draw(st.integers(1, n))
    length = data.draw(st.integers(0, r))
    codeword = encode(code, u)
    decoded, message = decode(code, erase(codeword, BurstPattern(start, length)))
    assert decoded == codeword
    assert values(message) == u


@pytest.mark.slow
@pytest.mark.parametrize("p", [2, 3])
def test_round_trip_over_constructions(p):
    rng = np.random.default_rng(7)
    for n in range(1, 13):
        for k in range(1, min(n, 6) + 1):
            for code in (generator_recursive(k, n, p), generator_explicit(p, k, n)):
                for _ in range(3):
                    u = [int(x) for x in rng.integers(0, p, size=k)]
                    codeword = encode(code, u)
                    for start in range(1, n + 1):
                        received = erase(codeword, BurstPattern(start, n - k))
                        decoded, message = decode(code, received)
                        assert decoded == codeword
                        assert values(message) == u


# --- optimality ---


def test_ambiguous_pair_beyond_redundancy(code_7_3):
    erased = range(1, 6)
    a, b = ambiguous_pair(code_7_3, erased)
    assert a != b
    assert values(a) == [0] * 7
    assert values(b)[5:] == [0, 0]


def test_ambiguous_pair_for_every_long_burst(Z3):
    code = generator_explicit(Z3, 3, 6)
    for start in range(1, 7):
        erased = BurstPattern(start, 4).positions(6)
        a, b = ambiguous_pair(code, erased)
        assert a != b
        for q in set(range(1, 7)) - set(erased):
            assert a[q - 1] == b[q - 1]


def test_ambiguous_pair_needs_enough_erasures(code_7_3):
    with pytest.raises(PreconditionViolatedError):
        ambiguous_pair(code_7_3, [1, 2, 3, 4])


def test_ambiguous_pair_rejects_positions_outside_word(code_7_3):
    with pytest.raises(InvalidIndexSetError):
        ambiguous_pair(code_7_3, [1, 2, 3, 4, 99])
    with pytest.raises(InvalidIndexSetError):
        ambiguous_pair(code_7_3, [0, 1, 2, 3, 4])


def test_ambiguous_pair_with_every_position_erased(code_7_3):
    a, b = ambiguous_pair(code_7_3, range(1, 8))
    assert a != b


def test_erase_rejects_start_outside_word(Z3):
    with pytest.raises(IndexRangeError):
        erase([0, 1, 2], BurstPattern(start=5, length=1), Z3)
