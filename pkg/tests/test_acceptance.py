"""
End-to-end sweeps over every small code the constructions produce.

The larger sweeps are marked slow; run them with `pytest -m slow`.
"""

from itertools import product

import numpy as np
import pytest

from burstcodes.base import cyclic_interval
from burstcodes.codec import BurstPattern, decode, encode, erase
from burstcodes.construct import (
    dual_generator,
    extension_columns,
    generator_explicit,
    generator_recursive,
    lemma_v_matrix,
    lemma_w_integer_matrix,
    lemma_w_matrix,
    m_matrix,
    q_matrix,
    unique_binary_extension,
)
from burstcodes.gf import binom_mod_p
from burstcodes.goodness import (
    complement_positions,
    is_good,
    is_information_set,
    is_prefix_good,
    window_reports,
)
from burstcodes.harness import ChannelModel, golden_example, run_simulation
from burstcodes.linalg import Matrix, hconcat, identity, rank

EXHAUSTIVE_MESSAGES = 729
SAMPLED_MESSAGES = 100


def codes(builders, max_k, max_n):
    for name, p, build in builders:
        for n in range(1, max_n + 1):
            for k in range(1, min(max_k, n) + 1):
                yield name, p, k, n, build(p, k, n)


RECURSIVE = [("recursive", p, lambda p, k, n: generator_recursive(k, n, p)) for p in (2, 3, 5)]
EXPLICIT = [("explicit", p, lambda p, k, n: generator_explicit(p, k, n)) for p in (2, 3)]


@pytest.mark.slow
@pytest.mark.parametrize("p", [2, 3, 5])
def test_recursive_generators_are_good(p):
    failures = [
        (k, n)
        for n in range(1, 25)
        for k in range(1, n + 1)
        if not is_good(generator_recursive(k, n, p).G)
    ]
    assert failures == []


@pytest.mark.slow
@pytest.mark.parametrize("p", [2, 3])
def test_explicit_generators_are_prefix_good(p):
    failures = [
        (k, n)
        for n in range(1, 21)
        for k in range(1, n + 1)
        if not is_prefix_good(generator_explicit(p, k, n).G)
    ]
    assert failures == []


def test_golden_example_windows():
    reports = window_reports(golden_example())
    assert len(reports) == 45
    assert all(r.ok and r.rank == 28 for r in reports)


def test_extension_count_matches_brute_force():
    for _, p, k, n, code in codes(RECURSIVE[:2] + EXPLICIT, 3, 6):
        G = code.G
        listed = {tuple(x.entries.ravel()) for x in extension_columns(G)}
        assert len(listed) == (p - 1) ** k
        brute = {
            values
            for values in product(range(p), repeat=k)
            if is_good(hconcat(G, Matrix.column_vector(values, G.field)))
        }
        assert listed == brute


def test_binary_uniqueness_chain():
    for k in range(1, 7):
        G = identity(k, 2)
        for r in range(1, 11):
            G = hconcat(G, unique_binary_extension(G))
            assert G == hconcat(identity(k, 2), q_matrix(2, k, r))


@pytest.mark.slow
def test_dual_of_good_generator_is_good():
    for _, _, k, n, code in codes(RECURSIVE[:2] + EXPLICIT, 12, 12):
        if k == n:
            continue
        G = code.G
        D = dual_generator(G)
        assert is_good(D)
        for start in range(1, n + 1):
            window = cyclic_interval(start, k, n)
            assert is_information_set(G, window)
            assert is_information_set(D, complement_positions(window, n))


def _messages(p, k, rng):
    if p**k <= EXHAUSTIVE_MESSAGES:
        return [list(u) for u in product(range(p), repeat=k)]
    return rng.integers(0, p, size=(SAMPLED_MESSAGES, k)).tolist()


@pytest.mark.slow
def test_codec_round_trip_at_full_redundancy():
    rng = np.random.default_rng(12)
    for _, p, k, n, code in codes(RECURSIVE + EXPLICIT, 6, 12):
        for u in _messages(p, k, rng):
            codeword = encode(code, u)
            for start in range(1, n + 1):
                decoded, message = decode(code, erase(codeword, BurstPattern(start, n - k)))
                assert decoded == codeword
                assert [s.value for s in message] == u


def test_lemma_oracles():
    for n0 in range(7):
        for b in range(1, 6):
            assert abs(lemma_v_matrix(n0, b).determinant()) == 1
    for p in (2, 3):
        for m in range(1, 4):
            q = p**m
            for b in range(1, q + 1):
                for a in range(q - b + 1):
                    assert rank(lemma_w_matrix(p, m, a, b)) == b
    W = lemma_w_integer_matrix(2, 2, 1, 2)
    assert W.transpose().to_list() == [[2, 3], [1, 3]]
    assert not W.is_unimodular()
    assert rank(W.reduce(2)) == 2


def test_binomial_and_block_identities():
    for p in (2, 3):
        for m in (1, 2):
            q = p**m
            assert all(binom_mod_p(q, i, p).value == 0 for i in range(1, q))
            for i, k, j, l in product(range(p), range(p), range(q), range(q)):
                assert binom_mod_p(i * q + j, k * q + l, p) == binom_mod_p(i, k, p) * binom_mod_p(j, l, p)
            small = q_matrix(p, q, q)
            big = q_matrix(p, p * q, p * q)
            for a, c in product(range(p), repeat=2):
                block = big.entries[a * q : (a + 1) * q, c * q : (c + 1) * q]
                expected = (small.entries * binom_mod_p(a, c, p).value) % p
                assert np.array_equal(block, expected)
    for m in range(1, 5):
        assert m_matrix(m) == q_matrix(2, 2**m, 2**m)


def test_simulator_reports_no_failures():
    code = generator_recursive(3, 7, 2)
    channel = ChannelModel.from_spec("uniform:4", seed=2024)
    first = run_simulation(code, channel, trials=700)
    second = run_simulation(code, channel, trials=700)
    assert (first.successes, first.failures) == (700, 0)
    assert first.to_json() == second.to_json()
