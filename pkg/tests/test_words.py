import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from letterkit.decoder import enumerate_decoders, letters_independent
from letterkit.graph import Graph
from letterkit.realisation import blocks_of, decode_word
from letterkit.words import (
    BoundViolation,
    bound_f,
    check_separator_bound,
    check_pair_homogeneous,
    factor_stats,
    inter,
    interlace,
    longest_sparse_factor,
    z_separates_ys,
)
from oracles import brute_longest_factor, subwords_inter


def all_words(max_len, k=3):
    for n in range(max_len + 1):
        yield from itertools.product(range(k), repeat=n)


def test_inter_examples():
    w = (0, 1, 0, 1, 0, 1)
    assert inter(w, 0, 1) == 3
    assert inter(w, 1, 0) == 2
    assert inter((0, 0, 0, 1, 1, 1), 0, 1) == 1
    with pytest.raises(ValueError):
        inter(w, 0, 0)


def test_interlace_examples():
    assert interlace((0, 1, 0, 1), 0, 1)
    assert not interlace((0, 0, 1, 1), 0, 1)
    assert interlace((1, 0, 1, 0), 0, 1)


def test_longest_sparse_factor_examples():
    assert longest_sparse_factor((0, 0, 0, 1, 2, 0), 1) == (3, 0, 3)
    w = (2, 0, 1, 1, 0, 2)
    assert longest_sparse_factor(w, 3) == (6, 0, 6)
    # two single-letter factors of length 2; the leftmost wins
    assert longest_sparse_factor((0, 1, 1, 2, 2), 1) == (2, 1, 3)
    assert longest_sparse_factor((), 2) == (0, 0, 0)
    with pytest.raises(ValueError):
        longest_sparse_factor(w, 0)


def test_word_statistics_match_oracles_exhaustively():
    for w in all_words(8):
        for a, b in itertools.permutations(range(3), 2):
            assert inter(w, a, b) == subwords_inter(w, a, b)
            assert interlace(w, a, b) == (max(subwords_inter(w, a, b), subwords_inter(w, b, a)) >= 2)
            assert abs(inter(w, a, b) - inter(w, b, a)) <= 1
        previous = 0
        for t in (1, 2, 3):
            length, start, end = longest_sparse_factor(w, t)
            assert length == brute_longest_factor(w, t) == end - start
            assert len(set(w[start:end])) <= t
            assert length >= previous
            previous = length


@given(st.lists(st.integers(0, 3), max_size=12))
def test_inter_matches_oracle_on_longer_words(w):
    for a, b in itertools.permutations(range(4), 2):
        assert inter(w, a, b) == subwords_inter(w, a, b)


def test_check_pair_homogeneous_examples():
    k23 = Graph.from_edges(5, [(x, y) for x in range(2) for y in range(2, 5)])
    assert check_pair_homogeneous(k23, 0b00011, 0b11100)
    missing = Graph.from_edges(5, [e for e in k23.edges() if e != (1, 4)])
    assert not check_pair_homogeneous(missing, 0b00011, 0b11100)
    assert check_pair_homogeneous(k23, 0, 0)


def test_bound_f_values():
    assert [bound_f(k, 1) for k in range(1, 7)] == [3] * 6
    assert bound_f(2, 2) == 23
    assert bound_f(3, 2) == 95
    # (4 + 1) * 2^3 * 3 * (95 + 1) - 1
    assert bound_f(3, 3) == 11519
    for k, t in [(1, 2), (2, 0), (3, 4)]:
        with pytest.raises(ValueError):
            bound_f(k, t)


def test_bound_f_monotone_and_chained_bound():
    for k in range(2, 7):
        values = [bound_f(k, t) for t in range(1, k + 1)]
        assert values == sorted(set(values))
    for k in range(1, 7):
        assert bound_f(k, k) <= 3 * ((2 * k) ** (k + 1)) ** (k - 1)
    # the coarser power bound only starts to hold at two letters
    assert bound_f(1, 1) > 2
    for k in range(2, 7):
        assert bound_f(k, k) <= (2 * k) ** (k * k)


def test_separator_bound_examples():
    x, y, z = 0, 1, 2
    # xyzxzy: every two y's have a z between them
    assert check_separator_bound((x, y, z, x, z, y), x, y, z)
    assert not check_separator_bound((x, y, y, x), x, y, z)
    with pytest.raises(ValueError):
        check_separator_bound((x,), x, x, z)


def test_z_separates_ys():
    assert z_separates_ys((1, 2, 1, 0, 2, 1), 1, 2)
    assert not z_separates_ys((1, 0, 1), 1, 2)
    assert z_separates_ys((0, 1, 0), 1, 2)


def test_separator_bound_exhaustive():
    held = 0
    for w in all_words(10):
        for x, y, z in itertools.permutations(range(3)):
            held += check_separator_bound(w, x, y, z)
    assert held > 0


def test_separator_bound_random_length_12():
    rng = random.Random(12)
    for _ in range(3000):
        w = [rng.randrange(3) for _ in range(12)]
        for x, y, z in itertools.permutations(range(3)):
            check_separator_bound(w, x, y, z)


def test_separator_bound_violation_is_raised(monkeypatch):
    import letterkit.words as words
    monkeypatch.setattr(words, "inter", lambda w, a, b: 0 if b == 2 else 4)
    with pytest.raises(BoundViolation):
        words.check_separator_bound((0, 1, 2, 1), 0, 1, 2)


def test_factor_stats():
    stats = factor_stats((0, 1, 0, 1, 2))
    assert stats.longest == (1, 4, 5)
    assert stats.inter[(0, 1)] == 2 and stats.inter[(1, 0)] == 1
    assert stats.inter[(2, 0)] == 0


def test_interlacing_letters_independent_iff_homogeneous():
    # every realisation on at most 6 vertices over 2 letters is some decoded word
    for d in enumerate_decoders(2):
        for w in all_words(6, k=2):
            if not interlace(w, 0, 1):
                continue
            g = decode_word(d, w)
            a, b = blocks_of(w, 2)
            assert letters_independent(d, 0, 1) == check_pair_homogeneous(g, a, b)
