"""The span/reach tables against definitional brute force; every higher
module trusts these answers."""

import pytest

from pallen.generators import random_letters
from pallen.index import WordIndex, index_of
from pallen.words import Word


def brute_mper(s):
    n = len(s)
    for xi in range(1, n):
        if s[: n - xi] == s[xi:]:
            return xi
    return n


def brute_reach(s, i, xi):
    # longest xi-periodic prefix of s[i-1:], 1-based i
    suffix = s[i - 1 :]
    length = min(xi, len(suffix))
    while length < len(suffix) and suffix[length] == suffix[length - xi]:
        length += 1
    return length


WORDS = (
    [Word(random_letters(1 + 3 * k, 2, k)) for k in range(1, 12)]
    + [Word(random_letters(20, 3, 99)), Word("#a#a#c#a#a#"), Word("a" * 17)]
)


@pytest.mark.parametrize("w", WORDS, ids=lambda w: w.text[:12])
def test_pal_table(w):
    idx = index_of(w)
    for i in range(1, len(w) + 1):
        for j in range(i, len(w) + 1):
            piece = w.text[i - 1 : j]
            assert idx.pal(i, j) == (piece == piece[::-1])


@pytest.mark.parametrize("w", WORDS, ids=lambda w: w.text[:12])
def test_periodicity_tables(w):
    idx = index_of(w)
    n = len(w)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            piece = w.text[i - 1 : j]
            m = brute_mper(piece)
            assert idx.mper(i, j) == m
            assert idx.order_lt2(i, j) == (2 * m > len(piece))
            for xi in (1, 2, 3, m, len(piece), len(piece) + 5):
                want = xi >= len(piece) or all(
                    piece[t] == piece[t + xi] for t in range(len(piece) - xi)
                )
                assert idx.has_period(i, j, xi) == want


@pytest.mark.parametrize("w", WORDS[:8], ids=lambda w: w.text[:12])
def test_reach_and_prolong(w):
    idx = index_of(w)
    n = len(w)
    for i in range(1, n + 1):
        for xi in range(1, n + 2):
            assert idx.reach(i, xi) == brute_reach(w.text, i, xi)
            assert idx.per_prolong(i, xi) == i + brute_reach(w.text, i, xi) - 1


@pytest.mark.parametrize("w", WORDS[:8], ids=lambda w: w.text[:12])
def test_widest_at_center(w):
    idx = index_of(w)
    n = len(w)
    for c2 in range(2, 2 * n + 1):
        best = None
        for i in range(1, c2 // 2 + 1):
            j = c2 - i
            if j <= n and i <= j:
                piece = w.text[i - 1 : j]
                if piece == piece[::-1]:
                    best = (i, j)
                    break  # widest = smallest i
        assert idx.widest_at_center(c2) == best


def test_pal_prefix_lengths(z3):
    idx = index_of(z3)
    assert idx.pal_prefix_lengths(1) == (1, 3, 5, 11)
    assert idx.pal_prefix_lengths(6) == (1,)


def test_index_rejects_bad_input():
    with pytest.raises(ValueError):
        WordIndex(Word(""))
