from fractions import Fraction

import pytest

from pallen.generators import random_letters
from pallen.index import index_of
from pallen.palindromics import ConsistencyError, couple_of_word
from pallen.periodicity import (
    Run,
    find_runs,
    is_run,
    mper_order,
    p_to_run,
    per_prolong,
    periods,
    run_couple,
)
from pallen.words import Word


def brute_periods(s):
    n = len(s)
    return frozenset(
        xi for xi in range(1, n + 1)
        if all(s[i] == s[i + xi] for i in range(n - xi))
    )


def test_periods_examples(z3):
    assert periods(Word("abc")) == frozenset({3})
    assert periods(Word("#a#a#")) == frozenset({2, 4, 5})
    assert periods(Word("aaaa")) == frozenset({1, 2, 3, 4})
    with pytest.raises(ValueError):
        periods(Word(""))


def test_periods_against_brute():
    for seed in range(60):
        s = random_letters(1 + seed % 24, 2 + seed % 2, seed)
        assert periods(Word(s)) == brute_periods(s)


def test_mper_order_examples(z3):
    assert mper_order(Word("aaa")) == (1, Fraction(3))
    assert mper_order(Word("#a#")) == (2, Fraction(3, 2))
    # the z3 example: exhaustive check over every xi <= 11 gives minimal
    # period 6 (positions 1..5 repeat at 7..11), hence order 11/6 < 2
    assert mper_order(z3) == (6, Fraction(11, 6))


def test_per_prolong_examples(z3):
    assert per_prolong(z3, 1, 2) == 5
    assert per_prolong(z3, 1, len(z3)) == len(z3)
    assert per_prolong(Word("aaaa"), 2, 1) == 4
    with pytest.raises(ValueError):
        per_prolong(z3, 0, 2)


def brute_runs(z):
    s = z.text
    n = len(s)
    out = set()
    for nu1 in range(1, n + 1):
        for nu2 in range(nu1, n + 1):
            seg = s[nu1 - 1 : nu2]
            for xi in range(1, nu2 - nu1 + 2):
                if any(seg[t] != seg[t + xi] for t in range(len(seg) - xi)):
                    continue
                if nu2 < n and all(
                    s[t] == s[t + xi] for t in range(nu1 - 1, nu2 + 1 - xi)
                ):
                    continue
                if nu1 > 1 and all(
                    s[t] == s[t + xi] for t in range(nu1 - 2, nu2 - xi)
                ):
                    continue
                if couple_of_word(seg[:xi]) is None:
                    continue
                out.add(Run(nu1, nu2, xi))
    return frozenset(out)


def test_find_runs_examples(z3):
    runs = find_runs(z3)
    assert Run(1, 5, 2) in runs
    assert Run(1, 6, 2) in find_runs(Word("ababab"))
    # "abc": isolated letters are singleton runs; length-2 stretches carry
    # the (a, b)-style couples; nothing else qualifies
    assert find_runs(Word("abc")) == frozenset(
        {Run(1, 1, 1), Run(2, 2, 1), Run(3, 3, 1), Run(1, 2, 2), Run(2, 3, 2)}
    )


def test_find_runs_against_brute(z3):
    words = [z3, Word("ababab"), Word("aaaa")]
    words += [Word(random_letters(1 + s % 20, 2, s + 50)) for s in range(40)]
    for w in words:
        assert find_runs(w) == brute_runs(w), w.text


def test_runs_are_distinct_and_valid(z3):
    for w in [z3, Word("abaab"), Word(random_letters(30, 2, 3))]:
        runs = find_runs(w)
        for run in runs:
            assert is_run(w, run)
            assert run_couple(w, run).xi == run.xi


def test_p_to_run_examples(z3):
    assert p_to_run(z3, 1, 3) == Run(1, 5, 2)
    # the span (2, 4) is firm at position 2 (no couple of a#a extends to a
    # square prefix of z3[2,11]), so its couple has period 3 and its run is
    # the maximal 3-periodic stretch around it
    assert p_to_run(z3, 2, 4) == Run(2, 4, 3)
    assert p_to_run(Word("abc"), 2, 2) == Run(2, 2, 1)


def test_p_to_run_maps_into_found_runs(z3):
    runs = find_runs(z3)
    idx = index_of(z3)
    for i in range(1, len(z3) + 1):
        for j in range(i, len(z3) + 1):
            if idx.pal(i, j):
                assert p_to_run(z3, i, j) in runs


def test_p_to_run_rejects_non_palindrome(z3):
    with pytest.raises(ValueError):
        p_to_run(z3, 1, 2)


def test_p_to_run_may_not_exist_off_context():
    # on arbitrary words the maximal stretch of a firm span can lack a
    # couple prefix entirely; the mapping is then undefined and raises
    w = Word("babaabbbababbbabbbbabaab")
    assert index_of(w).pal(14, 21)
    with pytest.raises(ConsistencyError):
        p_to_run(w, 14, 21)
