"""Periods, minimal period and order, periodic prolongation, and runs.

A run is an inclusion-maximal periodic stretch (nu1, nu2, xi) of the ambient
word whose length-xi prefix is the base word p1 p2 of a palindromic couple;
every palindromic factor maps to exactly one run (``p_to_run``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .index import index_of
from .palindromics import (
    ConsistencyError,
    PalCouple,
    couple_of_word,
    order_lt2_str,
    to_pal_couple,
)
from .words import Word


def periods(w: Word) -> frozenset[int]:
    """All periods xi <= |w| (every xi > |w| is vacuously a period too)."""
    s = w.text
    n = len(s)
    if n == 0:
        raise ValueError("empty word")
    return frozenset(xi for xi in range(1, n + 1) if s[: n - xi] == s[xi:])


def mper_order(w: Word) -> tuple[int, Fraction]:
    """Minimal period and the exact order |w| / mper."""
    m = min(periods(w))
    return m, Fraction(len(w), m)


def per_prolong(z: Word, n1: int, xi: int) -> int:
    """Largest n2 with xi a period of z[n1, n2]."""
    return index_of(z).per_prolong(n1, xi)


class Run(NamedTuple):
    nu1: int
    nu2: int
    xi: int


def run_couple(z: Word, run: Run) -> PalCouple:
    """The unique couple whose base word prefixes the run, |p1 p2| == xi."""
    u = z.text[run.nu1 - 1 : run.nu1 - 1 + run.xi]
    couple = couple_of_word(u)
    if couple is None:
        raise ValueError(f"{run} has no palindromic-couple prefix")
    return couple


def _couple_exists_for_prefix(z: Word, nu1: int, xi: int, ext: int) -> bool:
    """Does some couple have p1 p2 == z[nu1, nu1+xi-1]?

    ext is the length of the xi-periodic stretch from nu1, used to answer
    order queries on spans of the ambient word where possible.
    """
    idx = index_of(z)
    found = 0
    for l in range(xi):
        if l > 0 and not idx.pal(nu1, nu1 + l - 1):
            continue
        if not idx.pal(nu1 + l, nu1 + xi - 1):
            continue
        # order(p1 p2 p1) < 2; the word stays inside z only while the
        # periodic stretch lasts
        if xi + l <= ext:
            ok = idx.order_lt2(nu1, nu1 + xi + l - 1)
        else:
            u = z.text[nu1 - 1 : nu1 - 1 + xi]
            ok = order_lt2_str(u + u[:l])
        if ok:
            found += 1
            if found > 1:
                raise ConsistencyError(
                    f"two couples share a base word at position {nu1}, xi={xi}"
                )
    return found == 1


def find_runs(z: Word) -> frozenset[Run]:
    """All runs of z, by direct enumeration over (start, period).

    Quadratic in |z| with constant-time table lookups per candidate;
    intended for desk-scale words.
    """
    n = len(z)
    if n == 0:
        raise ValueError("empty word")
    s = z.text
    runs = set()
    for xi in range(1, n + 1):
        # ext[i] = length of the longest xi-periodic prefix of s[i:], 0-based i
        ext = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            if i + xi >= n:
                ext[i] = n - i
            elif s[i] == s[i + xi]:
                ext[i] = min(ext[i + 1] + 1, n - i)
            else:
                ext[i] = xi
        for i in range(n):
            reach = ext[i]
            if reach < xi:
                continue
            nu1, nu2 = i + 1, i + reach
            # left-maximality: xi must fail as a period of z[nu1-1, nu2]
            if i > 0 and ext[i - 1] >= reach + 1:
                continue
            if _couple_exists_for_prefix(z, nu1, xi, reach):
                runs.add(Run(nu1, nu2, xi))
    return frozenset(runs)


def is_run(z: Word, run: Run) -> bool:
    """Check every clause of the run definition directly."""
    n = len(z)
    nu1, nu2, xi = run
    if not (1 <= nu1 <= nu2 <= n) or xi < 1 or nu2 - nu1 + 1 < xi:
        return False
    idx = index_of(z)
    if not idx.has_period(nu1, nu2, xi):
        return False
    if nu2 < n and idx.has_period(nu1, nu2 + 1, xi):
        return False
    if nu1 > 1 and idx.has_period(nu1 - 1, nu2, xi):
        return False
    return _couple_exists_for_prefix(z, nu1, xi, nu2 - nu1 + 1)


def p_to_run(z: Word, n1: int, n2: int) -> Run:
    """The unique run whose canonical palindromes include the span (n1, n2).

    The run period is |p1 p2| for the canonical couple of the span; the run
    is the maximal stretch with that period around the span.
    """
    couple = to_pal_couple(z, n1, n2)
    xi = couple.xi
    idx = index_of(z)
    s = z.text
    nu2 = idx.per_prolong(n1, xi)
    nu1 = n1
    while nu1 > 1 and nu1 - 1 + xi <= nu2 and s[nu1 - 2] == s[nu1 - 2 + xi]:
        nu1 -= 1
    run = Run(nu1, nu2, xi)
    if not is_run(z, run):
        raise ConsistencyError(f"span ({n1}, {n2}) produced a non-run {run}")
    return run
