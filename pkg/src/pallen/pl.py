"""Palindromic length: definitional oracle, accelerated engine, padded
variant, maxima over prefixes/factors, and the pad-position cover sets.

Two independent routes compute PL:

* ``pl_prefix_oracle`` -- the definitional dynamic program: PL of a prefix is
  1 + the minimum over its palindromic suffixes of the PL of what precedes
  (palindromicity from the span table).
* ``pl_fast`` -- a palindromic tree (eertree) whose suffix-link chains are
  grouped into arithmetic series, giving O(n log n) overall.

They must agree exactly; the acceptance suite enforces that on large random
corpora.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .index import index_of
from .words import DEFAULT_PAD, Word

_INF16 = np.int16(20000)


@dataclass(frozen=True)
class PlProfile:
    word_len: int
    prefix_pl: tuple[int, ...]

    @property
    def max_pl(self) -> int:
        return max(self.prefix_pl)


# -- definitional oracle ------------------------------------------------------


def pl_prefix_oracle(w: Word) -> list[int]:
    """PL(w[1, i]) for every i, by the definitional DP."""
    if len(w) == 0:
        raise ValueError("empty word")
    n = len(w)
    P = index_of(w).pal_matrix()
    dp = np.zeros(n + 1, dtype=np.int32)
    for i in range(1, n + 1):
        starts = P[:i, i - 1]
        dp[i] = dp[:i][starts].min() + 1
    return [int(x) for x in dp[1:]]


def pl_oracle(w: Word) -> int:
    """Minimal number of nonempty palindromes concatenating to w."""
    return pl_prefix_oracle(w)[-1]


# -- eertree with series links ------------------------------------------------


class _Eertree:
    """Palindromic tree; nodes carry suffix links, length differences, and
    series links (the next node up the suffix chain with a different
    difference)."""

    __slots__ = ("s", "len", "link", "diff", "series", "to", "last")

    def __init__(self) -> None:
        self.s: list[str] = []
        self.len = [-1, 0]
        self.link = [0, 0]
        self.diff = [0, 0]
        self.series = [0, 0]
        self.to: list[dict[str, int]] = [{}, {}]
        self.last = 1

    def add(self, ch: str) -> int:
        s, ln, lk, to = self.s, self.len, self.link, self.to
        s.append(ch)
        pos = len(s) - 1
        cur = self.last
        while True:
            j = pos - ln[cur] - 1
            if j >= 0 and s[j] == ch:
                break
            cur = lk[cur]
        node = to[cur].get(ch)
        if node is None:
            node = len(ln)
            ln.append(ln[cur] + 2)
            to.append({})
            if ln[node] == 1:
                sl = 1
            else:
                c2 = lk[cur]
                while True:
                    j = pos - ln[c2] - 1
                    if j >= 0 and s[j] == ch:
                        break
                    c2 = lk[c2]
                sl = to[c2][ch]
            lk.append(sl)
            d = ln[node] - ln[sl]
            self.diff.append(d)
            self.series.append(sl if d != self.diff[sl] else self.series[sl])
            to[cur][ch] = node
        self.last = node
        return node


def pl_prefix_fast(w: Word) -> list[int]:
    """PL of every prefix via series-link DP over the palindromic tree."""
    if len(w) == 0:
        raise ValueError("empty word")
    n = len(w)
    text = w.text
    inf = n + 10
    dp = [0] * (n + 1)
    tree = _Eertree()
    ln, lk, diff, series = tree.len, tree.link, tree.diff, tree.series
    g = [inf, inf]
    for i in range(1, n + 1):
        node = tree.add(text[i - 1])
        while len(g) < len(ln):
            g.append(inf)
        best = inf
        while ln[node] > 0:
            sv = series[node]
            # shortest member of this series starts at i - len(sv) - diff(node)
            val = dp[i - ln[sv] - diff[node]]
            slk = lk[node]
            if diff[node] == diff[slk] and g[slk] < val:
                val = g[slk]
            g[node] = val
            if val + 1 < best:
                best = val + 1
            node = sv
        dp[i] = best
    return dp[1:]


def pl_fast(w: Word) -> PlProfile:
    return PlProfile(len(w), tuple(pl_prefix_fast(w)))


def max_pl_factors(w: Word) -> int:
    """Maximum PL over all nonempty factors of w.

    Runs the series-link DP with one cell per suffix start, vectorised over
    starts: dp[i][s] = PL(w[s, i]).  Palindromes reaching left of a suffix
    start read the INF initial values and drop out of the minima on their
    own.
    """
    if len(w) == 0:
        raise ValueError("empty word")
    if len(w) > 8192:
        raise ValueError("factor scope supports words up to 8192 symbols")
    n = len(w)
    text = w.text
    dp = np.full((n + 1, n + 2), _INF16, dtype=np.int16)
    dp[0, 1] = 0
    tree = _Eertree()
    ln, lk, diff, series = tree.len, tree.link, tree.diff, tree.series
    g: list[np.ndarray | None] = [None, None]
    best = 1
    for i in range(1, n + 1):
        node = tree.add(text[i - 1])
        while len(g) < len(ln):
            g.append(None)
        col = np.full(n + 2, _INF16, dtype=np.int16)
        while ln[node] > 0:
            sv = series[node]
            gv = dp[i - ln[sv] - diff[node]].copy()
            slk = lk[node]
            if diff[node] == diff[slk] and g[slk] is not None:
                np.minimum(gv, g[slk], out=gv)
            g[node] = gv
            np.minimum(col, gv + np.int16(1), out=col)
            node = sv
        col[i + 1] = 0
        dp[i] = col
        column_best = int(col[1 : i + 1].max())
        if column_best > best:
            best = column_best
    return best


def max_pl(w: Word, scope: str = "factors") -> int:
    """Maximum PL over the chosen scope ("prefixes" or "factors")."""
    if scope == "prefixes":
        return pl_fast(w).max_pl
    if scope == "factors":
        return max_pl_factors(w)
    raise ValueError(f"unknown scope {scope!r}")


# -- padded palindromic length -------------------------------------------------


def _check_letters_odd(w: Word, pad: str) -> None:
    """Shape of finite padded words: letters at odd positions, pad at even."""
    if len(w) == 0:
        raise ValueError("empty word")
    for i, c in enumerate(w.text, start=1):
        if (i % 2 == 0) != (c == pad):
            raise ValueError("word is not of padded shape (letter pad letter ...)")


def ppl(w: Word, pad: str = DEFAULT_PAD) -> int:
    """Minimal k with w = p1 # p2 # ... # pk, each pi a nonempty palindrome.

    Cuts happen only at pad positions; the palindromes between cuts may
    themselves contain the pad symbol.
    """
    _check_letters_odd(w, pad)
    idx = index_of(w)
    n = len(w)
    inf = n + 10
    f = [inf] * (n + 1)
    f[0] = 0
    pad_positions: list[int] = []
    for j in range(1, n + 1, 2):  # letter ends
        best = 1 if idx.pal(1, j) else inf
        for l in pad_positions:
            if f[l - 1] + 1 < best and idx.pal(l + 1, j):
                best = f[l - 1] + 1
        f[j] = best
        if j + 1 <= n:
            pad_positions.append(j + 1)
    return f[n]


def _cover_values(z: Word, pad: str) -> dict[int, int]:
    """PPL of the inner slice z[2, n-1] for every pad position n >= 3.

    z must start with the pad symbol and alternate pad/letter; inner slices
    then have the finite padded shape.
    """
    n = len(z)
    if n == 0 or z.text[0] != pad:
        raise ValueError("word must start with the pad symbol")
    for i, c in enumerate(z.text, start=1):
        if (i % 2 == 1) != (c == pad):
            raise ValueError("word is not an alternating padded word")
    idx = index_of(z)
    inf = n + 10
    f = [inf] * (n + 1)  # f[j] = PPL(z[2, j]) at letter positions j (even)
    for j in range(2, n + 1, 2):
        best = 1 if idx.pal(2, j) else inf
        for l in range(3, j, 2):
            if f[l - 1] + 1 < best and idx.pal(l + 1, j):
                best = f[l - 1] + 1
        f[j] = best
    # the pad position n sees the inner slice ending at the letter n - 1
    return {j + 1: f[j] for j in range(2, n + 1, 2) if j + 1 <= n and f[j] < inf}


def cover(z: Word, m: int, pad: str = DEFAULT_PAD) -> frozenset[int]:
    """Pad positions n of z whose inner slice z[2, n-1] has PPL exactly m;
    cover(z, 0) is {1} by convention."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        if len(z) == 0 or z.text[0] != pad:
            raise ValueError("word must start with the pad symbol")
        return frozenset({1})
    idx = index_of(z)
    values = idx.memo.get(("cover_values", pad))
    if values is None:
        values = _cover_values(z, pad)
        idx.memo[("cover_values", pad)] = values
    return frozenset(n for n, v in values.items() if v == m)


def cover_max_m(z: Word, pad: str = DEFAULT_PAD) -> int:
    """Largest realised PPL value over the pad positions of z."""
    idx = index_of(z)
    values = idx.memo.get(("cover_values", pad))
    if values is None:
        values = _cover_values(z, pad)
        idx.memo[("cover_values", pad)] = values
    return max(values.values(), default=0)
