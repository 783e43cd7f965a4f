"""Per-word analysis tables: palindromic spans and periodic reach.

``WordIndex`` precomputes, for one word, O(n^2)-bit tables answering in O(1):

* ``pal(i, j)``      -- is the 1-based span a palindrome,
* ``reach(i, xi)``   -- length of the longest xi-periodic prefix of the
                        suffix starting at i,
* ``mper(i, j)``     -- minimal period of the span,
* ``order_lt2(i, j)``-- is length < 2 * minimal period (exact, no rationals).

Tables are numpy arrays; words are capped at a few thousand symbols, the
desk scale the rest of the package operates at.
"""

from __future__ import annotations

import numpy as np

from .words import Word

_MAX_INDEXED_LEN = 6000


class WordIndex:
    def __init__(self, w: Word):
        if len(w) == 0:
            raise ValueError("cannot index the empty word")
        if len(w) > _MAX_INDEXED_LEN:
            raise ValueError(f"word too long to index ({len(w)} > {_MAX_INDEXED_LEN})")
        self.word = w
        self.text = w.text
        self.n = len(w)
        self._codes = np.frombuffer(w.text.encode("utf-32-le"), dtype=np.uint32)
        self._pal: np.ndarray | None = None
        self._reach_pm: np.ndarray | None = None
        self._pal_prefix_cache: dict[int, tuple[int, ...]] = {}
        self.memo: dict = {}  # scratch cache for higher layers, keyed by them

    # -- palindrome table ---------------------------------------------------

    def _pal_table(self) -> np.ndarray:
        if self._pal is None:
            n, c = self.n, self._codes
            P = np.zeros((n, n), dtype=bool)
            idx = np.arange(n)
            P[idx, idx] = True
            if n >= 2:
                P[idx[:-1], idx[:-1] + 1] = c[:-1] == c[1:]
            for L in range(3, n + 1):
                i = np.arange(n - L + 1)
                P[i, i + L - 1] = (c[i] == c[i + L - 1]) & P[i + 1, i + L - 2]
            self._pal = P
        return self._pal

    def pal(self, i: int, j: int) -> bool:
        """Is w[i, j] a palindrome (1-based inclusive span)."""
        return bool(self._pal_table()[i - 1, j - 1])

    def pal_matrix(self) -> np.ndarray:
        """Boolean span table, 0-based: entry [i, j] == pal(i+1, j+1).  Treat
        as read-only."""
        return self._pal_table()

    def pal_prefix_lengths(self, i: int) -> tuple[int, ...]:
        """Ascending lengths L with w[i, i+L-1] a palindrome."""
        got = self._pal_prefix_cache.get(i)
        if got is None:
            row = self._pal_table()[i - 1, i - 1 :]
            got = tuple(int(x) + 1 for x in np.nonzero(row)[0])
            self._pal_prefix_cache[i] = got
        return got

    def widest_at_center(self, center2: int) -> tuple[int, int] | None:
        """Widest palindromic span (i, j) with i + j == center2, or None.

        center2 is the doubled center; shrinking a palindrome one symbol on
        each side keeps it palindromic, so the search is a binary search.
        """
        P = self._pal_table()
        best = None
        a, b = max(1, center2 - self.n), center2 // 2
        while a <= b:
            mid = (a + b) // 2
            i, j = mid, center2 - mid
            if 1 <= i <= j <= self.n and P[i - 1, j - 1]:
                best = (i, j)
                b = mid - 1
            else:
                a = mid + 1
        return best

    # -- periodicity --------------------------------------------------------

    def _reach_prefix_max(self) -> np.ndarray:
        if self._reach_pm is None:
            n, c = self.n, self._codes
            R = np.zeros((n + 1, n + 1), dtype=np.int32)
            suffix_len = n - np.arange(1, n + 1) + 1
            for xi in range(1, n + 1):
                col = np.minimum(suffix_len, xi)
                if xi < n:
                    eq = c[:-xi] == c[xi:]
                    false_at = np.nonzero(~eq)[0]
                    t = np.arange(n - xi)
                    if len(false_at) == 0:
                        run = (n - xi) - t
                    else:
                        ff = np.searchsorted(false_at, t)
                        stop = np.append(false_at, n - xi)
                        run = stop[ff] - t
                    col = col.copy()
                    col[: n - xi] = xi + run
                R[1:, xi] = col
            np.maximum.accumulate(R, axis=1, out=R)
            self._reach_pm = R
        return self._reach_pm

    def reach(self, i: int, xi: int) -> int:
        """Length of the longest xi-periodic prefix of w[i, n]."""
        n = self.n
        if not 1 <= i <= n:
            raise ValueError(f"position {i} out of range")
        if xi >= n - i + 1:
            return n - i + 1
        c = self._codes
        limit = n - i + 1
        k = xi
        while k < limit and c[i - 1 + k] == c[i - 1 + k - xi]:
            k += 1
        return k

    def mper(self, i: int, j: int) -> int:
        """Minimal period of the span w[i, j]."""
        L = j - i + 1
        M = self._reach_prefix_max()[i]
        return int(np.searchsorted(M, L, side="left"))

    def has_period(self, i: int, j: int, xi: int) -> bool:
        """xi-periodicity of the span; vacuously true for xi >= its length."""
        L = j - i + 1
        if xi >= L:
            return True
        return self.reach(i, xi) >= L

    def order_lt2(self, i: int, j: int) -> bool:
        """order(w[i, j]) < 2, i.e. the span is a non-periodic word."""
        L = j - i + 1
        M = self._reach_prefix_max()[i]
        return bool(M[L // 2] < L)

    def per_prolong(self, n1: int, xi: int) -> int:
        """Largest n2 with xi a period of w[n1, n2] (the periodic prolongation)."""
        if not 1 <= n1 <= self.n:
            raise ValueError(f"position {n1} out of range")
        if xi < 1:
            raise ValueError("period must be >= 1")
        return n1 + self.reach(n1, xi) - 1


_index_cache: dict[str, WordIndex] = {}


def index_of(w: Word) -> WordIndex:
    """Memoised WordIndex; keyed by word content."""
    idx = _index_cache.get(w.text)
    if idx is None:
        idx = WordIndex(w)
        if len(_index_cache) > 64:
            _index_cache.clear()
        _index_cache[w.text] = idx
    return idx
