"""Non-periodic palindromic prefixes, couples, firm prefixes, and extensions.

Conventions used throughout:

* A palindrome is *non-periodic* when its length is less than twice its
  minimal period (``order < 2``); all order comparisons are exact integer
  comparisons, never floating point.
* A *palindromic couple* (p1, p2) has p1 a possibly-empty palindrome, p2 a
  nonempty palindrome, and p1 p2 p1 non-periodic.
* ``pal_ext`` maps a position to extension tuples (n, p1, p2, alpha), one per
  palindromic prefix p0 of the suffix at n, with p0 = (p1 p2)^alpha p1.  The
  tuple carries the *canonical* couple of p0: the empty-p1 couple when p0 is
  firm, otherwise the unique couple whose square extension continues the
  suffix.  (Enumerating every couple of every prefix would make the couple
  count per position exceed the non-periodic prefix count, which the
  cardinality bounds here rely on; see the gamma/pal_ext tests.)
"""

from __future__ import annotations

from dataclasses import dataclass

from .index import WordIndex, index_of
from .words import Word


class ConsistencyError(RuntimeError):
    """A uniqueness or structural invariant the algorithms rely on failed."""


# -- abstract-string helpers (for words that are not spans of an indexed word)


def _is_pal(s: str) -> bool:
    return s == s[::-1]


def _mper_str(s: str) -> int:
    n = len(s)
    for xi in range(1, n):
        if s[: n - xi] == s[xi:]:
            return xi
    return n


def order_lt2_str(s: str) -> bool:
    """length < 2 * minimal period, exactly."""
    return 2 * _mper_str(s) > len(s)


@dataclass(frozen=True)
class PalCouple:
    p1: str
    p2: str

    @property
    def xi(self) -> int:
        return len(self.p1) + len(self.p2)

    def word(self) -> str:
        """p1 p2 p1, the palindrome the couple factorises."""
        return self.p1 + self.p2 + self.p1

    def power(self, alpha: int) -> str:
        return (self.p1 + self.p2) * alpha + self.p1


def is_couple(p1: str, p2: str) -> bool:
    return (
        len(p2) >= 1
        and _is_pal(p1)
        and _is_pal(p2)
        and order_lt2_str(p1 + p2 + p1)
    )


def make_couple(p1: str, p2: str) -> PalCouple:
    if not is_couple(p1, p2):
        raise ValueError(f"({p1!r}, {p2!r}) is not a palindromic couple")
    return PalCouple(p1, p2)


def couple_of_word(u: str) -> PalCouple | None:
    """The unique couple with p1 p2 == u, or None.

    At most one split of u can satisfy the couple conditions; finding two is
    an internal-consistency failure, not a caller error.
    """
    found = None
    for split in range(len(u)):
        p1, p2 = u[:split], u[split:]
        if _is_pal(p1) and _is_pal(p2) and order_lt2_str(u + p1):
            if found is not None:
                raise ConsistencyError(f"two couples share the base word {u!r}")
            found = PalCouple(p1, p2)
    return found


def pal_couples_of(p0: Word) -> frozenset[PalCouple]:
    """All couples (p1, p2) with p1 p2 p1 == p0.

    Splits are enumerated directly: |p1| ranges over 0..(|p0|-1)//2.  Empty
    for periodic p0 (no couple can have a periodic p1 p2 p1).
    """
    s = p0.text
    if not s:
        raise ValueError("p0 must be nonempty")
    if not _is_pal(s):
        raise ValueError("p0 must be a palindrome")
    out = []
    if order_lt2_str(s):
        L = len(s)
        for l in range((L - 1) // 2 + 1):
            p1, p2 = s[:l], s[l : L - l]
            if _is_pal(p1) and _is_pal(p2) and s.endswith(p1):
                out.append(PalCouple(p1, p2))
    return frozenset(out)


# -- prefixes of suffixes of an ambient word ---------------------------------


def npp(w: Word) -> tuple[int, ...]:
    """Ascending lengths of the nonempty non-periodic palindromic prefixes."""
    if len(w) == 0:
        raise ValueError("empty word")
    idx = index_of(w)
    return tuple(L for L in idx.pal_prefix_lengths(1) if idx.order_lt2(1, L))


def _good_lengths(idx: WordIndex, i: int) -> tuple[int, ...]:
    """Lengths of non-periodic palindromic prefixes of the suffix at i."""
    key = ("good", i)
    got = idx.memo.get(key)
    if got is None:
        got = tuple(
            L for L in idx.pal_prefix_lengths(i) if idx.order_lt2(i, i + L - 1)
        )
        idx.memo[key] = got
    return got


def npp_count_span(idx: WordIndex, i: int, j: int) -> int:
    """|NPP(w[i, j])| using the ambient index."""
    limit = j - i + 1
    good = _good_lengths(idx, i)
    lo, hi = 0, len(good)
    while lo < hi:
        mid = (lo + hi) // 2
        if good[mid] <= limit:
            lo = mid + 1
        else:
            hi = mid
    return lo


def tau_and_ordinary(w: Word) -> tuple[int, bool]:
    """Largest NPP count over all factors, and whether w itself attains it.

    The maximum over factors equals the maximum over suffixes because the
    NPP count of w[i, j] is nondecreasing in j.
    """
    if len(w) == 0:
        raise ValueError("empty word")
    idx = index_of(w)
    n = len(w)
    tau = max(len(_good_lengths(idx, i)) for i in range(1, n + 1))
    return tau, len(_good_lengths(idx, 1)) == tau


def find_ordinary(w: Word, h0: int, pad: str = "#") -> tuple[int, int] | None:
    """Search a padded word for an ordinary non-periodic palindromic factor.

    Returns 1-based bounds (i, j) of a factor z with: z ordinary, palindromic,
    non-periodic, pad symbol at its first position, and at least h0 nonempty
    non-periodic palindromic prefixes.  None when the word is too short to
    reach h0.

    Construction: take the shortest prefix v with h0 non-periodic palindromic
    prefixes, pick the factor of v with the most such prefixes (shortest,
    then leftmost), and take its longest non-periodic palindromic prefix.
    """
    if h0 < 1:
        raise ValueError("h0 must be >= 1")
    _check_alternating(w, pad)
    idx = index_of(w)
    n = len(w)
    pad_positions = [i for i in range(1, n + 1) if w.text[i - 1] == pad]
    if not pad_positions:
        return None
    lo, hi = pad_positions[0], pad_positions[-1]

    good_lo = [g for g in _good_lengths(idx, lo) if lo + g - 1 <= hi]
    if len(good_lo) < h0:
        return None
    v_end = lo + good_lo[h0 - 1] - 1

    # factor of w[lo, v_end] with maximal NPP count; shortest then leftmost
    best = None
    for i in range(lo, v_end + 1):
        cnt = npp_count_span(idx, i, v_end)
        if cnt == 0:
            continue
        good = _good_lengths(idx, i)
        j = i + good[cnt - 1] - 1  # shortest factor attaining cnt at this start
        key = (-cnt, j - i + 1, i)
        if best is None or key < best[0]:
            best = (key, i, j, cnt)
    if best is None:
        return None
    _, i, j, cnt = best

    # longest non-periodic palindromic prefix of the chosen factor
    z_len = _good_lengths(idx, i)[npp_count_span(idx, i, j) - 1]
    zi, zj = i, i + z_len - 1
    if w.text[zi - 1] != pad:
        # wrap with the neighbouring pad symbols; in an alternating word a
        # letter-initial factor inside [lo, hi] has pads on both sides
        if zi - 1 >= lo and zj + 1 <= hi and w.text[zi - 2] == pad and w.text[zj] == pad:
            zi, zj = zi - 1, zj + 1
        else:
            raise ConsistencyError("cannot pad-align the ordinary factor")

    cand = w.sub(zi, zj)
    tau, ordinary = tau_and_ordinary(cand)
    if not (
        ordinary
        and idx.pal(zi, zj)
        and idx.order_lt2(zi, zj)
        and w.text[zi - 1] == pad
        and len(npp(cand)) >= h0
    ):
        raise ConsistencyError("ordinary-factor construction violated its contract")
    return zi, zj


def _check_alternating(w: Word, pad: str) -> None:
    s = w.text
    pads = {i % 2 for i, c in enumerate(s) if c == pad}
    letters = {i % 2 for i, c in enumerate(s) if c != pad}
    if pads and letters and pads & letters:
        raise ValueError("word does not have the alternating pad structure")


# -- firm prefixes, canonical couples, extension tuples ----------------------


def _couple_splits(idx: WordIndex, i: int, L: int) -> list[int]:
    """Splits l such that (w[i, i+l-1], w[i+l, i+L-l-1]) is a couple of the
    non-periodic palindromic span (i, i+L-1)."""
    out = []
    for l in range((L - 1) // 2 + 1):
        if (l == 0 or idx.pal(i, i + l - 1)) and idx.pal(i + l, i + L - l - 1):
            out.append(l)
    return out


def _square_extends(idx: WordIndex, i: int, L: int, l: int) -> bool:
    """(p1 p2)^2 p1 continues the suffix at i, for the split l of a length-L
    palindromic prefix: the period xi = L - l must reach L + xi."""
    xi = L - l
    return idx.reach(i, xi) >= L + xi


def is_firm(z: Word, n: int, L: int) -> bool:
    """Is the length-L palindromic prefix of the suffix at n firm?

    Firm: non-periodic, and no couple of it extends to a square prefix of
    the suffix.
    """
    idx = index_of(z)
    key = ("firm", n, L)
    got = idx.memo.get(key)
    if got is None:
        j = n + L - 1
        if not idx.pal(n, j) or not idx.order_lt2(n, j):
            got = False
        else:
            got = not any(
                _square_extends(idx, n, L, l) for l in _couple_splits(idx, n, L)
            )
        idx.memo[key] = got
    return got


def firm_pal_prefixes(z: Word, n: int) -> frozenset[int]:
    """Lengths of the firm palindromic prefixes of the suffix at n."""
    idx = index_of(z)
    if not 1 <= n <= len(z):
        raise ValueError(f"position {n} out of range")
    return frozenset(L for L in _good_lengths(idx, n) if is_firm(z, n, L))


def _canonical_couple(z: Word, n: int, L: int) -> tuple[PalCouple, int]:
    """Canonical (couple, alpha) of the non-firm palindromic prefix of
    length L at position n, with prefix == (p1 p2)^alpha p1."""
    idx = index_of(z)
    key = ("canon", n, L)
    got = idx.memo.get(key)
    if got is not None:
        return got
    j = n + L - 1
    s = z.text
    if idx.order_lt2(n, j):
        # alpha = 1: the unique couple of the prefix whose square continues
        cands = [
            l for l in _couple_splits(idx, n, L) if _square_extends(idx, n, L, l)
        ]
        if len(cands) != 1:
            raise ConsistencyError(
                f"expected one square-extending couple at n={n}, L={L}, got {len(cands)}"
            )
        l = cands[0]
        got = (PalCouple(s[n - 1 : n - 1 + l], s[n - 1 + l : j - l]), 1)
    else:
        # alpha >= 2: some period xi of the span splits it into a couple; a
        # periodic span cannot be p1 p2 p1 itself, and equal powers with
        # alpha >= 2 share their couple, so at most one period qualifies
        found = None
        for xi in range(1, L // 2 + 1):
            if not idx.has_period(n, j, xi):
                continue
            l = L % xi
            p1 = s[n - 1 : n - 1 + l]
            p2 = s[n - 1 + l : n - 1 + xi]
            if not p2 or not _is_pal(p1) or not _is_pal(p2):
                continue
            if not idx.order_lt2(n, n + xi + l - 1):
                continue
            if found is not None:
                raise ConsistencyError(
                    f"two couples decompose the periodic prefix at n={n}, L={L}"
                )
            found = (PalCouple(p1, p2), L // xi)
        if found is None:
            raise ConsistencyError(
                f"periodic prefix at n={n}, L={L} admits no couple at any period"
            )
        got = found
    idx.memo[key] = got
    return got


@dataclass(frozen=True)
class PalExtTuple:
    """One palindromic prefix of the suffix at n, encoded as (p1 p2)^alpha p1."""

    n: int
    p1: str
    p2: str
    alpha: int

    @property
    def sigma(self) -> int:
        """End position of the extension palindrome inside the ambient word."""
        return self.n - 1 + self.alpha * (len(self.p1) + len(self.p2)) + len(self.p1)

    @property
    def couple(self) -> PalCouple:
        return PalCouple(self.p1, self.p2)


def sigma(t: PalExtTuple) -> int:
    return t.sigma


def pal_ext(z: Word, n: int) -> frozenset[PalExtTuple]:
    """Extension tuples of position n, one per palindromic prefix of z[n, |z|]."""
    idx = index_of(z)
    if not 1 <= n <= len(z):
        raise ValueError(f"position {n} out of range")
    key = ("palext", n)
    got = idx.memo.get(key)
    if got is None:
        out = []
        for L in idx.pal_prefix_lengths(n):
            if is_firm(z, n, L):
                out.append(PalExtTuple(n, "", z.text[n - 1 : n - 1 + L], 1))
            else:
                couple, alpha = _canonical_couple(z, n, L)
                out.append(PalExtTuple(n, couple.p1, couple.p2, alpha))
        got = frozenset(out)
        if len({t.sigma for t in got}) != len(got):
            raise ConsistencyError(f"extension ends collide at position {n}")
        idx.memo[key] = got
    return got


def gamma(z: Word, n: int) -> frozenset[PalCouple]:
    """Couples underlying the palindromic prefixes of the suffix at n: the
    empty-p1 couple for firm prefixes, the canonical couple otherwise."""
    return frozenset(t.couple for t in pal_ext(z, n))


def to_pal_couple(z: Word, n1: int, n2: int) -> PalCouple:
    """Canonical couple of the palindromic span z[n1, n2].

    (epsilon, whole span) when the span is firm at n1; otherwise the unique
    couple with (p1 p2)^2 p1 continuing the suffix and span = (p1 p2)^a p1.
    """
    idx = index_of(z)
    if not idx.pal(n1, n2):
        raise ValueError(f"span [{n1}, {n2}] is not a palindrome")
    L = n2 - n1 + 1
    if is_firm(z, n1, L):
        return PalCouple("", z.text[n1 - 1 : n2])
    return _canonical_couple(z, n1, L)[0]


def pal_ext_set(z: Word, D) -> frozenset[PalExtTuple]:
    """Union of pal_ext over a position set."""
    out: set[PalExtTuple] = set()
    for n in D:
        out |= pal_ext(z, n)
    return frozenset(out)


def sigma_set(z: Word, D) -> frozenset[int]:
    """All extension end positions of a position set."""
    return frozenset(t.sigma for t in pal_ext_set(z, D))
