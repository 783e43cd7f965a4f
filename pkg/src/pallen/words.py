"""Words with 1-based indexing, padding, and position-set utilities.

Every word is a finite sequence of single-character symbols.  Positions are
1-based throughout the package: ``w[i]`` is defined for ``1 <= i <= len(w)``
and slices ``w.sub(i, j)`` require ``1 <= i <= j <= len(w)``.  Bounds are
validated, never clamped.

Position sets are plain ``frozenset[int]`` of positive integers; the helpers
here (mirror, spread, close, diam, shift) implement the integer-set algebra
the rest of the package is written in.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

DEFAULT_PAD = "#"

PosSet = frozenset


@dataclass(frozen=True)
class Interval:
    """Closed integer interval [lo, hi] with lo <= hi, both >= 1."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo < 1 or self.lo > self.hi:
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    def __contains__(self, n: int) -> bool:
        return self.lo <= n <= self.hi

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def positions(self) -> range:
        return range(self.lo, self.hi + 1)


@dataclass(frozen=True)
class Alphabet:
    """Finite ordered letter set plus one reserved pad symbol.

    The pad symbol is data-level (default ``#``); it never occurs among the
    letters.
    """

    letters: tuple[str, ...]
    pad: str = DEFAULT_PAD

    def __post_init__(self) -> None:
        if not self.letters:
            raise ValueError("alphabet needs at least one letter")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError("duplicate letters")
        for a in self.letters + (self.pad,):
            if len(a) != 1:
                raise ValueError(f"symbols are single characters, got {a!r}")
        if self.pad in self.letters:
            raise ValueError("pad symbol must not be a letter")


@dataclass(frozen=True)
class Word:
    """Immutable finite word; ``w[i]`` and ``w.sub(i, j)`` are 1-based."""

    text: str

    def __len__(self) -> int:
        return len(self.text)

    def __getitem__(self, i: int) -> str:
        if not 1 <= i <= len(self.text):
            raise IndexError(f"position {i} out of range 1..{len(self.text)}")
        return self.text[i - 1]

    def sub(self, i: int, j: int) -> "Word":
        """Slice w[i, j] (inclusive).  Defined iff 1 <= i <= j <= len(w)."""
        if not 1 <= i <= j <= len(self.text):
            raise IndexError(f"slice [{i}, {j}] out of range 1..{len(self.text)}")
        return Word(self.text[i - 1 : j])

    def __iter__(self) -> Iterator[str]:
        return iter(self.text)

    def __repr__(self) -> str:
        return f"Word({self.text!r})"


EMPTY = Word("")


def reverse(w: Word) -> Word:
    return Word(w.text[::-1])


def is_palindrome(w: Word) -> bool:
    """True iff w equals its reversal; the empty word is a palindrome."""
    return w.text == w.text[::-1]


def pad_finite(u: Word, pad: str = DEFAULT_PAD) -> Word:
    """Interleave the pad symbol between letters: u1 u2 ... un -> u1#u2#...#un.

    The input must be nonempty and must not contain the pad symbol.
    """
    if len(u) == 0:
        raise ValueError("cannot pad the empty word")
    if pad in u.text:
        raise ValueError("input already contains the reserved pad symbol")
    return Word(pad.join(u.text))


def pad_infinite_prefix(u: Word, n: int, pad: str = DEFAULT_PAD) -> Word:
    """Length-n prefix of the padded stream #u1#u2#...: pad at odd positions.

    Requires n <= 2*len(u) (enough source material) and a pad-free input.
    """
    if pad in u.text:
        raise ValueError("input already contains the reserved pad symbol")
    if n < 0 or n > 2 * len(u):
        raise ValueError(f"prefix length {n} exceeds available material {2 * len(u)}")
    out = []
    for i in range(1, n + 1):
        out.append(pad if i % 2 == 1 else u.text[i // 2 - 1])
    return Word("".join(out))


def mirror(lo: int, hi: int, j: int) -> int:
    """Reflection of j inside [lo, hi]: j - lo == hi - mirror(lo, hi, j)."""
    if not lo <= j <= hi:
        raise ValueError(f"position {j} outside [{lo}, {hi}]")
    return hi - (j - lo)


def mirror_set(lo: int, hi: int, D: Iterable[int]) -> frozenset[int]:
    """Elementwise reflection of D ∩ [lo, hi]; out-of-range elements drop."""
    return frozenset(hi - (j - lo) for j in D if lo <= j <= hi)


def spread_in(S: Iterable[int], xi: int, window: Interval) -> frozenset[int]:
    """All positions in the window congruent mod xi to some element of S.

    This is the window intersection of the (infinite) spread {i + a*xi};
    the unbounded set is never materialised.
    """
    if xi < 1:
        raise ValueError("step must be >= 1")
    residues = {s % xi for s in S}
    return frozenset(n for n in window.positions() if n % xi in residues)


def close(D: Iterable[int]) -> Interval | None:
    """Interval hull [min D, max D]; None for the empty set."""
    D = list(D)
    if not D:
        return None
    return Interval(min(D), max(D))


def diam(D: Iterable[int]) -> int:
    """max - min + 1, or 0 for the empty set."""
    D = list(D)
    if not D:
        return 0
    return max(D) - min(D) + 1


def shift(D: Iterable[int], j: int) -> frozenset[int]:
    """Translate every element by j; resulting positions must stay >= 1."""
    out = frozenset(i + j for i in D)
    if out and min(out) < 1:
        raise ValueError(f"shift by {j} produces non-positive positions")
    return out



def read_word_file(path: str | Path) -> tuple[str, list[Word]]:
    """Read the word text format: a ``pad=<sym>`` header, one word per line."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or not lines[0].startswith("pad="):
        raise ValueError("word file must start with a 'pad=' header line")
    pad = lines[0][len("pad=") :]
    if len(pad) != 1:
        raise ValueError(f"pad symbol must be a single character, got {pad!r}")
    return pad, [Word(line) for line in lines[1:] if line]


def write_word_file(path: str | Path, words: Iterable[Word], pad: str = DEFAULT_PAD) -> None:
    body = "\n".join([f"pad={pad}", *(w.text for w in words)])
    Path(path).write_text(body + "\n", encoding="utf-8")
