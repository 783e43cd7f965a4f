"""Canonical palindromes of runs, covering palindromes, center couples,
compound covering palindromes, and minimal canonical palindromes.

Palindrome centers are half-integers; they are carried as doubled integers
(the sum n1 + n2 of the span ends), so spread membership of a center is an
exact congruence mod 2*xi.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .index import index_of
from .palindromics import (
    ConsistencyError,
    PalCouple,
    PalExtTuple,
    pal_ext_set,
    to_pal_couple,
)
from .periodicity import Run, is_run, p_to_run, run_couple
from .words import Word, mirror, mirror_set


class PalSpan(NamedTuple):
    n1: int
    n2: int


COV_KINDS = ("all", "left", "right", "edge", "edge_left", "edge_right")


def pi_centers(z: Word, n1: int, couple: PalCouple) -> tuple[int, int]:
    """Doubled centers of the p1-copy and p2-copy laid out at position n1.

    Requires p1 p2 to prefix the suffix at n1.  The two centers always sit
    exactly xi/2 apart.
    """
    base = couple.p1 + couple.p2
    if z.text[n1 - 1 : n1 - 1 + couple.xi] != base:
        raise ValueError("couple base word does not prefix the suffix")
    n3 = n1 + couple.xi - 1
    n2 = n3 - len(couple.p2) + 1
    return n1 + n2 - 1, n2 + n3


def _center_residues(z: Word, run: Run) -> tuple[PalCouple, frozenset[int]]:
    couple = run_couple(z, run)
    g1, g2 = pi_centers(z, run.nu1, couple)
    step = 2 * run.xi
    return couple, frozenset({g1 % step, g2 % step})


def run_pal(z: Word, run: Run) -> frozenset[PalSpan]:
    """Spans inside the run whose (doubled) center lies on the xi-spread of
    the run's two base centers.  Every returned span is a palindrome."""
    if not is_run(z, run):
        raise ValueError(f"{run} is not a run of the word")
    _, residues = _center_residues(z, run)
    step = 2 * run.xi
    idx = index_of(z)
    spans = []
    for n1 in range(run.nu1, run.nu2 + 1):
        for n2 in range(n1, run.nu2 + 1):
            if (n1 + n2) % step in residues:
                if not idx.pal(n1, n2):
                    raise ConsistencyError(f"non-palindromic canonical span ({n1}, {n2})")
                spans.append(PalSpan(n1, n2))
    return frozenset(spans)


def in_run_pal(z: Word, run: Run, n1: int, n2: int) -> bool:
    """Membership in run_pal without enumerating the whole set."""
    if not (run.nu1 <= n1 <= n2 <= run.nu2):
        return False
    _, residues = _center_residues(z, run)
    return (n1 + n2) % (2 * run.xi) in residues


def _edge_spans(z: Word) -> tuple[PalSpan, ...]:
    """All edge spans: palindromic spans not extendable to a palindrome on
    both sides inside z (border-touching spans qualify vacuously)."""
    idx = index_of(z)
    key = "edge_spans"
    got = idx.memo.get(key)
    if got is None:
        n = len(z)
        out = set()
        for c2 in range(2, 2 * n + 1):
            widest = idx.widest_at_center(c2)
            if widest is not None:
                out.add(PalSpan(*widest))
        for j in range(1, n + 1):
            if idx.pal(1, j):
                out.add(PalSpan(1, j))
            if idx.pal(j, n):
                out.add(PalSpan(j, n))
        got = tuple(sorted(out))
        idx.memo[key] = got
    return got


def is_edge(z: Word, n1: int, n2: int) -> bool:
    if n1 == 1 or n2 == len(z):
        return True
    return not index_of(z).pal(n1 - 1, n2 + 1)


def cov_pal(z: Word, n: int, kind: str = "all") -> frozenset[PalSpan]:
    """Palindromic spans containing position n, filtered by kind.

    left/right compare the doubled center with 2n; edge means not extendable
    on both sides inside z.
    """
    if kind not in COV_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    idx = index_of(z)
    nlen = len(z)
    if not 1 <= n <= nlen:
        raise ValueError(f"position {n} out of range")
    if kind.startswith("edge"):
        spans = [sp for sp in _edge_spans(z) if sp.n1 <= n <= sp.n2]
    else:
        P = idx.pal_matrix()
        spans = [
            PalSpan(n1, n2)
            for n1 in range(1, n + 1)
            for n2 in range(n, nlen + 1)
            if P[n1 - 1, n2 - 1]
        ]
    if kind in ("left", "edge_left"):
        spans = [sp for sp in spans if sp.n1 + sp.n2 >= 2 * n]
    elif kind in ("right", "edge_right"):
        spans = [sp for sp in spans if sp.n1 + sp.n2 <= 2 * n]
    return frozenset(spans)


def ct_pc(z: Word, span: PalSpan, n: int) -> PalCouple:
    """Center palindromic couple: the canonical couple of the sub-palindrome
    of the span centered like the span and starting at n."""
    n1, n2 = span
    idx = index_of(z)
    if not (n1 <= n <= n2 and idx.pal(n1, n2)):
        raise ValueError("span does not cover the position")
    if not is_edge(z, n1, n2) or n1 + n2 < 2 * n:
        raise ValueError("span is not an edge-left covering span of the position")
    return to_pal_couple(z, n, mirror(n1, n2, n))


def is_factor_of_power(span_text: str, couple: PalCouple) -> bool:
    """Does the span occur inside the bi-infinite power of p1 p2?

    A length-L factor occurs in the power iff it occurs in the unrolling of
    p1 p2 to length L + 2 |p1 p2| (any occurrence can be shifted by whole
    periods to start within the first period window).
    """
    base = couple.p1 + couple.p2
    target = len(span_text) + 2 * len(base)
    unrolled = base * (target // len(base) + 1)
    return span_text in unrolled[:target]


def cov_pal_cmd(z: Word, n: int) -> frozenset[PalSpan]:
    """Compound covering palindromes of n: edge-left spans that are not a
    factor of the infinite power of their center couple."""
    out = []
    for span in cov_pal(z, n, "edge_left"):
        couple = ct_pc(z, span, n)
        if not is_factor_of_power(z.text[span.n1 - 1 : span.n2], couple):
            out.append(span)
    return frozenset(out)


def p_to_run_set(z: Word, spans: Iterable[PalSpan]) -> frozenset[Run]:
    return frozenset(p_to_run(z, sp.n1, sp.n2) for sp in spans)


# -- run-restricted palindromic extensions ------------------------------------


def pal_ext_span(z: Word, D: Iterable[int], n1: int, n2: int) -> frozenset[PalExtTuple]:
    """Extension tuples of D whose extension palindrome is the sub-span of
    (n1, n2) centered like it: sigma == mirror(n1, n2, n)."""
    if not index_of(z).pal(n1, n2):
        raise ValueError("span is not a palindrome")
    out = []
    for t in pal_ext_set(z, D):
        if n1 <= t.n <= n2 and mirror(n1, n2, t.n) == t.sigma:
            out.append(t)
    return frozenset(out)


def pal_ext_run(
    z: Word, D1: Iterable[int], xi1: int, run: Run
) -> frozenset[PalExtTuple]:
    """Extension tuples of D1 that reach past the periodic prolongation of
    (min D1, xi1) and land on a canonical palindrome of the run."""
    D1 = frozenset(D1)
    if not D1:
        raise ValueError("D1 must be nonempty")
    idx = index_of(z)
    mu3 = idx.per_prolong(min(D1), xi1)
    _, residues = _center_residues(z, run)
    step = 2 * run.xi
    out = []
    for t in pal_ext_set(z, D1):
        s = t.sigma
        if (
            s > mu3
            and run.nu1 <= t.n
            and s <= run.nu2
            and (t.n + s) % step in residues
        ):
            out.append(t)
    return frozenset(out)


def min_run_pal(z: Word, D1: Iterable[int], xi1: int, run: Run) -> PalSpan:
    """Minimal canonical palindrome: smallest start among the run-restricted
    extensions of D1, then the smallest end at that start.

    Raises ValueError when the restricted extension set is empty (the
    operation is only defined there), and checks the structural bounds the
    downstream constructions rely on.
    """
    D1 = frozenset(D1)
    tuples = pal_ext_run(z, D1, xi1, run)
    if not tuples:
        raise ValueError("no run-restricted extensions: minimal span undefined")
    idx = index_of(z)
    mu3 = idx.per_prolong(min(D1), xi1)
    d1 = min(t.n for t in tuples)
    d2 = min(t.sigma for t in tuples if t.n == d1)
    span = PalSpan(d1, d2)
    if not in_run_pal(z, run, d1, d2):
        raise ConsistencyError(f"minimal span {span} left the canonical set")
    if not d2 - (mu3 + 1) < run.xi:
        raise ConsistencyError(f"minimal end {d2} overshoots the prolongation window")
    if not max(D1) - d1 + 1 <= run.xi:
        raise ConsistencyError("minimal start leaves cluster positions beyond one period")
    if not d1 + d2 >= 2 * (mu3 - xi1):
        raise ConsistencyError("minimal span center fell below the prolongation bound")
    return span


def mirrored_cluster(z: Word, span: PalSpan, D1: Iterable[int]) -> frozenset[int]:
    """Reflection of the cluster through the span (out-of-span positions drop)."""
    return mirror_set(span.n1, span.n2, D1)

