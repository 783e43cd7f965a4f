"""Base positions of the nested palindromic prefix chain, interval
height/width, the 4-interval decomposition, the uniform-cover property, and
the final counting harness.

For a word z whose nonempty non-periodic palindromic prefixes are
z_1 < z_2 < ... < z_h (with z_h = z), each z_{g+1} equals z_g w_g z_g for a
unique palindrome w_g, so z_g occurs at 2^(h-g) "natural" positions.  Those
(g, start) pairs are the base positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from . import pl
from .index import index_of
from .nps import C2, C3, Budget, DEFAULT_BUDGET, lam, nestper_member, theta
from .palindromics import ConsistencyError, npp
from .words import DEFAULT_PAD, Interval, Word


class BasePos(NamedTuple):
    g: int
    e: int


def nested_palindrome(h: int, pad: str = DEFAULT_PAD, letter: str = "a") -> Word:
    """The standard test word with exactly h non-periodic palindromic
    prefixes: z_1 = pad, z_2 = pad letter pad, and each level wraps the
    previous one around a fresh-letter core (letter pad fresh pad letter)."""
    if h < 1:
        raise ValueError("h must be >= 1")
    if h > 25:
        raise ValueError("not enough fresh letters for h > 25")
    word = pad
    for i in range(1, h):
        if i == 1:
            hat = letter
        else:
            fresh = chr(ord("b") + i - 1)
            hat = f"{letter}{pad}{fresh}{pad}{letter}"
        word = word + hat + word
    return Word(word)


def npp_chain(z: Word) -> tuple[int, ...]:
    return npp(z)


def hat_words(z: Word) -> list[Word]:
    """The palindromic middles w_g with z_{g+1} = z_g w_g z_g; their
    existence and uniqueness follow from the prefixes being non-periodic."""
    chain = npp(z)
    idx = index_of(z)
    out = []
    for a, b in zip(chain, chain[1:]):
        if not 2 * a < b:
            raise ConsistencyError(f"prefix lengths {a}, {b} violate doubling")
        mid = z.sub(a + 1, b - a)
        if not idx.pal(a + 1, b - a):
            raise ConsistencyError(f"middle of levels {a}->{b} is not a palindrome")
        if z.text[: b] != z.text[:a] + mid.text + z.text[:a]:
            raise ConsistencyError(f"levels {a}->{b} do not nest")
        out.append(mid)
    return out


def build_base(z: Word) -> frozenset[BasePos]:
    """All (g, e) with z_g naturally occurring at e, by the two-copy
    recursion; needs at least two chain levels."""
    chain = npp(z)
    h = len(chain)
    if h < 2:
        raise ValueError("need a chain of at least two palindromic prefixes")
    hat_words(z)  # validates the nesting equations
    bb: set[BasePos] = {BasePos(1, 1)}
    for j in range(2, h + 1):
        offset = chain[j - 1] - chain[j - 2]  # |z_{j-1} w_{j-1}|
        bb = {BasePos(g, e + offset) for g, e in bb} | bb | {BasePos(j, 1)}
    for g, e in bb:
        length = chain[g - 1]
        if z.text[e - 1 : e - 1 + length] != z.text[:length]:
            raise ConsistencyError(f"({g}, {e}) is not an occurrence of level {g}")
    return frozenset(bb)


def b_tilde(bb: Iterable[BasePos]) -> frozenset[int]:
    """The bare base positions (every pair projects to a level-1 position)."""
    return frozenset(e for _, e in bb)


def base_interval(z: Word, bb: Iterable[BasePos], n1: int, n2: int) -> frozenset[BasePos]:
    """Pairs whose occurrence lies inside [n1, n2] entirely."""
    chain = npp(z)
    return frozenset(
        BasePos(g, e) for g, e in bb if n1 <= e and e + chain[g - 1] - 1 <= n2
    )


def height_width(
    z: Word, bb: Iterable[BasePos], n1: int, n2: int
) -> tuple[int, int]:
    """Largest chain level inside the interval, and the largest
    right-edge-to-left-edge span over ordered pairs of contained
    occurrences; (0, 0) when none fit."""
    if n1 > n2:
        raise ValueError("interval reversed")
    inside = base_interval(z, bb, n1, n2)
    if not inside:
        return 0, 0
    chain = npp(z)
    height = max(g for g, _ in inside)
    width = max(
        e1 + chain[g1 - 1] - e2 for g1, e1 in inside for _, e2 in inside
    )
    return height, width


def y_decomposition(
    z: Word, bb: Iterable[BasePos], n1: int, n2: int
) -> frozenset[Interval]:
    """At most four subintervals carrying the same contained occurrences:
    the one or two top-level occurrences, plus the flanks before and after
    them."""
    bb = frozenset(bb)
    inside = base_interval(z, bb, n1, n2)
    if not inside:
        raise ValueError("no contained occurrences to decompose")
    chain = npp(z)
    beta = max(g for g, _ in inside)
    top = sorted(e for g, e in inside if g == beta)
    blen = chain[beta - 1]
    parts = [Interval(e, e + blen - 1) for e in top]
    left_edge = min(top) - 1
    right_edge = max(top) + blen
    if n1 <= left_edge:
        parts.append(Interval(n1, left_edge))
    if right_edge <= n2:
        parts.append(Interval(right_edge, n2))
    out = frozenset(parts)

    if len(out) > 4:
        raise ConsistencyError("decomposition produced more than four intervals")
    union: set[BasePos] = set()
    for part in out:
        _, width = height_width(z, bb, part.lo, part.hi)
        if width > blen:
            raise ConsistencyError("a part is wider than the top level")
        union |= base_interval(z, bb, part.lo, part.hi)
    if union != inside:
        raise ConsistencyError("decomposition changed the contained occurrences")
    if not any(
        z.text[part.lo - 1 : part.hi] == z.text[:blen] for part in out
    ):
        raise ConsistencyError("no part equals the top-level prefix")
    return out


def uc_witness(
    z: Word, S: Iterable[int], mu1: int, mu2: int, xi: int
) -> frozenset[int] | None:
    """Window starts delta such that the length-xi windows catch exactly
    S ∩ [mu1, mu2]; at most c2 of them.  None when no such witness is found
    (which the uniform-cover property rules out for the base positions).

    Construction: decompose [mu1, mu2] into at most four parts, anchor up to
    two windows at the first S-element of each part (clamped so windows do
    not overshoot mu2 where possible), then drop windows that add nothing.
    """
    if not 1 <= mu1 <= mu2 <= len(z):
        raise ValueError("interval out of range")
    if not index_of(z).has_period(mu1, mu2, xi):
        raise ValueError("xi is not a period of the interval")
    S = frozenset(S)
    target = frozenset(x for x in S if mu1 <= x <= mu2)
    if not target:
        return frozenset()

    try:
        bb = _cached_base(z)
    except ValueError:
        bb = frozenset()  # no prefix chain: single-anchor best effort
    inside = base_interval(z, bb, mu1, mu2) if bb else frozenset()
    anchors: list[int] = []
    if inside:
        for part in y_decomposition(z, bb, mu1, mu2):
            hits = sorted(x for x in target if part.lo <= x <= part.hi)
            if hits:
                anchors.extend((hits[0], hits[0] + xi))
    else:
        first = min(target)
        anchors.extend((first, first + xi))

    clamp_max = mu2 - xi + 1
    cleaned = []
    for delta in anchors:
        if clamp_max >= mu1:
            delta = min(delta, clamp_max)
        if mu1 <= delta <= mu2:
            cleaned.append(delta)

    chosen: list[int] = []
    covered: set[int] = set()
    for delta in sorted(set(cleaned)):
        gain = {x for x in S if delta <= x <= delta + xi - 1}
        if gain - covered:
            chosen.append(delta)
            covered |= gain
    if covered != target or len(chosen) > C2:
        return None
    return frozenset(chosen)


def _cached_base(z: Word) -> frozenset[BasePos]:
    idx = index_of(z)
    bb = idx.memo.get("base_positions")
    if bb is None:
        bb = build_base(z)
        idx.memo["base_positions"] = bb
    return bb


# -- counting ------------------------------------------------------------------


@dataclass(frozen=True)
class PsiReport:
    m: int
    bound: int
    observed_max: int
    witness: tuple[int, ...]
    chain_checked: int

    @property
    def ok(self) -> bool:
        return self.observed_max <= self.bound


def psi_check(
    z: Word, m: int, budget: Budget = DEFAULT_BUDGET, pad: str = DEFAULT_PAD
) -> PsiReport:
    """Largest |D ∩ B| over degree-m clusters D against the lambda bound,
    for B the base positions of z.

    Degree 0 clusters are singletons, so the maximum is 1.  For m >= 1 every
    interval hull intersected with B is realised by a cluster (the interval
    with the trivially-vacuous period), so the exact maximum is the best
    interval intersection; the maximiser is re-validated by the membership
    checker.  Chain-produced clusters are checked as well.
    """
    if m < 0:
        raise ValueError("degree must be >= 0")
    h = len(npp(z))
    bound = lam(h, m)
    S = b_tilde(_cached_base(z))
    if m == 0:
        observed, witness = 1, (min(S),)
    else:
        observed, witness = len(S), tuple(sorted(S))
        span = Interval(min(S), max(S)) if S else None
        if span is not None:
            cluster = frozenset(span.positions())
            if not nestper_member(z, m, cluster, len(z), budget):
                raise ConsistencyError("interval maximiser rejected by the checker")
    chain_checked = 0
    if m >= 1 and z.text[0] == pad:
        from .nps import cover_chain

        for level in cover_chain(z, min(m, 2), budget, pad):
            for member in level.cover.members:
                chain_checked += 1
                if len(member.D & S) > bound:
                    raise ConsistencyError("a chain cluster broke the lambda bound")
    report = PsiReport(m, bound, observed, witness, chain_checked)
    if not report.ok:
        raise ConsistencyError(f"psi({m}) = {observed} exceeds lambda = {bound}")
    return report


def _eq1_holds(h: int, k: int) -> bool:
    """2^(h-1) > k * (c3 h)^m * lambda(h, m) for every m in 1..k."""
    lhs = 1 << (h - 1)
    return all(lhs > k * (C3 * h) ** m * lam(h, m) for m in range(1, k + 1))


def h0_scan(k: int, limit: int = 4096) -> int:
    """Smallest h making the exponential side win at every level up to k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    for h in range(1, limit + 1):
        if _eq1_holds(h, k):
            return h
    raise ValueError(f"no admissible h up to {limit}")


def h0_scan_alt(k: int, limit: int = 4096) -> int:
    """Independent recomputation: compare bit lengths instead of values and
    scan downward for the last failing h."""
    if k < 1:
        raise ValueError("k must be >= 1")

    def holds(h: int) -> bool:
        # 2^(h-1) > X  <=>  h - 1 >= X.bit_length()  (X >= 1)
        return all(
            h - 1 >= (k * (C3 * h) ** m * lam(h, m)).bit_length()
            for m in range(1, k + 1)
        )

    last_fail = 0
    for h in range(limit, 0, -1):
        if not holds(h):
            last_fail = h
            break
    if last_fail == limit:
        raise ValueError(f"no admissible h up to {limit}")
    return last_fail + 1


@dataclass(frozen=True)
class HarnessReport:
    h: int
    k: int
    base_count: int
    cover_intersections: dict[int, tuple[int, ...]]
    covered_base_positions: int
    bound: int
    bound_exceeds_observed: bool
    lam_value: int
    theta_values: tuple[int, ...]
    h0: int
    eq1_holds: bool


def counting_harness(z: Word, k: int, pad: str = DEFAULT_PAD) -> HarnessReport:
    """Exact small-scale audit of the counting argument's ingredients.

    Counts base positions (2^(h-1)), intersects them with the
    length-m position sets for m <= k, evaluates the k (c3 h)^k lambda(h, k)
    bound in exact integers, and reports whether the exponential-vs-
    polynomial inequality already holds at this h (at desk scale it
    typically does not; that is reported, not asserted).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    h = len(npp(z))
    S = b_tilde(_cached_base(z))
    inter: dict[int, tuple[int, ...]] = {}
    union: set[int] = set()
    for m in range(1, k + 1):
        hit = S & pl.cover(z, m, pad)
        inter[m] = tuple(sorted(hit))
        union |= hit
    bound = k * (C3 * h) ** k * lam(h, k)
    report = HarnessReport(
        h=h,
        k=k,
        base_count=len(S),
        cover_intersections=inter,
        covered_base_positions=len(union),
        bound=bound,
        bound_exceeds_observed=bound >= len(union),
        lam_value=lam(h, k),
        theta_values=tuple(theta(h, m) for m in range(0, k + 1)),
        h0=h0_scan(k),
        eq1_holds=_eq1_holds(h, k),
    )
    if not report.bound_exceeds_observed:
        raise ConsistencyError("counting bound fell below the observed intersection")
    return report
