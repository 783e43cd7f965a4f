"""Nested periodic structures: membership, minimal covers, bottoms and
separations, and the constructive cover-building pipeline.

A candidate structure is a pair (D, xi): D a nonempty position set equal to
its xi-spread inside its own hull, with xi a period of the word between
min D and max D.  Degree-0 structures are the singletons; a structure has
degree m when every xi-window cut of D can be covered by at most theta(m)
degree-(m-1) clusters inside the cut's hull.

Membership checking is exact: a cut of size at most theta(m) is always
coverable (one singleton per element), so the search only has to work when
a cut is larger than theta(m), which at desk scale (words shorter than
theta(1) = 2*c1*c3*h) cannot happen.  The search budget guards that
regime.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from . import pl
from .covpal import (
    cov_pal,
    min_run_pal,
    mirrored_cluster,
    pal_ext_run,
    p_to_run_set,
)
from .index import index_of
from .palindromics import ConsistencyError, npp, sigma_set, tau_and_ordinary
from .periodicity import Run
from .words import Interval, Word, shift, spread_in

C1 = 5
C2 = 8
C3 = 10


def theta(h: int, m: int) -> int:
    """Per-degree cut-cover budget (exact integer)."""
    return (2 * C1 * C3 * h) ** m


def lam(h: int, m: int) -> int:
    """Cluster/base-position intersection bound (exact integer)."""
    return C2**m * (2 * C1 * C3 * h) ** (m * m)


@dataclass(frozen=True)
class Constants:
    """Bound bookkeeping for one ambient word: h is its non-periodic
    palindromic prefix count, k the padded-palindromic-length level under
    test."""

    h: int
    k: int = 0

    def theta(self, m: int) -> int:
        return theta(self.h, m)

    def lam(self, m: int) -> int:
        return lam(self.h, m)


class BudgetExceeded(RuntimeError):
    """Exact search left its implemented regime."""


@dataclass(frozen=True)
class Budget:
    """Limits of the regime the exact searches are vouched for.

    Membership and omega answers are exact whenever they return; the limits
    describe when the one unimplemented case (minimal covers of size >= 2,
    needed only once some cut outgrows theta) may be hit, which requires
    words at least theta(1) = 100h long.
    """

    max_len: int = 64
    max_m: int = 2
    max_set: int = 16


DEFAULT_BUDGET = Budget()


class Nps(NamedTuple):
    D: frozenset
    xi: int


@dataclass(frozen=True)
class NpsCover:
    members: tuple[Nps, ...]
    degree: int
    verified: str  # "exact" | "witnessed"

    def positions(self) -> frozenset[int]:
        out: set[int] = set()
        for member in self.members:
            out |= member.D
        return frozenset(out)

    def __len__(self) -> int:
        return len(self.members)


def _sorted_members(members: Iterable[Nps]) -> tuple[Nps, ...]:
    return tuple(sorted(set(members), key=lambda c: (min(c.D), c.xi, sorted(c.D))))


def ambient_h(z: Word) -> int:
    idx = index_of(z)
    h = idx.memo.get("ambient_h")
    if h is None:
        h = len(npp(z))
        idx.memo["ambient_h"] = h
    return h


# -- membership ----------------------------------------------------------------


def is_tilde_nestper(z: Word, D: Iterable[int], xi: int) -> bool:
    """Both structure clauses, checked exactly; false for empty D."""
    D = frozenset(D)
    if not D or xi < 1:
        return False
    lo, hi = min(D), max(D)
    if lo < 1 or hi > len(z):
        return False
    if spread_in(D, xi, Interval(lo, hi)) != D:
        return False
    return index_of(z).has_period(lo, hi, xi)


def cuts(D: Iterable[int], xi: int) -> Iterator[frozenset]:
    """The inclusion-maximal window cuts D ∩ [a, a+xi-1]; just the empty set
    for empty D.

    Every cut (subset of diameter <= xi) is contained in a maximal window
    cut, and a cover of the window cut restricts (interval restriction) to a
    cover of the sub-cut of the same size, so maximal cuts suffice for
    membership checking.
    """
    D = frozenset(D)
    if not D:
        yield frozenset()
        return
    windows = set()
    for a in range(min(D), max(D) + 1):
        cut = frozenset(x for x in D if a <= x <= a + xi - 1)
        if cut:
            windows.add(cut)
    for cut in windows:
        if not any(cut < other for other in windows):
            yield cut


def nestper_member(
    z: Word, m: int, D: Iterable[int], xi: int, budget: Budget = DEFAULT_BUDGET
) -> bool:
    """Exact degree-m membership of (D, xi)."""
    if m < 0:
        raise ValueError("degree must be >= 0")
    D = frozenset(D)
    idx = index_of(z)
    key = ("nestper", m, D, xi)
    got = idx.memo.get(key)
    if got is not None:
        return got
    if not is_tilde_nestper(z, D, xi):
        result = False
    elif m == 0:
        result = len(D) == 1
    else:
        th = theta(ambient_h(z), m)
        result = True
        for cut in cuts(D, xi):
            if len(cut) <= th:
                continue  # one singleton per element is a valid cover
            value, _ = omega(z, m - 1, cut, budget)
            if value > th:
                result = False
                break
    idx.memo[key] = result
    return result


def omega(
    z: Word, m: int, D: Iterable[int], budget: Budget = DEFAULT_BUDGET
) -> tuple[int, NpsCover]:
    """Minimal cover size at degree m, with a deterministic witness cover.

    Degree 0 forces one singleton per element.  For higher degrees the
    spread-closure of D inside its hull is tried at every period xi
    ascending; the first structure that passes membership is a one-cluster
    cover, and no cover can be smaller.  A failure of every xi (possible
    only when some cut exceeds theta) falls outside the implemented search
    and raises BudgetExceeded.
    """
    D = frozenset(D)
    if not D:
        return 0, NpsCover((), m, "exact")
    if m == 0:
        members = _sorted_members(Nps(frozenset({d}), 1) for d in D)
        return len(D), NpsCover(members, 0, "exact")
    lo, hi = min(D), max(D)
    window = Interval(lo, hi)
    for xi in range(1, len(z) + 1):
        C = spread_in(D, xi, window)
        if nestper_member(z, m, C, xi, budget):
            return 1, NpsCover((Nps(C, xi),), m, "exact")
    raise BudgetExceeded(
        f"no single-cluster cover of a {len(D)}-element set at degree {m}; "
        f"multi-cluster search is outside the implemented regime "
        f"(budget: len<={budget.max_len}, m<={budget.max_m}, set<={budget.max_set})"
    )


def min_nps_cover(
    z: Word, m: int, D: Iterable[int], budget: Budget = DEFAULT_BUDGET
) -> NpsCover:
    return omega(z, m, D, budget)[1]


def validate_cover(
    z: Word,
    degree: int,
    members: Iterable[Nps],
    budget: Budget = DEFAULT_BUDGET,
) -> str:
    """Check every member structurally and, where the budget allows, by the
    exact membership checker.  Returns "exact" or "witnessed"."""
    verified = "exact"
    for member in members:
        if not is_tilde_nestper(z, member.D, member.xi):
            raise ConsistencyError(f"cover member {member} is not a structure")
        try:
            if not nestper_member(z, degree, member.D, member.xi, budget):
                raise ConsistencyError(f"cover member {member} fails at degree {degree}")
        except BudgetExceeded:
            verified = "witnessed"
    return verified


def _restrict_members(members: Iterable[Nps], lo: int, hi: int) -> list[Nps]:
    out = []
    for member in members:
        D = frozenset(x for x in member.D if lo <= x <= hi)
        if D:
            out.append(Nps(D, member.xi))
    return out


# -- bottoms and separation ------------------------------------------------------


def bottoms(z: Word, nps: Nps) -> frozenset:
    """All bottoms: window cuts of diameter <= xi whose spread rebuilds D.

    A bottom must contain exactly one representative of every residue of D
    mod xi, all within one window, so the bottoms are exactly the maximal
    window cuts that carry every residue.
    """
    D, xi = nps
    if not is_tilde_nestper(z, D, xi):
        raise ValueError("not a nested periodic structure candidate")
    residues = {d % xi for d in D}
    hull = Interval(min(D), max(D))
    out = []
    for cut in cuts(D, xi):
        if {d % xi for d in cut} == residues and spread_in(cut, xi, hull) == D:
            out.append(cut)
    return frozenset(out)


def separate(z: Word, nps: Nps) -> tuple[frozenset, frozenset]:
    """Split D into the part far from (D1) and within (D2) c1*xi of the
    periodic prolongation endpoint."""
    D, xi = nps
    mu3 = index_of(z).per_prolong(min(D), xi)
    D2 = frozenset(d for d in D if mu3 - C1 * xi + 1 <= d <= mu3)
    return D - D2, D2


def bottom_and_separate(z: Word, nps: Nps) -> tuple[frozenset, frozenset, frozenset]:
    """(bottoms, D1, D2) of the structure."""
    D1, D2 = separate(z, nps)
    return bottoms(z, nps), D1, D2


# -- constructive operations -----------------------------------------------------


@dataclass(frozen=True)
class FoldResult:
    G: frozenset
    witness: NpsCover


def fold_cover(
    z: Word,
    m: int,
    nps: Nps,
    window: Interval,
    xi2: int,
    alpha: int,
    budget: Budget = DEFAULT_BUDGET,
) -> FoldResult:
    """Fold D into the first xi2-block of the window: per-block translates
    of D land in [window.lo, window.lo + xi2 - 1], their union G satisfies
    D ⊆ Spread(G, xi2), and the translated blocks witness a degree-m cover
    of G of size <= alpha."""
    D, xi = nps
    if not D or not all(d in window for d in D):
        raise ValueError("cluster must be nonempty and inside the window")
    if not index_of(z).has_period(window.lo, window.hi, xi2):
        raise ValueError("xi2 is not a period of the window")
    if len(window) > alpha * xi2:
        raise ValueError("window longer than alpha periods")
    members = []
    G: set[int] = set()
    for i in range(1, alpha + 1):
        block = frozenset(
            d for d in D if window.lo + (i - 1) * xi2 <= d <= window.lo + i * xi2 - 1
        )
        if not block:
            continue
        moved = shift(block, -(i - 1) * xi2)
        G |= moved
        members.append(Nps(moved, xi))
    result = frozenset(G)
    if result and not (
        result <= frozenset(Interval(window.lo, window.lo + xi2 - 1).positions())
    ):
        raise ConsistencyError("folded set left the first period block")
    if not D <= spread_in(result, xi2, window):
        raise ConsistencyError("cluster not contained in the spread of its fold")
    verified = validate_cover(z, m, members, budget) if members else "exact"
    return FoldResult(result, NpsCover(_sorted_members(members), m, verified))


def cut_cover(
    z: Word,
    m: int,
    nps: Nps,
    bottom: frozenset,
    cut: frozenset,
    alpha: int | None = None,
    budget: Budget = DEFAULT_BUDGET,
) -> NpsCover:
    """Cover a cut of (D, xi) by two translated copies of a bottom cover.

    The bottom's minimal degree-(m-1) cover, translated to the two xi-windows
    that can intersect the cut and restricted to the cut's hull, covers the
    cut with at most twice the bottom cover's size.
    """
    if m < 1:
        raise ValueError("degree must be >= 1")
    D, xi = nps
    if not cut <= D or (cut and max(cut) - min(cut) + 1 > xi):
        raise ValueError("not a cut of the structure")
    if bottom not in bottoms(z, nps):
        raise ValueError("not a bottom of the structure")
    if not cut:
        return NpsCover((), m - 1, "exact")
    value, bottom_cover = omega(z, m - 1, bottom, budget)
    if alpha is not None and value > alpha:
        raise ValueError(f"bottom cover size {value} exceeds alpha={alpha}")
    mu0 = min(bottom)
    j = (min(cut) - mu0) // xi + 1
    lo, hi = min(cut), max(cut)
    members: list[Nps] = []
    for delta in (j - 1, j):
        for member in bottom_cover.members:
            moved = frozenset(x + delta * xi for x in member.D if 1 <= x + delta * xi)
            members.extend(_restrict_members([Nps(moved, member.xi)], lo, hi))
    members = list(dict.fromkeys(members))
    covered = set()
    for member in members:
        covered |= member.D
    if not cut <= covered:
        raise ConsistencyError("translated bottom covers miss part of the cut")
    if len(members) > 2 * value:
        raise ConsistencyError("cut cover exceeded twice the bottom cover size")
    verified = validate_cover(z, m - 1, members, budget)
    return NpsCover(_sorted_members(members), m - 1, verified)


@dataclass(frozen=True)
class InsideResult:
    cluster: Nps | None       # (G, xi) covering the in-prolongation extensions
    base: frozenset           # G0, the fold of everything into one period
    base_cover: NpsCover      # degree-m witness cover of G0
    target: frozenset         # extension ends inside the prolongation


def inside_extension(
    z: Word, m: int, nps: Nps, budget: Budget = DEFAULT_BUDGET
) -> InsideResult:
    """Cover the extension ends of D that stay inside the periodic
    prolongation of (min D, xi) by a single degree-(m+1) cluster (G, xi).

    Pipeline: cover the first-window cut of D, take each piece's extension
    ends clipped to c1 periods, fold them back into one period, and spread
    the union across the prolongation.
    """
    if m < 1:
        raise ValueError("degree must be >= 1")
    D, xi = nps
    if not nestper_member(z, m, D, xi, budget):
        raise ValueError("input is not a degree-m structure")
    idx = index_of(z)
    h = ambient_h(z)
    mu1 = min(D)
    mu3 = idx.per_prolong(mu1, xi)
    target = frozenset(s for s in sigma_set(z, D) if mu1 <= s <= mu3)

    clip_hi = min(mu3, mu1 + C1 * xi - 1)
    window = Interval(mu1, clip_hi)
    c0 = frozenset(d for d in D if d <= mu1 + xi - 1)
    w0, cover0 = omega(z, m - 1, c0, budget)
    if w0 > theta(h, m):
        raise ConsistencyError("first-window cut cover exceeded theta")

    base_members: list[Nps] = []
    G0: set[int] = set()
    for piece in cover0.members:
        ends = frozenset(s for s in sigma_set(z, piece.D) if mu1 <= s <= clip_hi)
        if not ends:
            continue
        wi, cover_i = omega(z, m, ends, budget)
        if wi > C3 * h:
            raise ConsistencyError("extension cover of a piece exceeded c3*h")
        for sub in cover_i.members:
            fold = fold_cover(z, m, sub, window, xi, C1, budget)
            G0 |= fold.G
            base_members.extend(fold.witness.members)
    if len(base_members) > C1 * C3 * h * theta(h, m):
        raise ConsistencyError("fold bookkeeping exceeded c1*c3*h*theta(m)")
    base = frozenset(G0)
    G = spread_in(base, xi, Interval(mu1, mu3)) if base else frozenset()
    if not target <= G:
        raise ConsistencyError("in-prolongation extension ends escaped the cluster")
    cluster = None
    if G:
        cluster = Nps(G, xi)
        if not is_tilde_nestper(z, G, xi):
            raise ConsistencyError("constructed cluster is not a structure")
        try:
            if not nestper_member(z, m + 1, G, xi, budget):
                raise ConsistencyError("constructed cluster fails degree m+1")
        except BudgetExceeded:
            pass
    base_verified = validate_cover(z, m, base_members, budget) if base_members else "exact"
    return InsideResult(
        cluster, base, NpsCover(_sorted_members(base_members), m, base_verified), target
    )


def near_extension(
    z: Word, D2: Iterable[int], xi: int, m: int, budget: Budget = DEFAULT_BUDGET
) -> NpsCover:
    """Cover the extension ends of a cluster lying within c1*xi of its
    prolongation endpoint by at most c1 degree-(m+1) clusters.

    Each xi-window slice of D2 is lifted to the trivial full-word period
    (diameter <= xi allows it) and extended inside that prolongation, which
    spans the whole word.
    """
    if m < 1:
        raise ValueError("degree must be >= 1")
    D2 = frozenset(D2)
    if not D2:
        return NpsCover((), m + 1, "exact")
    idx = index_of(z)
    mu3 = idx.per_prolong(min(D2), xi)
    if not all(mu3 - C1 * xi + 1 <= d <= mu3 for d in D2):
        raise ValueError("cluster is not within c1 periods of its prolongation")
    target = sigma_set(z, D2)
    members: list[Nps] = []
    base = min(D2)
    for i in range(1, C1 + 1):
        block = frozenset(
            d for d in D2 if base + (i - 1) * xi <= d <= base + i * xi - 1
        )
        if not block:
            continue
        lifted = Nps(block, len(z))
        res = inside_extension(z, m, lifted, budget)
        block_target = sigma_set(z, block)
        if res.cluster is None:
            if block_target:
                raise ConsistencyError("lifted block lost its extension ends")
            continue
        if not block_target <= res.cluster.D:
            raise ConsistencyError("lifted block cover misses extension ends")
        members.append(res.cluster)
    if len(members) > C1:
        raise ConsistencyError("near-extension cover exceeded c1 clusters")
    if target:
        members = _restrict_members(members, min(target), max(target))
        covered: set[int] = set()
        for member in members:
            covered |= member.D
        if not target <= covered:
            raise ConsistencyError("near-extension cover misses extension ends")
    else:
        members = []
    verified = validate_cover(z, m + 1, members, budget) if members else "exact"
    return NpsCover(_sorted_members(members), m + 1, verified)


def outside_extension(
    z: Word,
    D1: Iterable[int],
    xi1: int,
    run: Run,
    m: int,
    budget: Budget = DEFAULT_BUDGET,
) -> Nps:
    """Single degree-(m+1) cluster covering the extension ends of D1 that
    land on canonical palindromes of the run beyond the prolongation.

    The cluster is the xi2-spread, between the prolongation endpoint and the
    run end, of the mirror of D1 through the minimal canonical palindrome.
    """
    if m < 1:
        raise ValueError("degree must be >= 1")
    D1 = frozenset(D1)
    tuples = pal_ext_run(z, D1, xi1, run)
    if not tuples:
        raise ValueError("no run-restricted extensions to cover")
    idx = index_of(z)
    mu3 = idx.per_prolong(min(D1), xi1)
    span = min_run_pal(z, D1, xi1, run)
    G0 = mirrored_cluster(z, span, D1)
    if G0 and max(G0) - min(G0) + 1 > run.xi:
        raise ConsistencyError("mirrored cluster wider than one run period")
    G = spread_in(G0, run.xi, Interval(mu3 + 1, run.nu2))
    ends = frozenset(t.sigma for t in tuples)
    if not ends <= G:
        raise ConsistencyError("run-restricted extension ends escaped the cluster")
    if not is_tilde_nestper(z, G, run.xi):
        raise ConsistencyError("outside cluster is not a structure")
    try:
        if not nestper_member(z, m + 1, G, run.xi, budget):
            raise ConsistencyError("outside cluster fails degree m+1")
    except BudgetExceeded:
        pass
    return Nps(G, run.xi)


@dataclass(frozen=True)
class ExtendResult:
    cover: NpsCover
    target: frozenset
    inside_count: int
    near_count: int
    outside_count: int


def _base_extension_cover(z: Word, n: int, budget: Budget) -> NpsCover:
    """Degree-1 cover of the extension ends of a single position: one
    cluster per canonical couple, each an arithmetic progression of ends."""
    from .palindromics import pal_ext

    groups: dict[tuple[str, str], list[int]] = {}
    for t in pal_ext(z, n):
        groups.setdefault((t.p1, t.p2), []).append(t.sigma)
    members = []
    for (p1, p2), ends in groups.items():
        ends.sort()
        step = len(p1) + len(p2)
        if any(b - a != step for a, b in zip(ends, ends[1:])):
            raise ConsistencyError(f"extension ends of one couple not consecutive at {n}")
        members.append(Nps(frozenset(ends), step))
    verified = validate_cover(z, 1, members, budget)
    return NpsCover(_sorted_members(members), 1, verified)


def extend_cluster(
    z: Word, m: int, nps: Nps, budget: Budget = DEFAULT_BUDGET
) -> ExtendResult:
    """Cover all extension ends of a degree-m cluster by degree-(m+1)
    clusters: one from the inside pipeline, at most c1 from the near part,
    and one per run of the edge covering palindromes of the position right
    after the prolongation."""
    D, xi = nps
    target = sigma_set(z, D)
    h = ambient_h(z)
    if m == 0:
        if len(D) != 1:
            raise ValueError("degree-0 structures are singletons")
        cover = _base_extension_cover(z, min(D), budget)
        if len(cover.members) > h:
            raise ConsistencyError("base extension cover exceeded h clusters")
        return ExtendResult(cover, target, len(cover.members), 0, 0)

    if not nestper_member(z, m, D, xi, budget):
        raise ValueError("input is not a degree-m structure")
    idx = index_of(z)
    mu3 = idx.per_prolong(min(D), xi)
    D1, D2 = separate(z, nps)
    members: list[Nps] = []
    inside_count = near_count = outside_count = 0

    if D1:
        ins = inside_extension(z, m, Nps(D1, xi), budget)
        if ins.cluster is not None:
            members.append(ins.cluster)
            inside_count = 1
        hat12 = frozenset(s for s in sigma_set(z, D1) if s > mu3)
        if hat12:
            runs = p_to_run_set(z, cov_pal(z, mu3 + 1, "edge"))
            covered: set[int] = set()
            for run in sorted(runs):
                tuples = pal_ext_run(z, D1, xi, run)
                if not tuples:
                    continue
                cluster = outside_extension(z, D1, xi, run, m, budget)
                members.append(cluster)
                outside_count += 1
                covered |= {t.sigma for t in tuples}
            if not hat12 <= covered:
                raise ConsistencyError("beyond-prolongation ends missed by run covers")
            if outside_count > 4 * h:
                raise ConsistencyError("more than 4h run clusters")

    if D2:
        near = near_extension(z, D2, xi, m, budget)
        members.extend(near.members)
        near_count = len(near.members)

    if target:
        members = _restrict_members(members, min(target), max(target))
        members = list(dict.fromkeys(members))
        covered2: set[int] = set()
        for member in members:
            covered2 |= member.D
        if not target <= covered2:
            raise ConsistencyError("extension cover misses some ends")
    else:
        members = []
    if len(members) > 1 + C1 + 4 * h:
        raise ConsistencyError("extension cover exceeded 1 + c1 + 4h clusters")
    if not 1 + C1 + 4 * h <= C3 * h:
        raise ConsistencyError("constant bookkeeping failed: 1 + c1 + 4h > c3*h")
    verified = validate_cover(z, m + 1, members, budget) if members else "exact"
    cover = NpsCover(_sorted_members(members), m + 1, verified)
    return ExtendResult(cover, target, inside_count, near_count, outside_count)


# -- the cover chain -------------------------------------------------------------


@dataclass(frozen=True)
class ChainLevel:
    m: int
    cover: NpsCover
    target: frozenset  # the pad positions at padded palindromic length m


def cover_chain(
    z: Word,
    k: int,
    budget: Budget = DEFAULT_BUDGET,
    pad: str = "#",
    check_ordinary: bool = True,
) -> list[ChainLevel]:
    """Degree-m covers of the pad positions at padded palindromic length m,
    for m = 0..k, each of size at most (c3*h)^m.

    Level m is built by extending every cluster of level m-1 (every
    length-m position continues a length-(m-1) position by one palindrome,
    so the extension ends of the previous cover catch them all), then
    restricting to the hull of the level-m position set.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if len(z) == 0 or z.text[0] != pad:
        raise ValueError("word must start with the pad symbol")
    if check_ordinary:
        _, ordinary = tau_and_ordinary(z)
        if not (ordinary and index_of(z).pal(1, len(z))):
            raise ValueError("cover chains need an ordinary palindromic word")
    h = ambient_h(z)
    first = Nps(frozenset({1}), 1)
    if not nestper_member(z, 0, first.D, first.xi, budget):
        raise ConsistencyError("position 1 is not a degree-0 structure")
    levels = [ChainLevel(0, NpsCover((first,), 0, "exact"), frozenset({1}))]
    for m in range(1, k + 1):
        target = pl.cover(z, m, pad)
        members: list[Nps] = []
        for cluster in levels[-1].cover.members:
            members.extend(extend_cluster(z, m - 1, cluster, budget).cover.members)
        if target:
            members = _restrict_members(members, min(target), max(target))
            members = list(dict.fromkeys(members))
            covered: set[int] = set()
            for member in members:
                covered |= member.D
            if not target <= covered:
                raise ConsistencyError(f"level-{m} positions escape the chain cover")
        else:
            members = []
        if len(members) > (C3 * h) ** m:
            raise ConsistencyError(f"level-{m} cover exceeded (c3*h)^{m}")
        verified = validate_cover(z, m, members, budget) if members else "exact"
        levels.append(ChainLevel(m, NpsCover(_sorted_members(members), m, verified), target))
    return levels
