"""Property suites over generated corpora, with a machine-readable report.

Each suite checks one family of structural claims (period lemmas, couple
properties, cardinality bounds, cover machinery, base positions) at a
configurable scale and reports failures with full reproduction data.
Reports are deterministic for a fixed config: suites run in name order and
carry no timestamps.

Two low-level checks (palindrome test, mirror) are routed through an Ops
bundle so the built-in mutation hooks can corrupt them; the mutation-
sensitivity test demands that each corruption trips at least one suite.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable

from . import base_positions as bp
from . import covpal as cv
from . import nps as np_
from . import palindromics as pal
from . import periodicity as per
from . import pl
from .generators import GeneratorSpec, generate, random_letters
from .index import index_of
from .words import DEFAULT_PAD, Interval, Word, mirror, pad_finite

Z3_TEXT = "#a#a#c#a#a#"


@dataclass(frozen=True)
class Ops:
    is_palindrome: Callable[[Word], bool] = lambda w: w.text == w.text[::-1]
    mirror: Callable[[int, int, int], int] = mirror


def _flipped_pal(w: Word) -> bool:
    return w.text != w.text[::-1]


def _shifted_mirror(lo: int, hi: int, j: int) -> int:
    return min(hi, mirror(lo, hi, j) + 1)


MUTATIONS: dict[str, Ops] = {
    "none": Ops(),
    "flip_palindrome": Ops(is_palindrome=_flipped_pal),
    "mirror_off_by_one": Ops(mirror=_shifted_mirror),
}


DEFAULT_CORPUS = (
    GeneratorSpec("thue_morse", 256),
    GeneratorSpec("fibonacci", 256),
    GeneratorSpec("period_doubling", 128),
    GeneratorSpec("periodic", 128, {"preperiod": "c", "period": "ab"}),
    GeneratorSpec("random", 128, {"alphabet_size": 2, "seed": 11}),
    GeneratorSpec("random", 128, {"alphabet_size": 3, "seed": 12}),
)

DEFAULT_SCALES: dict[str, int] = {
    "fine_wilf": 1000,
    "period_gluing": 1000,
    "palindrome_period_glue": 500,
    "pal_period_decomposition": 1000,
    "prefix_palindrome_period": 400,
    "runs_oracle_len": 28,
    "runs_words": 40,
    "s4_exhaustive_len": 12,
    "s6_trials": 1500,
    "pl_agreement_words": 40,
    "pl_agreement_len": 260,
    "ordinary_h0": 4,
    "ordinary_nested_h": 4,
    "edge_domination_h": 5,
    "canonical_nested_h": 6,
    "chain_h": 4,
    "uc_h": 5,
    "base_h": 5,
    "growth_lens": 96,
}


@dataclass(frozen=True)
class SuiteConfig:
    corpus: tuple[GeneratorSpec, ...] = DEFAULT_CORPUS
    seed: int = 7
    scales: dict[str, int] = field(default_factory=dict)
    enabled: tuple[str, ...] | None = None
    mutation: str = "none"
    pad: str = DEFAULT_PAD

    def scale(self, name: str) -> int:
        return self.scales.get(name, DEFAULT_SCALES[name])


@dataclass
class SuiteResult:
    name: str
    instances: int = 0
    failures: list[dict] = field(default_factory=list)
    skipped: str | None = None
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class Report:
    results: list[SuiteResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_json(self) -> str:
        body = {
            "schema": "pallen/v1",
            "verdict": "pass" if self.ok else "fail",
            "suites": [
                {
                    "name": r.name,
                    "instances": r.instances,
                    "failures": r.failures,
                    "skipped": r.skipped,
                    "notes": r.notes,
                }
                for r in self.results
            ],
        }
        return json.dumps(body, sort_keys=True, indent=2)


def shrink_word(w: Word, still_fails: Callable[[Word], bool]) -> Word:
    """Greedy shrink: drop halves, then single letters, while the failure
    persists."""
    text = w.text
    changed = True
    while changed and len(text) > 1:
        changed = False
        for cut in (text[: len(text) // 2], text[len(text) // 2 :]):
            if cut and still_fails(Word(cut)):
                text = cut
                changed = True
                break
        if not changed:
            for i in range(len(text)):
                cand = text[:i] + text[i + 1 :]
                if cand and still_fails(Word(cand)):
                    text = cand
                    changed = True
                    break
    return Word(text)


def shrink_set(S: frozenset, still_fails: Callable[[frozenset], bool]) -> frozenset:
    """Greedy shrink of a failing position set: drop elements while the
    failure persists."""
    current = frozenset(S)
    changed = True
    while changed and len(current) > 1:
        changed = False
        for x in sorted(current):
            cand = current - {x}
            if still_fails(cand):
                current = cand
                changed = True
                break
    return current


def _rng_words(seed: int, count: int, max_len: int, alphabet: int = 2) -> list[Word]:
    out = []
    for i in range(count):
        n = 1 + (seed * 7919 + i * 104729) % max_len
        out.append(Word(random_letters(n, alphabet, seed * 1_000_003 + i)))
    return out


def _corpus_words(config: SuiteConfig) -> list[Word]:
    return [generate(spec) for spec in config.corpus]


def _ordinary_samples(config: SuiteConfig) -> list[Word]:
    """Ordinary padded palindromic factors: the constructed chain words plus
    factors found inside padded corpus words."""
    out = [Word(Z3_TEXT)]
    for h in range(2, config.scale("ordinary_nested_h") + 1):
        out.append(bp.nested_palindrome(h, pad=config.pad))
    for spec in config.corpus:
        if spec.family in ("thue_morse", "fibonacci"):
            w = pad_finite(generate(spec), config.pad)
            for h0 in range(1, config.scale("ordinary_h0") + 1):
                got = pal.find_ordinary(w, h0, config.pad)
                if got is not None:
                    out.append(w.sub(*got))
    seen = set()
    uniq = []
    for w in out:
        if w.text not in seen:
            seen.add(w.text)
            uniq.append(w)
    return uniq


# -- suites -------------------------------------------------------------------

Suite = Callable[[SuiteConfig, Ops], SuiteResult]
_SUITES: dict[str, Suite] = {}


def suite(name: str) -> Callable[[Suite], Suite]:
    def deco(fn: Suite) -> Suite:
        _SUITES[name] = fn
        return fn

    return deco


def suite_names() -> tuple[str, ...]:
    return tuple(sorted(_SUITES))


@suite("core_pal_agreement")
def _s_pal_agreement(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """ops.is_palindrome must agree with the direct reversal comparison."""
    res = SuiteResult("core_pal_agreement")
    for w in _corpus_words(config) + _rng_words(config.seed, 50, 40):
        for j in range(1, len(w) + 1):
            u = w.sub(1, j)
            res.instances += 1
            if ops.is_palindrome(u) != (u.text == u.text[::-1]):
                bad = shrink_word(
                    u, lambda v: ops.is_palindrome(v) != (v.text == v.text[::-1])
                )
                res.failures.append({"word": bad.text})
                return res
    return res


@suite("core_pad_palindrome")
def _s_pad_palindrome(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """u is a palindrome iff its padded image is, exhaustively to length 8."""
    res = SuiteResult("core_pad_palindrome")
    letters = "ab"
    for n in range(1, 9):
        for code in range(2**n):
            u = Word("".join(letters[(code >> i) & 1] for i in range(n)))
            res.instances += 1
            if ops.is_palindrome(u) != ops.is_palindrome(pad_finite(u, config.pad)):
                res.failures.append({"word": u.text})
                if len(res.failures) >= 3:
                    return res
    return res


@suite("core_mirror")
def _s_mirror(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """Mirror is the in-range reflection: defining equation plus involution;
    set mirroring is an involution on subsets of the range."""
    res = SuiteResult("core_mirror")
    for lo in range(1, 12):
        for hi in range(lo, 14):
            for j in range(lo, hi + 1):
                res.instances += 1
                m = ops.mirror(lo, hi, j)
                if j - lo != hi - m or ops.mirror(lo, hi, m) != j:
                    res.failures.append({"lo": lo, "hi": hi, "j": j, "mirror": m})
                    if len(res.failures) >= 3:
                        return res
            D = frozenset(range(lo, hi + 1, 2))
            twice = frozenset(
                ops.mirror(lo, hi, ops.mirror(lo, hi, d)) for d in D
            )
            if twice != D:
                res.failures.append({"lo": lo, "hi": hi, "set": sorted(D)})
    return res


@suite("core_spread_idempotent")
def _s_spread(config: SuiteConfig, ops: Ops) -> SuiteResult:
    from .words import spread_in

    res = SuiteResult("core_spread_idempotent")
    for seed in range(30):
        n = 2 + (config.seed + seed) % 40
        window = Interval(1, n)
        S = frozenset(
            1 + (seed * k * 2654435761 + config.seed) % n for k in range(1, 6)
        )
        for xi in range(1, 9):
            res.instances += 1
            once = spread_in(S, xi, window)
            if spread_in(once, xi, window) != once:
                small = shrink_set(
                    frozenset(S),
                    lambda T: T
                    and spread_in(spread_in(T, xi, window), xi, window)
                    != spread_in(T, xi, window),
                )
                res.failures.append({"S": sorted(small), "xi": xi, "n": n})
    return res


@suite("generators_prefix_stable")
def _s_gen_prefix(config: SuiteConfig, ops: Ops) -> SuiteResult:
    res = SuiteResult("generators_prefix_stable")
    for spec in config.corpus:
        long = generate(spec)
        for frac in (3, 7):
            n = max(1, len(long) // frac)
            short = generate(GeneratorSpec(spec.family, n, dict(spec.params)))
            res.instances += 1
            if long.text[: len(short)] != short.text:
                res.failures.append({"family": spec.family, "len": n})
    return res


@suite("generators_thue_morse_recurrence")
def _s_tm(config: SuiteConfig, ops: Ops) -> SuiteResult:
    res = SuiteResult("generators_thue_morse_recurrence")
    flip = {"a": "b", "b": "a"}
    for k in range(1, 13):
        w = generate(GeneratorSpec("thue_morse", 2**k)).text
        half = len(w) // 2
        res.instances += 1
        if w[half:] != "".join(flip[c] for c in w[:half]):
            res.failures.append({"k": k})
    return res


@suite("periods_fine_wilf")
def _s_fine_wilf(config: SuiteConfig, ops: Ops) -> SuiteResult:
    res = SuiteResult("periods_fine_wilf")
    count = config.scale("fine_wilf")
    words = _rng_words(config.seed + 2, count, 200)
    for w in words:
        ps = sorted(per.periods(w))
        n = len(w)
        for a in ps:
            for b in ps:
                if a <= b and n >= a + b - math.gcd(a, b):
                    res.instances += 1
                    if math.gcd(a, b) not in ps:
                        res.failures.append({"word": w.text, "i": a, "j": b})
    return res


@suite("periods_gluing")
def _s_gluing(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """uv and vw sharing period j with |v| >= j glue to a j-periodic uvw."""
    res = SuiteResult("periods_gluing")
    for i in range(config.scale("period_gluing")):
        j = 1 + (config.seed + i) % 8
        block = random_letters(j, 2, config.seed * 31 + i)
        reps = 1 + i % 4
        v = (block * (reps + 1))[: j + i % (j * reps)]
        u = (block * 3)[len(block) * 3 - (1 + i % (2 * j)) :]
        phase = len(v) % j
        rotated = block[phase:] + block[:phase]
        w = (rotated * 3)[: 1 + (i * 7) % (2 * j)]
        res.instances += 1
        uvw = Word(u + v + w)
        if j not in per.periods(uvw):
            res.failures.append({"u": u, "v": v, "w": w, "j": j})
    return res


@suite("periods_palindrome_glue")
def _s_pal_glue(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """A period of u p valid up to |p| extends across u p reverse(u)."""
    res = SuiteResult("periods_palindrome_glue")
    for i in range(config.scale("palindrome_period_glue")):
        u = random_letters(1 + i % 12, 2, config.seed * 17 + i)
        half = random_letters(1 + (i // 2) % 6, 2, config.seed * 23 + i)
        p = half + half[-2::-1] if i % 2 else half + half[::-1]
        up = Word(u + p)
        for xi in per.periods(up):
            if xi <= len(p):
                res.instances += 1
                if xi not in per.periods(Word(u + p + u[::-1])):
                    res.failures.append({"u": u, "p": p, "xi": xi})
    return res


@suite("periods_pal_decomposition")
def _s_pal_decomposition(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """Every period j of a palindrome splits it as (p1 p2)^a p1 with
    palindromic p1, p2 and |p1 p2| = j.  Exhaustive to length 15, sampled to
    the configured count at length <= 40."""
    res = SuiteResult("periods_pal_decomposition")

    def check(x: str) -> None:
        for j in sorted(per.periods(Word(x))):
            res.instances += 1
            r = len(x) % j
            p1, p2 = x[:r], x[r:j]
            ok = (
                p1 == p1[::-1]
                and p2 == p2[::-1]
                and p2 != ""
                and (p1 + p2) * (len(x) // j) + p1 == x
            )
            if not ok:
                res.failures.append({"x": x, "j": j})

    for n in range(1, 16):
        for code in range(2 ** ((n + 1) // 2)):
            half = "".join("ab"[(code >> i) & 1] for i in range((n + 1) // 2))
            x = half + half[: n // 2][::-1]
            check(x)
    done = 0
    i = 0
    while done < config.scale("pal_period_decomposition"):
        n = 16 + (config.seed * 13 + i * 7) % 25
        half = random_letters((n + 1) // 2, 2, config.seed * 41 + i)
        x = half + half[: n // 2][::-1]
        check(x)
        done += 1
        i += 1
    return res


@suite("periods_prefix_palindrome")
def _s_prefix_pal(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """|t| - |u| is a period of t for proper palindromic prefixes/suffixes u."""
    res = SuiteResult("periods_prefix_palindrome")
    for i in range(config.scale("prefix_palindrome_period")):
        n = 2 + (config.seed * 3 + i) % 30
        half = random_letters((n + 1) // 2, 2, config.seed * 53 + i)
        t = half + half[: n // 2][::-1]
        idx = index_of(Word(t))
        for L in idx.pal_prefix_lengths(1):
            if L < len(t):
                res.instances += 1
                if len(t) - L not in per.periods(Word(t)):
                    res.failures.append({"t": t, "u_len": L})
    return res


@suite("runs_oracle")
def _s_runs_oracle(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """find_runs equals the definitional brute-force enumeration on random
    words; distinct runs are distinct triples by construction."""
    res = SuiteResult("runs_oracle")
    max_len = config.scale("runs_oracle_len")
    words = _rng_words(config.seed + 3, config.scale("runs_words"), max_len)
    words.append(Word(Z3_TEXT))
    for w in words:
        got = per.find_runs(w)
        want = _brute_runs(w)
        res.instances += 1
        if got != want:
            small = shrink_word(w, lambda v: per.find_runs(v) != _brute_runs(v))
            got_small, want_small = per.find_runs(small), _brute_runs(small)
            res.failures.append(
                {
                    "word": small.text,
                    "missing": sorted(want_small - got_small),
                    "extra": sorted(got_small - want_small),
                }
            )
    return res


@suite("runs_canonical_map")
def _s_runs_canonical(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """On ordinary factors every palindromic span belongs to the canonical
    set of its run, and that run is one find_runs returns.  (On words
    without the ordinary structure the mapped run need not exist; the
    toolkit raises in that case.)"""
    res = SuiteResult("runs_canonical_map")
    words = _ordinary_samples(config)
    if config.scale("canonical_nested_h") >= 2:
        words.append(bp.nested_palindrome(config.scale("canonical_nested_h"), pad=config.pad))
    for w in words:
        got = per.find_runs(w)
        idx = index_of(w)
        for i in range(1, len(w) + 1):
            for j in range(i, len(w) + 1):
                if idx.pal(i, j):
                    res.instances += 1
                    try:
                        run = per.p_to_run(w, i, j)
                    except pal.ConsistencyError as exc:
                        res.failures.append({"word": w.text, "span": [i, j], "error": str(exc)})
                        continue
                    if run not in got or not cv.in_run_pal(w, run, i, j):
                        res.failures.append({"word": w.text, "span": [i, j]})
    return res


def _brute_runs(z: Word) -> frozenset[per.Run]:
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
                if pal.couple_of_word(seg[:xi]) is None:
                    continue
                out.add(per.Run(nu1, nu2, xi))
    return frozenset(out)


@suite("couples_s_properties")
def _s_couples(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """The couple lemmas: prefix doubling (S1), power periods (S2), unique
    base split (S4, exhaustive), empty-side couples (S5), and power
    identity (S6, randomised search for counterexamples)."""
    res = SuiteResult("couples_s_properties")
    # S1 over corpus factors
    for w in _corpus_words(config)[:4]:
        idx = index_of(w)
        for i in range(1, min(len(w), 60) + 1):
            goods = [
                L for L in idx.pal_prefix_lengths(i)[:8] if idx.order_lt2(i, i + L - 1)
            ]
            for a, b in zip(goods, goods[1:]):
                res.instances += 1
                if not 2 * a < b:
                    res.failures.append({"suite": "S1", "word": w.text, "pos": i})
    # S2: minimal period of long couple powers
    for i in range(300):
        couple = _random_couple(config.seed * 61 + i)
        if couple is None:
            continue
        base = couple.p1 + couple.p2
        t = (base * 4 + couple.p1)[: 2 * len(base) + 1 + i % len(base)]
        if len(t) >= 2 * len(base):
            res.instances += 1
            if per.mper_order(Word(t))[0] != len(base):
                res.failures.append({"suite": "S2", "p1": couple.p1, "p2": couple.p2})
    # S4 exhaustive on two letters
    for n in range(1, config.scale("s4_exhaustive_len") + 1):
        for code in range(2**n):
            u = "".join("ab"[(code >> i) & 1] for i in range(n))
            res.instances += 1
            try:
                pal.couple_of_word(u)
            except pal.ConsistencyError:
                res.failures.append({"suite": "S4", "u": u})
    # S5: every non-periodic palindrome admits the empty-side couple
    for i in range(300):
        half = random_letters(1 + i % 10, 2, config.seed * 67 + i)
        p = half + (half[-2::-1] if i % 2 else half[::-1])
        if pal.order_lt2_str(p):
            res.instances += 1
            if not pal.is_couple("", p):
                res.failures.append({"suite": "S5", "p": p})
    # S6: equal powers with alpha >= 2 from distinct couples
    seen: dict[str, tuple[str, str]] = {}
    for i in range(config.scale("s6_trials")):
        couple = _random_couple(config.seed * 71 + i)
        if couple is None:
            continue
        for alpha in (2, 3):
            word = couple.power(alpha)
            if len(word) > 64:
                continue
            res.instances += 1
            prev = seen.get(word)
            if prev is None:
                seen[word] = (couple.p1, couple.p2)
            elif prev != (couple.p1, couple.p2):
                res.failures.append({"suite": "S6", "word": word, "couples": [prev, [couple.p1, couple.p2]]})
    return res


def _random_couple(seed: int) -> pal.PalCouple | None:
    h1 = random_letters(1 + seed % 4, 2, seed)
    h2 = random_letters(1 + (seed // 7) % 4, 2, seed + 1)
    p1 = h1 + h1[-2::-1] if seed % 2 else ""
    p2 = h2 + h2[-2::-1] if seed % 3 else h2 + h2[::-1]
    if p2 and pal.is_couple(p1, p2):
        return pal.PalCouple(p1, p2)
    return None


@suite("palext_structure")
def _s_palext(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """Per-position couple bound, injective extension ends, downward alpha
    closure, and branch disjointness on ordinary words."""
    res = SuiteResult("palext_structure")
    for z in _ordinary_samples(config):
        h = len(pal.npp(z))
        for n in range(1, len(z) + 1):
            tuples = pal.pal_ext(z, n)
            res.instances += 1
            if len(pal.gamma(z, n)) > h:
                res.failures.append({"word": z.text, "n": n, "kind": "gamma"})
            if len({t.sigma for t in tuples}) != len(tuples):
                res.failures.append({"word": z.text, "n": n, "kind": "sigma"})
            firm = pal.firm_pal_prefixes(z, n)
            for t in tuples:
                if t.alpha > 1:
                    if pal.PalExtTuple(n, t.p1, t.p2, t.alpha - 1) not in tuples:
                        res.failures.append(
                            {"word": z.text, "n": n, "kind": "downward", "alpha": t.alpha}
                        )
                word = t.couple.power(t.alpha)
                if t.p1 == "" and t.alpha == 1 and len(word) in firm:
                    continue  # firm branch
                if len(t.couple.word()) in firm:
                    res.failures.append({"word": z.text, "n": n, "kind": "branch"})
    return res


@suite("pl_agreement")
def _s_pl_agreement(config: SuiteConfig, ops: Ops) -> SuiteResult:
    res = SuiteResult("pl_agreement")
    words = _rng_words(config.seed + 4, config.scale("pl_agreement_words"), config.scale("pl_agreement_len"))
    words += _rng_words(config.seed + 5, config.scale("pl_agreement_words") // 2, config.scale("pl_agreement_len"), alphabet=3)
    for w in words:
        res.instances += 1
        if pl.pl_prefix_fast(w) != pl.pl_prefix_oracle(w):
            bad = shrink_word(w, lambda v: pl.pl_prefix_fast(v) != pl.pl_prefix_oracle(v))
            res.failures.append({"word": bad.text})
    return res


@suite("pl_lipschitz")
def _s_pl_lipschitz(config: SuiteConfig, ops: Ops) -> SuiteResult:
    res = SuiteResult("pl_lipschitz")
    for w in _corpus_words(config):
        profile = pl.pl_prefix_fast(w)
        res.instances += 1
        if profile[0] != 1 or any(
            abs(b - a) > 1 for a, b in zip(profile, profile[1:])
        ):
            res.failures.append({"word": w.text})
    return res


@suite("cover_partition")
def _s_cover_partition(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """Every pad position of a padded palindromic word carries exactly one
    padded palindromic length; the cover sets partition them."""
    res = SuiteResult("cover_partition")
    for z in _chain_words(config):
        pads = frozenset(
            n for n in range(3, len(z) + 1) if z.text[n - 1] == config.pad
        )
        seen: set[int] = set()
        top = pl.cover_max_m(z, config.pad)
        for m in range(1, top + 1):
            cm = pl.cover(z, m, config.pad)
            res.instances += 1
            if cm & seen:
                res.failures.append({"word": z.text, "m": m, "overlap": sorted(cm & seen)})
            seen |= cm
        if seen != pads:
            res.failures.append({"word": z.text, "missing": sorted(pads - seen)})
    return res


def _chain_words(config: SuiteConfig) -> list[Word]:
    return [Word(Z3_TEXT)] + [
        bp.nested_palindrome(h, pad=config.pad)
        for h in range(2, config.scale("chain_h") + 1)
    ]


@suite("cover_chaining")
def _s_cover_chaining(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """Positions at length m extend positions at length m-1: cover(m) is
    contained in the extension ends of cover(m-1)."""
    res = SuiteResult("cover_chaining")
    for z in _chain_words(config):
        top = pl.cover_max_m(z, config.pad)
        for m in range(1, top + 1):
            prev = pl.cover(z, m - 1, config.pad) if m > 1 else frozenset({1})
            res.instances += 1
            if not pl.cover(z, m, config.pad) <= pal.sigma_set(z, prev):
                res.failures.append({"word": z.text, "m": m})
    return res


@suite("growth_dichotomy")
def _s_growth(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """Periodic words stabilise the factor maximum; the aperiodic corpus
    grows together under PL and padded PL (comonotone classes; the ratio is
    reported, not asserted)."""
    res = SuiteResult("growth_dichotomy")
    hi = config.scale("growth_lens")
    lo = max(8, hi // 4)
    for spec in config.corpus:
        if spec.family == "random":
            continue
        w_hi = generate(GeneratorSpec(spec.family, hi, dict(spec.params)))
        w_lo = Word(w_hi.text[:lo])
        a_lo, a_hi = pl.max_pl(w_lo, "factors"), pl.max_pl(w_hi, "factors")
        b_lo = _max_ppl_factors(w_lo, config.pad)
        b_hi = _max_ppl_factors(w_hi, config.pad)
        res.instances += 1
        res.notes[spec.family] = {
            "pl": [a_lo, a_hi],
            "ppl": [b_lo, b_hi],
            "ratio_hint": max(b_hi, 1) / max(a_hi, 1),
        }
        if (a_hi > a_lo) != (b_hi > b_lo):
            res.failures.append({"family": spec.family, "pl": [a_lo, a_hi], "ppl": [b_lo, b_hi]})
    return res


def _max_ppl_factors(w: Word, pad: str) -> int:
    """Max padded palindromic length over factors, as slices of the padded
    image (the padding of w[i, j] is the odd-to-odd slice of the padding of
    w, so one span table serves every factor)."""
    W = pad_finite(w, pad)
    idx = index_of(W)
    N = len(W)
    inf = N + 10
    best = 0
    fj = [inf] * (N + 2)
    for s in range(1, N + 1, 2):
        for j in range(s, N + 1, 2):
            val = 1 if idx.pal(s, j) else inf
            for l in range(s + 1, j, 2):
                if fj[l - 1] + 1 < val and idx.pal(l + 1, j):
                    val = fj[l - 1] + 1
            fj[j] = val
            if val < inf and val > best:
                best = val
    return best


@suite("covpal_bounds")
def _s_covpal_bounds(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """Per-position cardinality bounds on ordinary words: couples <= h,
    compound covers <= h, edge-left runs <= 2h, edge runs <= 4h."""
    res = SuiteResult("covpal_bounds")
    for z in _ordinary_samples(config):
        h = len(pal.npp(z))
        for n in range(1, len(z) + 1):
            res.instances += 1
            if len(cv.cov_pal_cmd(z, n)) > h:
                res.failures.append({"word": z.text, "n": n, "kind": "compound"})
            left = cv.p_to_run_set(z, cv.cov_pal(z, n, "edge_left"))
            both = cv.p_to_run_set(z, cv.cov_pal(z, n, "edge"))
            if len(left) > 2 * h:
                res.failures.append({"word": z.text, "n": n, "kind": "edge_left"})
            if len(both) > 4 * h:
                res.failures.append({"word": z.text, "n": n, "kind": "edge"})
    return res


@suite("covpal_edge_domination")
def _s_edge_domination(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """Every covering span's restricted extension set is contained in that
    of some edge covering span."""
    res = SuiteResult("covpal_edge_domination")
    words = _chain_words(config) + [
        bp.nested_palindrome(config.scale("edge_domination_h"), pad=config.pad)
    ]
    for z in words:
        D = bp.b_tilde(bp.build_base(z)) if len(pal.npp(z)) >= 2 else frozenset({1})
        for n in range(1, len(z) + 1):
            edges = cv.cov_pal(z, n, "edge")
            edge_sets = {sp: cv.pal_ext_span(z, D, sp.n1, sp.n2) for sp in edges}
            for span in cv.cov_pal(z, n, "all"):
                res.instances += 1
                ours = cv.pal_ext_span(z, D, span.n1, span.n2)
                if not any(ours <= other for other in edge_sets.values()):
                    res.failures.append({"word": z.text, "n": n, "span": list(span)})
    return res


@suite("covpal_symmetry")
def _s_covpal_symmetry(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """On palindromic words, edge-right covers of n are the mirror image of
    the edge-left covers of the mirrored position."""
    res = SuiteResult("covpal_symmetry")
    for z in _chain_words(config):
        L = len(z)
        for n in range(1, L + 1):
            nbar = ops.mirror(1, L, n)
            res.instances += 1
            right = cv.cov_pal(z, n, "edge_right")
            left = cv.cov_pal(z, nbar, "edge_left")
            mirrored = frozenset(
                cv.PalSpan(ops.mirror(1, L, sp.n2), ops.mirror(1, L, sp.n1))
                for sp in left
            )
            if right != mirrored:
                res.failures.append({"word": z.text, "n": n})
    return res


@suite("nps_properties")
def _s_nps_properties(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """Restriction, translation, mirror, and full-period lift preserve
    degree membership; minimal covers agree across equal slices."""
    res = SuiteResult("nps_properties")
    budget = np_.DEFAULT_BUDGET
    for z in _chain_words(config):
        idx = index_of(z)
        clusters = _sample_clusters(z, config)
        for D, xi in clusters:
            for m in (1, 2):
                if not np_.nestper_member(z, m, D, xi, budget):
                    continue
                lo, hi = min(D), max(D)
                # R1: interval restrictions
                for a in range(lo, hi + 1):
                    for b in (a, (a + hi) // 2, hi):
                        if b < a:
                            continue
                        sub = frozenset(x for x in D if a <= x <= b)
                        if sub:
                            res.instances += 1
                            if not np_.nestper_member(z, m, sub, xi, budget):
                                res.failures.append(
                                    {"word": z.text, "kind": "R1", "D": sorted(D), "xi": xi}
                                )
                # R4: full-period lift of narrow clusters
                if hi - lo + 1 <= xi:
                    res.instances += 1
                    if not np_.nestper_member(z, m, D, len(z), budget):
                        res.failures.append(
                            {"word": z.text, "kind": "R4", "D": sorted(D), "xi": xi}
                        )
                # R2: translation to an equal slice
                for shift_by in range(1, len(z) - hi + 1):
                    if z.text[lo - 1 + shift_by : hi + shift_by] == z.text[lo - 1 : hi]:
                        moved = frozenset(x + shift_by for x in D)
                        res.instances += 1
                        if not np_.nestper_member(z, m, moved, xi, budget):
                            res.failures.append(
                                {"word": z.text, "kind": "R2", "D": sorted(D), "xi": xi}
                            )
                        elif np_.omega(z, m, D, budget)[0] != np_.omega(z, m, moved, budget)[0]:
                            res.failures.append(
                                {"word": z.text, "kind": "R2-omega", "D": sorted(D), "xi": xi}
                            )
                        break
                # R3: mirror through a palindromic span containing the hull
                for b in range(hi, len(z) + 1):
                    if idx.pal(lo, b):
                        moved = frozenset(ops.mirror(lo, b, x) for x in D)
                        res.instances += 1
                        if not np_.nestper_member(z, m, moved, xi, budget):
                            res.failures.append(
                                {"word": z.text, "kind": "R3", "D": sorted(D), "xi": xi}
                            )
                        break
    return res


def _sample_clusters(z: Word, config: SuiteConfig) -> list[tuple[frozenset, int]]:
    """Structure candidates: spread-closures of small seed sets."""
    from .words import spread_in as spread

    out = []
    n = len(z)
    for seed in range(12):
        a = 1 + (seed * 2654435761 + config.seed) % n
        xi = 1 + (seed * 40503 + config.seed) % min(8, n)
        b = min(n, a + (seed % 4) * xi)
        D = spread({a}, xi, Interval(min(a, b), max(a, b)))
        if D and np_.is_tilde_nestper(z, D, xi):
            out.append((D, xi))
    out.append((frozenset({1}), 1))
    return out


@suite("nps_omega_base")
def _s_omega_base(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """Extension ends of one position need at most h degree-1 clusters,
    both by exact search and by the per-couple witness construction."""
    res = SuiteResult("nps_omega_base")
    for z in _ordinary_samples(config):
        h = len(pal.npp(z))
        for n in range(1, len(z) + 1):
            ends = pal.sigma_set(z, {n})
            res.instances += 1
            value, _ = np_.omega(z, 1, ends)
            witness = np_.extend_cluster(z, 0, np_.Nps(frozenset({n}), 1))
            if value > h or len(witness.cover.members) > h:
                res.failures.append({"word": z.text, "n": n, "omega": value})
    return res


@suite("nps_constructive")
def _s_constructive(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """The construction pipeline self-validates; exercise it across the
    chain words and record the verification mode."""
    res = SuiteResult("nps_constructive")
    for z in _chain_words(config):
        try:
            levels = np_.cover_chain(z, min(3, pl.cover_max_m(z, config.pad)), pad=config.pad)
        except (pal.ConsistencyError, np_.BudgetExceeded) as exc:
            res.failures.append({"word": z.text, "error": str(exc)})
            continue
        h = len(pal.npp(z))
        for level in levels:
            res.instances += 1
            if len(level.cover.members) > (np_.C3 * h) ** level.m:
                res.failures.append({"word": z.text, "m": level.m, "kind": "size"})
            if level.target and not level.target <= level.cover.positions():
                res.failures.append({"word": z.text, "m": level.m, "kind": "coverage"})
            res.notes.setdefault(z.text[:16], []).append(level.cover.verified)
    return res


@suite("base_q_properties")
def _s_base_q(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """The base-position ladder: odd occurrences lift one level (Q1), gap
    intervals stay narrow (Q2/Q3), and level-g windows carry exactly the
    levels below (Q4)."""
    res = SuiteResult("base_q_properties")
    for h in range(2, config.scale("base_h") + 1):
        z = bp.nested_palindrome(h, pad=config.pad)
        chain = pal.npp(z)
        bb = bp.build_base(z)
        for g in range(1, h):
            es = sorted(e for gg, e in bb if gg == g)
            glen = chain[g - 1]
            for i, e in enumerate(es):
                if i % 2 == 0:
                    res.instances += 1
                    if bp.BasePos(g + 1, e) not in bb or (
                        i + 1 < len(es)
                        and e + chain[g] - 1 != es[i + 1] + glen - 1
                    ):
                        res.failures.append({"h": h, "g": g, "e": e, "kind": "Q1"})
            for a, b in zip(es, es[1:]):
                for n1 in range(a + 1, b):
                    for n2 in range(n1, b):
                        res.instances += 1
                        if bp.height_width(z, bb, n1, n2)[1] >= glen:
                            res.failures.append({"h": h, "g": g, "kind": "Q2", "n": [n1, n2]})
                            break
                lo2, hi2 = a + glen, b + glen - 2
                for n1 in range(lo2, hi2 + 1):
                    for n2 in range(n1, hi2 + 1):
                        res.instances += 1
                        if bp.height_width(z, bb, n1, n2)[1] >= glen:
                            res.failures.append({"h": h, "g": g, "kind": "Q3", "n": [n1, n2]})
                            break
            union: set[bp.BasePos] = set()
            for e in es:
                union |= bp.base_interval(z, bb, e, e + glen - 1)
            res.instances += 1
            if union != {p for p in bb if p.g <= g}:
                res.failures.append({"h": h, "g": g, "kind": "Q4"})
    return res


@suite("base_uc")
def _s_base_uc(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """The base positions have the uniform-cover property: every periodic
    interval is caught by at most c2 period-length windows."""
    res = SuiteResult("base_uc")
    hs = [h for h in range(2, config.scale("uc_h") + 1)]
    for h in hs:
        z = bp.nested_palindrome(h, pad=config.pad)
        S = bp.b_tilde(bp.build_base(z))
        for mu1 in range(1, len(z) + 1):
            for mu2 in range(mu1, len(z) + 1):
                for xi in per.periods(z.sub(mu1, mu2)):
                    res.instances += 1
                    witness = bp.uc_witness(z, S, mu1, mu2, xi)
                    if witness is None or len(witness) > np_.C2:
                        res.failures.append({"h": h, "mu": [mu1, mu2], "xi": xi})
    return res


@suite("counting_arithmetic")
def _s_counting(config: SuiteConfig, ops: Ops) -> SuiteResult:
    """Exact big-integer bound arithmetic and the two independent threshold
    scans."""
    res = SuiteResult("counting_arithmetic")
    res.instances += 1
    if np_.lam(3, 2) != 64 * 300**4:
        res.failures.append({"kind": "lambda"})
    for h in (1, 2, 3, 5, 8):
        for m in (0, 1, 2, 3):
            res.instances += 1
            expect = 1
            for _ in range(m):
                expect *= 2 * np_.C1 * np_.C3 * h
            if np_.theta(h, m) != expect:
                res.failures.append({"kind": "theta", "h": h, "m": m})
    for k in (1, 2):
        res.instances += 1
        if bp.h0_scan(k) != bp.h0_scan_alt(k):
            res.failures.append({"kind": "h0", "k": k})
    res.notes["h0_k1"] = bp.h0_scan(1)
    return res


# -- orchestration --------------------------------------------------------------


def run_suites(config: SuiteConfig) -> Report:
    ops = MUTATIONS.get(config.mutation)
    if ops is None:
        raise ValueError(f"unknown mutation {config.mutation!r}")
    names = suite_names() if config.enabled is None else tuple(config.enabled)
    results = []
    for name in sorted(names):
        fn = _SUITES.get(name)
        if fn is None:
            raise ValueError(f"unknown suite {name!r}")
        try:
            results.append(fn(config, ops))
        except np_.BudgetExceeded as exc:
            results.append(SuiteResult(name, skipped=f"budget: {exc}"))
    return Report(results)


def load_config(path: str) -> SuiteConfig:
    """Read a TOML config: [verify] seed/enabled/mutation/pad, [scales], and
    [[corpus]] tables with family/length/params."""
    try:
        import tomllib  # py311+
    except ModuleNotFoundError:  # pragma: no cover - py310 path
        import tomli as tomllib
    with open(path, "rb") as fh:
        raw = tomllib.load(fh)
    verify = raw.get("verify", {})
    corpus = tuple(
        GeneratorSpec(entry["family"], entry["length"], entry.get("params", {}))
        for entry in raw.get("corpus", [])
    ) or DEFAULT_CORPUS
    enabled = verify.get("enabled")
    return SuiteConfig(
        corpus=corpus,
        seed=verify.get("seed", 7),
        scales=dict(raw.get("scales", {})),
        enabled=tuple(enabled) if enabled else None,
        mutation=verify.get("mutation", "none"),
        pad=verify.get("pad", DEFAULT_PAD),
    )
