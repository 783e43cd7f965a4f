import pytest

from pallen.base_positions import (
    BasePos,
    b_tilde,
    base_interval,
    build_base,
    counting_harness,
    h0_scan,
    h0_scan_alt,
    hat_words,
    height_width,
    nested_palindrome,
    psi_check,
    uc_witness,
    y_decomposition,
)
from pallen.index import index_of
from pallen.nps import C2
from pallen.palindromics import npp
from pallen.periodicity import periods
from pallen.words import Word


def test_build_base_golden(z3):
    bb = build_base(z3)
    assert {tuple(p) for p in bb} == {
        (1, 1), (1, 3), (2, 1), (1, 9), (1, 11), (2, 9), (3, 1)
    }
    assert b_tilde(bb) == frozenset({1, 3, 9, 11})


def test_build_base_counts_powers_of_two():
    for h in range(2, 7):
        z = nested_palindrome(h)
        assert len(npp(z)) == h
        bb = build_base(z)
        for g in range(1, h + 1):
            assert sum(1 for gg, _ in bb if gg == g) == 2 ** (h - g)
        assert len(b_tilde(bb)) == 2 ** (h - 1)


def test_base_occurrences_and_pad(z3):
    bb = build_base(z3)
    chain = npp(z3)
    for g, e in bb:
        length = chain[g - 1]
        assert z3.text[e - 1 : e - 1 + length] == z3.text[:length]
        assert z3.text[e - 1] == "#"


def test_build_base_needs_two_levels():
    with pytest.raises(ValueError):
        build_base(Word("#"))


def test_hat_words(z3):
    hats = hat_words(z3)
    assert [w.text for w in hats] == ["a", "a#c#a"]
    for w in hats:
        assert w.text == w.text[::-1]


def test_height_width_examples(z3):
    bb = build_base(z3)
    assert height_width(z3, bb, 1, 11) == (3, 11)
    height, width = height_width(z3, bb, 1, 3)
    assert height == 2
    assert width == 3  # the (2,1) occurrence spans the whole interval
    assert height_width(z3, bb, 2, 2) == (0, 0)


def test_y_decomposition_examples(z3):
    bb = build_base(z3)
    parts = y_decomposition(z3, bb, 1, 11)
    assert any(z3.text[p.lo - 1 : p.hi] == z3.text for p in parts)
    parts5 = y_decomposition(z3, bb, 1, 5)
    assert len(parts5) <= 4
    covered = set()
    for p in parts5:
        covered |= base_interval(z3, bb, p.lo, p.hi)
    assert covered == base_interval(z3, bb, 1, 5)
    with pytest.raises(ValueError):
        y_decomposition(z3, bb, 2, 2)


def test_y_decomposition_exhaustive(nested4):
    bb = build_base(nested4)
    for n1 in range(1, len(nested4) + 1):
        for n2 in range(n1, len(nested4) + 1):
            if base_interval(nested4, bb, n1, n2):
                parts = y_decomposition(nested4, bb, n1, n2)
                assert len(parts) <= 4


def test_uc_witness_examples(z3):
    S = b_tilde(build_base(z3))
    w = uc_witness(z3, S, 1, 5, 2)
    assert w is not None and len(w) <= C2
    assert uc_witness(z3, frozenset(), 1, 5, 2) == frozenset()
    with pytest.raises(ValueError):
        uc_witness(z3, S, 1, 11, 3)  # 3 is not a period of z3


def test_uc_exhaustive_z3(z3):
    S = b_tilde(build_base(z3))
    for mu1 in range(1, 12):
        for mu2 in range(mu1, 12):
            for xi in periods(z3.sub(mu1, mu2)):
                w = uc_witness(z3, S, mu1, mu2, xi)
                assert w is not None and len(w) <= C2
                catches = {
                    x for x in S if any(d <= x <= d + xi - 1 for d in w)
                }
                assert catches == {x for x in S if mu1 <= x <= mu2}


def test_q1_lift(nested4):
    bb = build_base(nested4)
    chain = npp(nested4)
    for g in range(1, 4):
        es = sorted(e for gg, e in bb if gg == g)
        for i in range(0, len(es), 2):
            assert BasePos(g + 1, es[i]) in bb
            assert es[i] + chain[g] - 1 == es[i + 1] + chain[g - 1] - 1


def test_psi_examples(z3):
    rep0 = psi_check(z3, 0)
    assert rep0.observed_max <= 1 == rep0.bound
    rep1 = psi_check(z3, 1)
    assert rep1.bound == 2400
    assert rep1.observed_max <= rep1.bound
    assert rep1.chain_checked > 0


def test_harness(z3):
    rep = counting_harness(z3, 2)
    assert rep.h == 3
    assert rep.base_count == 4
    assert rep.cover_intersections == {1: (3, 11), 2: (9,)}
    assert rep.covered_base_positions == 3
    assert rep.lam_value == 518_400_000_000
    assert rep.bound == 2 * 30**2 * rep.lam_value
    assert rep.bound_exceeds_observed
    assert not rep.eq1_holds  # desk-scale h never reaches the threshold


def test_h0_scans_agree():
    assert h0_scan(1) == 24
    assert h0_scan_alt(1) == 24
    for k in (1, 2, 3):
        assert h0_scan(k) == h0_scan_alt(k)


def test_nested_palindrome_structure():
    for h in (2, 3, 4, 5, 6):
        z = nested_palindrome(h)
        idx = index_of(z)
        assert idx.pal(1, len(z))
        assert z.text[0] == "#"
        assert len(npp(z)) == h
    assert nested_palindrome(3).text == "#a#a#c#a#a#"
