import json

import pytest

from pallen.generators import GeneratorSpec
from pallen.verifier import (
    MUTATIONS,
    SuiteConfig,
    load_config,
    run_suites,
    shrink_word,
    suite_names,
)
from pallen.words import Word

FAST_SCALES = {
    "fine_wilf": 150,
    "period_gluing": 150,
    "palindrome_period_glue": 80,
    "pal_period_decomposition": 100,
    "prefix_palindrome_period": 80,
    "runs_oracle_len": 18,
    "runs_words": 12,
    "s4_exhaustive_len": 9,
    "s6_trials": 300,
    "pl_agreement_words": 10,
    "pl_agreement_len": 120,
    "ordinary_h0": 2,
    "ordinary_nested_h": 3,
    "edge_domination_h": 3,
    "canonical_nested_h": 4,
    "chain_h": 3,
    "uc_h": 4,
    "base_h": 4,
    "growth_lens": 48,
}

FAST_CORPUS = (
    GeneratorSpec("thue_morse", 96),
    GeneratorSpec("fibonacci", 96),
    GeneratorSpec("periodic", 64, {"preperiod": "c", "period": "ab"}),
    GeneratorSpec("random", 64, {"alphabet_size": 2, "seed": 11}),
)


def fast_config(**kw):
    return SuiteConfig(corpus=FAST_CORPUS, scales=FAST_SCALES, **kw)


def test_default_suites_pass():
    report = run_suites(fast_config())
    failing = [r.name for r in report.results if not r.ok]
    assert report.ok, failing
    assert {r.name for r in report.results} == set(suite_names())
    for r in report.results:
        assert r.instances > 0 or r.skipped


def test_report_deterministic():
    a = run_suites(fast_config()).to_json()
    b = run_suites(fast_config()).to_json()
    assert a == b
    payload = json.loads(a)
    assert payload["schema"] == "pallen/v1"
    assert payload["verdict"] == "pass"


def test_mutations_detected():
    sensitive = ("core_pal_agreement", "core_pad_palindrome", "core_mirror", "covpal_symmetry")
    for mutation in ("flip_palindrome", "mirror_off_by_one"):
        report = run_suites(fast_config(enabled=sensitive, mutation=mutation))
        assert not report.ok, mutation
    assert set(MUTATIONS) == {"none", "flip_palindrome", "mirror_off_by_one"}


def test_unknown_mutation_and_suite():
    with pytest.raises(ValueError):
        run_suites(fast_config(mutation="nope"))
    with pytest.raises(ValueError):
        run_suites(fast_config(enabled=("no_such_suite",)))


def test_empty_corpus_is_success():
    report = run_suites(
        SuiteConfig(corpus=(), scales=FAST_SCALES, enabled=("generators_prefix_stable",))
    )
    assert report.ok
    assert report.results[0].instances == 0


def test_shrink_word():
    # failure predicate: contains "ab"; the shrinker should reach exactly "ab"
    bad = shrink_word(Word("xxabyy"), lambda w: "ab" in w.text)
    assert bad.text == "ab"


def test_shrink_set():
    from pallen.verifier import shrink_set

    bad = shrink_set(frozenset(range(1, 20)), lambda S: 7 in S and 13 in S)
    assert bad == frozenset({7, 13})


def test_load_config(tmp_path):
    path = tmp_path / "verify.toml"
    path.write_text(
        """
[verify]
seed = 3
mutation = "none"
enabled = ["core_mirror"]

[scales]
fine_wilf = 10

[[corpus]]
family = "thue_morse"
length = 32

[[corpus]]
family = "periodic"
length = 16
params = { preperiod = "c", period = "ab" }
""",
        encoding="utf-8",
    )
    config = load_config(str(path))
    assert config.seed == 3
    assert config.enabled == ("core_mirror",)
    assert config.scales["fine_wilf"] == 10
    assert config.corpus[0].family == "thue_morse"
    assert config.corpus[1].params["period"] == "ab"
    report = run_suites(config)
    assert report.ok
