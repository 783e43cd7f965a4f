import json

import pytest

from pallen.cli import main
Z3 = "#a#a#c#a#a#"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_pl_noon(capsys):
    code, out = run_cli(capsys, "pl", "--word", "noon")
    assert code == 0 and out.strip() == "1"


def test_pl_profile_csv(capsys):
    code, out = run_cli(capsys, "pl", "--word", "noon", "--csv")
    assert code == 0
    assert out.splitlines() == ["i,pl", "1,1", "2,2", "3,2", "4,1"]


def test_pl_scope(capsys):
    code, out = run_cli(capsys, "pl", "--word", "abaca", "--scope", "factors", "--json")
    assert code == 0
    assert json.loads(out)["max_pl"] == 3


def test_gen(capsys):
    code, out = run_cli(capsys, "gen", "--family", "thue_morse", "--len", "8")
    assert code == 0 and out.strip() == "abbabaab"


def test_gen_to_file_and_word_file_input(tmp_path, capsys):
    path = tmp_path / "w.txt"
    code, _ = run_cli(capsys, "gen", "--family", "fibonacci", "--len", "8", "--out", str(path))
    assert code == 0
    assert path.read_text().splitlines()[1] == "abaababa"
    code, out = run_cli(capsys, "pl", "--word-file", str(path))
    assert code == 0 and out.strip() == "2"  # aba | ababa


def test_base_json(capsys):
    code, out = run_cli(capsys, "base", "--word", Z3, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "pallen/v1"
    pairs = {(p["g"], p["e"]) for p in payload["pairs"]}
    assert pairs == {(1, 1), (1, 3), (2, 1), (1, 9), (1, 11), (2, 9), (3, 1)}


def test_cover(capsys):
    code, out = run_cli(capsys, "cover", "--word", Z3, "--m", "1")
    assert code == 0 and out.split() == ["3", "5", "11"]


def test_npp(capsys):
    code, out = run_cli(capsys, "npp", "--word", Z3)
    assert code == 0 and out.split() == ["1", "3", "11"]


def test_ppl(capsys):
    code, out = run_cli(capsys, "ppl", "--word", "a#a#b")
    assert code == 0 and out.strip() == "2"


def test_ordinary(capsys):
    carrier = "#b#b" + Z3 + "b#b#"
    code, out = run_cli(capsys, "ordinary", "--word", carrier, "--h0", "3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["found"] and payload["npp_count"] >= 3


def test_runs_json(capsys):
    code, out = run_cli(capsys, "runs", "--word", "abc", "--json")
    assert code == 0
    runs = {(r["nu1"], r["nu2"], r["xi"]) for r in json.loads(out)["runs"]}
    assert runs == {(1, 1, 1), (2, 2, 1), (3, 3, 1), (1, 2, 2), (2, 3, 2)}


def test_covpal(capsys):
    code, out = run_cli(capsys, "covpal", "--word", Z3, "--pos", "6", "--kind", "edge", "--json")
    assert code == 0
    spans = json.loads(out)["spans"]
    assert spans == [{"n1": 1, "n2": 11}]


def test_palext(capsys):
    code, out = run_cli(capsys, "palext", "--word", Z3, "--pos", "1", "--json")
    assert code == 0
    sigmas = [t["sigma"] for t in json.loads(out)["tuples"]]
    assert sigmas == [1, 3, 5, 11]


def test_nps_check(capsys):
    code, out = run_cli(
        capsys, "nps", "check", "--word", Z3, "--D", "1,3,5", "--xi", "2", "--m", "1", "--json"
    )
    assert code == 0 and json.loads(out)["member"]


def test_nps_cover_chain(tmp_path, capsys):
    report = tmp_path / "chain.json"
    code, _ = run_cli(
        capsys, "nps", "cover-chain", "--word", Z3, "--k", "2", "--report", str(report)
    )
    assert code == 0
    payload = json.loads(report.read_text())
    assert payload["schema"] == "pallen/v1"
    levels = payload["levels"]
    assert levels[0]["cover"] == [{"D": [1], "xi": 1}]
    assert levels[1]["positions"] == [3, 5, 11]
    assert all(lv["verified"] == "exact" for lv in levels)


def test_harness(capsys):
    code, out = run_cli(capsys, "harness", "--word", Z3, "--k", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["base_count"] == 4
    assert payload["lambda"] == "518400000000"


def test_verify_pass_and_fail(tmp_path, capsys):
    config = tmp_path / "verify.toml"
    config.write_text(
        """
[verify]
enabled = ["core_mirror", "core_pal_agreement"]
""",
        encoding="utf-8",
    )
    report = tmp_path / "report.json"
    code, _ = run_cli(capsys, "verify", "--config", str(config), "--report", str(report))
    assert code == 0
    assert json.loads(report.read_text())["verdict"] == "pass"
    code, out = run_cli(
        capsys, "verify", "--config", str(config), "--mutation", "mirror_off_by_one"
    )
    assert code == 1
    assert json.loads(out)["verdict"] == "fail"


def test_verify_config_error(tmp_path, capsys):
    code, _ = run_cli(capsys, "verify", "--config", str(tmp_path / "missing.toml"))
    assert code == 2


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as err:
        main(["pl", "--scope", "bogus", "--word", "ab"])
    assert err.value.code == 2


def test_value_error_exit_2(capsys):
    code = main(["cover", "--word", "a#a", "--m", "1"])  # no pad prefix
    assert code == 2
