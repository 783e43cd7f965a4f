"""Command-line entry point: one subcommand per toolkit area, text/JSON/CSV
output, exit codes 0 (ok), 1 (verification failure), 2 (usage error)."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import base_positions as bp
from . import covpal as cv
from . import nps as np_
from . import palindromics as pal
from . import periodicity as per
from . import pl
from . import verifier as vf
from .generators import FAMILIES, GeneratorSpec, generate
from .words import DEFAULT_PAD, Word, read_word_file

SCHEMA = "pallen/v1"


def _emit(payload: dict, as_json: bool, fallback: str | None = None) -> None:
    if as_json:
        payload = {"schema": SCHEMA, **payload}
        print(json.dumps(payload, sort_keys=True))
    else:
        print(fallback if fallback is not None else payload)


def _load_word(args: argparse.Namespace) -> Word:
    if getattr(args, "word", None):
        return Word(args.word)
    if getattr(args, "word_file", None):
        pad, words = read_word_file(args.word_file)
        if not words:
            raise SystemExit("word file is empty")
        if pad != args.pad:
            args.pad = pad
        return words[0]
    raise SystemExit("need --word or --word-file")


def _add_word_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--word", help="inline word")
    p.add_argument("--word-file", help="word file (pad=<sym> header, one word per line)")
    p.add_argument("--pad", default=DEFAULT_PAD, help="pad symbol (default '#')")
    p.add_argument("--json", action="store_true", help="JSON output")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pallen", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a corpus word")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--len", type=int, required=True, dest="length")
    p.add_argument("--preperiod", default="")
    p.add_argument("--period", default="")
    p.add_argument("--alphabet-size", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write to a word file instead of stdout")
    p.add_argument("--pad", default=DEFAULT_PAD)

    p = sub.add_parser("pl", help="palindromic length (optionally the prefix profile)")
    _add_word_args(p)
    p.add_argument("--profile", action="store_true")
    p.add_argument("--csv", action="store_true", help="emit 'i,pl' rows")
    p.add_argument("--scope", choices=("prefixes", "factors"), help="emit max PL over the scope")

    p = sub.add_parser("ppl", help="padded palindromic length")
    _add_word_args(p)

    p = sub.add_parser("cover", help="pad positions at padded palindromic length m")
    _add_word_args(p)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("npp", help="non-periodic palindromic prefix lengths")
    _add_word_args(p)

    p = sub.add_parser("ordinary", help="search for an ordinary padded palindromic factor")
    _add_word_args(p)
    p.add_argument("--h0", type=int, required=True)

    p = sub.add_parser("runs", help="all runs of the word")
    _add_word_args(p)

    p = sub.add_parser("covpal", help="covering palindromes of a position")
    _add_word_args(p)
    p.add_argument("--pos", type=int, required=True)
    p.add_argument("--kind", default="all", choices=cv.COV_KINDS)

    p = sub.add_parser("palext", help="palindromic extension tuples of a position")
    _add_word_args(p)
    p.add_argument("--pos", type=int, required=True)

    p = sub.add_parser("nps", help="nested periodic structures")
    nsub = p.add_subparsers(dest="nps_command", required=True)
    pc = nsub.add_parser("check", help="degree membership of (D, xi)")
    _add_word_args(pc)
    pc.add_argument("--D", required=True, help="comma-separated positions")
    pc.add_argument("--xi", type=int, required=True)
    pc.add_argument("--m", type=int, required=True)
    pv = nsub.add_parser("cover-chain", help="degree-m covers of the length-m position sets")
    _add_word_args(pv)
    pv.add_argument("--k", type=int, required=True)
    pv.add_argument("--report", help="write the JSON report to this path")

    p = sub.add_parser("base", help="base positions of the prefix chain")
    _add_word_args(p)

    p = sub.add_parser("harness", help="base-position counting harness")
    _add_word_args(p)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--config", help="TOML config")
    p.add_argument("--report", help="write the JSON report to this path")
    p.add_argument("--suite", action="append", help="run only these suites")
    p.add_argument("--mutation", default=None, choices=sorted(vf.MUTATIONS))
    return ap


def _cmd_gen(args) -> int:
    params = {}
    if args.family == "periodic":
        params = {"preperiod": args.preperiod, "period": args.period}
    elif args.family == "random":
        params = {"alphabet_size": args.alphabet_size, "seed": args.seed}
    word = generate(GeneratorSpec(args.family, args.length, params))
    if args.out:
        from .words import write_word_file

        write_word_file(args.out, [word], args.pad)
    else:
        print(word.text)
    return 0


def _cmd_pl(args) -> int:
    w = _load_word(args)
    if args.scope:
        _emit({"max_pl": pl.max_pl(w, args.scope), "scope": args.scope}, args.json,
              str(pl.max_pl(w, args.scope)))
        return 0
    profile = pl.pl_fast(w)
    if args.profile or args.csv:
        if args.csv:
            print("i,pl")
            for i, v in enumerate(profile.prefix_pl, start=1):
                print(f"{i},{v}")
        else:
            _emit({"prefix_pl": list(profile.prefix_pl)}, args.json, " ".join(map(str, profile.prefix_pl)))
    else:
        _emit({"pl": profile.prefix_pl[-1]}, args.json, str(profile.prefix_pl[-1]))
    return 0


def _cmd_ppl(args) -> int:
    w = _load_word(args)
    _emit({"ppl": pl.ppl(w, args.pad)}, args.json, str(pl.ppl(w, args.pad)))
    return 0


def _cmd_cover(args) -> int:
    w = _load_word(args)
    positions = sorted(pl.cover(w, args.m, args.pad))
    _emit({"m": args.m, "positions": positions}, args.json, " ".join(map(str, positions)))
    return 0


def _cmd_npp(args) -> int:
    w = _load_word(args)
    lengths = list(pal.npp(w))
    _emit({"npp_lengths": lengths}, args.json, " ".join(map(str, lengths)))
    return 0


def _cmd_ordinary(args) -> int:
    w = _load_word(args)
    got = pal.find_ordinary(w, args.h0, args.pad)
    if got is None:
        _emit({"found": False}, args.json, "none")
        return 0
    i, j = got
    factor = w.sub(i, j)
    _emit(
        {"found": True, "start": i, "end": j, "factor": factor.text,
         "npp_count": len(pal.npp(factor))},
        args.json,
        f"{i} {j} {factor.text}",
    )
    return 0


def _cmd_runs(args) -> int:
    w = _load_word(args)
    runs = sorted(per.find_runs(w))
    _emit(
        {"runs": [{"nu1": r.nu1, "nu2": r.nu2, "xi": r.xi} for r in runs]},
        args.json,
        "\n".join(f"{r.nu1} {r.nu2} {r.xi}" for r in runs),
    )
    return 0


def _cmd_covpal(args) -> int:
    w = _load_word(args)
    spans = sorted(cv.cov_pal(w, args.pos, args.kind))
    _emit(
        {"pos": args.pos, "kind": args.kind,
         "spans": [{"n1": s.n1, "n2": s.n2} for s in spans]},
        args.json,
        "\n".join(f"{s.n1} {s.n2}" for s in spans),
    )
    return 0


def _cmd_palext(args) -> int:
    w = _load_word(args)
    tuples = sorted(pal.pal_ext(w, args.pos), key=lambda t: t.sigma)
    _emit(
        {"tuples": [
            {"n": t.n, "p1": t.p1, "p2": t.p2, "alpha": t.alpha, "sigma": t.sigma}
            for t in tuples
        ]},
        args.json,
        "\n".join(f"{t.n} {t.p1!r} {t.p2!r} {t.alpha} {t.sigma}" for t in tuples),
    )
    return 0


def _cmd_nps(args) -> int:
    w = _load_word(args)
    if args.nps_command == "check":
        D = frozenset(int(x) for x in args.D.split(","))
        ok = np_.nestper_member(w, args.m, D, args.xi)
        _emit({"member": ok, "m": args.m, "xi": args.xi, "D": sorted(D)}, args.json,
              "member" if ok else "not-member")
        return 0
    levels = np_.cover_chain(w, args.k, pad=args.pad)
    payload = {
        "levels": [
            {
                "m": lv.m,
                "cover": [{"D": sorted(c.D), "xi": c.xi} for c in lv.cover.members],
                "verified": lv.cover.verified,
                "positions": sorted(lv.target),
            }
            for lv in levels
        ]
    }
    text = json.dumps({"schema": SCHEMA, **payload}, sort_keys=True, indent=2)
    if args.report:
        Path(args.report).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return 0


def _cmd_base(args) -> int:
    w = _load_word(args)
    bb = sorted(bp.build_base(w))
    _emit(
        {"pairs": [{"g": g, "e": e} for g, e in bb],
         "positions": sorted(bp.b_tilde(bb))},
        args.json,
        "\n".join(f"{g} {e}" for g, e in bb),
    )
    return 0


def _cmd_harness(args) -> int:
    w = _load_word(args)
    rep = bp.counting_harness(w, args.k, args.pad)
    payload = {
        "h": rep.h,
        "k": rep.k,
        "base_count": rep.base_count,
        "cover_intersections": [
            {"m": m, "positions": list(ps)} for m, ps in sorted(rep.cover_intersections.items())
        ],
        "covered_base_positions": rep.covered_base_positions,
        "bound": str(rep.bound),
        "bound_exceeds_observed": rep.bound_exceeds_observed,
        "lambda": str(rep.lam_value),
        "theta": [str(t) for t in rep.theta_values],
        "h0": rep.h0,
        "eq1_holds": rep.eq1_holds,
    }
    _emit(payload, args.json, json.dumps(payload, sort_keys=True, indent=2))
    return 0


def _cmd_verify(args) -> int:
    try:
        config = vf.load_config(args.config) if args.config else vf.SuiteConfig()
        if args.suite:
            config = vf.SuiteConfig(
                corpus=config.corpus, seed=config.seed, scales=config.scales,
                enabled=tuple(args.suite), mutation=config.mutation, pad=config.pad,
            )
        if args.mutation:
            config = vf.SuiteConfig(
                corpus=config.corpus, seed=config.seed, scales=config.scales,
                enabled=config.enabled, mutation=args.mutation, pad=config.pad,
            )
        report = vf.run_suites(config)
    except (ValueError, OSError, KeyError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    text = report.to_json()
    if args.report:
        Path(args.report).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return 0 if report.ok else 1


_COMMANDS = {
    "gen": _cmd_gen,
    "pl": _cmd_pl,
    "ppl": _cmd_ppl,
    "cover": _cmd_cover,
    "npp": _cmd_npp,
    "ordinary": _cmd_ordinary,
    "runs": _cmd_runs,
    "covpal": _cmd_covpal,
    "palext": _cmd_palext,
    "nps": _cmd_nps,
    "base": _cmd_base,
    "harness": _cmd_harness,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
