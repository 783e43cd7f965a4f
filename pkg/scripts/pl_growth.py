#!/usr/bin/env python3
"""Track the factor-maximum of palindromic length across prefix lengths.

Emits CSV rows family,length,max_pl_factors,max_pl_prefixes so the growth
dichotomy (periodic words stabilise, aperiodic ones keep growing) is easy to
plot.
"""

import argparse
import sys

from pallen.generators import GeneratorSpec, generate
from pallen.pl import max_pl

FAMILIES = {
    "periodic": {"preperiod": "c", "period": "ab"},
    "thue_morse": {},
    "fibonacci": {},
    "period_doubling": {},
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lengths", default="64,128,256,512,1024,2048,4096")
    ap.add_argument("--families", default=",".join(FAMILIES))
    args = ap.parse_args()
    lengths = [int(x) for x in args.lengths.split(",")]
    print("family,length,max_pl_factors,max_pl_prefixes")
    for family in args.families.split(","):
        params = FAMILIES[family]
        for n in lengths:
            w = generate(GeneratorSpec(family, n, dict(params)))
            print(f"{family},{n},{max_pl(w, 'factors')},{max_pl(w, 'prefixes')}")
            sys.stdout.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
