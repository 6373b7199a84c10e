#!/usr/bin/env python3
"""Time the lex-order census on a complex file with several worker counts.

    python scripts/census_timing.py corpus/ex-3.4.txt --jobs 1 2 4 8
"""

import argparse
import time
from pathlib import Path

from lexshell import census_lex_orders, parse_complex


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("path")
    ap.add_argument("--jobs", type=int, nargs="+", default=[1])
    ap.add_argument("--unpruned", action="store_true", help="disable prefix pruning")
    args = ap.parse_args()
    c = parse_complex(Path(args.path).read_text())
    for j in args.jobs:
        t0 = time.perf_counter()
        k = census_lex_orders(c, pruned=not args.unpruned, jobs=j)
        print(f"jobs={j} count={k} seconds={time.perf_counter() - t0:.2f}")


if __name__ == "__main__":
    main()
