#!/usr/bin/env python3
"""Count (complex, order) pairs per order class and check the lex-shelling
implications on them, for a chosen (n, d).

    python scripts/sweep_properties.py 6 2
"""

import argparse
import time

from lexshell import OrderClass, is_lex_shellable_under
from lexshell.corpus import class_order_pairs


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int)
    ap.add_argument("d", type=int)
    args = ap.parse_args()
    for cls in OrderClass:
        t0 = time.perf_counter()
        pairs = lex = 0
        for c, o in class_order_pairs(args.n, args.d, cls):
            pairs += 1
            lex += bool(is_lex_shellable_under(c, o))
        print(f"{cls.value:14s} pairs={pairs:<8d} lex-shellable={lex:<8d} "
              f"({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
