#!/usr/bin/env python3
"""Recompute the headline numbers for every named complex and print a table.

    python scripts/reproduce_examples.py            # skips the 10-vertex census
    python scripts/reproduce_examples.py --full     # includes it (about a minute)
"""

import argparse
import time

from lexshell import (
    OrderClass,
    VertexOrder,
    census_lex_orders,
    check_order,
    count_orders,
    example,
    find_shelling,
    is_strongly_connected,
    is_vertex_decomposable,
    nonshellable_interval,
)
from lexshell.corpus import EXAMPLE_IDS


def row(name, c, full):
    ident = VertexOrder.identity(c)
    classes = "".join(
        k.value[0].upper() if check_order(c, ident, k) is None else "-" for k in OrderClass
    )
    t0 = time.perf_counter()
    if c.n <= 8 or full:
        lex = census_lex_orders(c)
    else:
        lex = "skipped"
    sc = count_orders(c, OrderClass.SEMI_CLOSED) if c.n <= 8 else "skipped"
    vd = is_vertex_decomposable(c) is not None
    shellable = find_shelling(c) is not None
    dt = time.perf_counter() - t0
    return (f"{name:20s} n={c.n:<2d} m={c.m:<3d} d={c.dim} sc={is_strongly_connected(c)!s:5s} "
            f"identity={classes} lex-orders={lex!s:8s} semi-closed-orders={sc!s:8s} "
            f"vd={vd!s:5s} shellable={shellable!s:5s} ({dt:.1f}s)")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--full", action="store_true", help="also census the 10-vertex example")
    args = ap.parse_args()
    print("identity column: U = unit interval, I = interval, S = semi-closed")
    for name in EXAMPLE_IDS:
        if name == "path-graph(k)":
            name = "path-graph(5)"
        print(row(name, example(name), args.full))
    for d in (2, 3):
        print(row(f"nonshellable({d})", nonshellable_interval(d), args.full))


if __name__ == "__main__":
    main()
