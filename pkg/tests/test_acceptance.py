"""Acceptance criteria, one test each.

Every test prints a single ``ACCEPTANCE <id> PASS|FAIL`` line (also repeated
in the pytest terminal summary).  Run just this file with

    pytest tests/test_acceptance.py -v -s
"""

import os
import time
from contextlib import contextmanager
from itertools import permutations
from math import factorial

import pytest

from oracles import literal_is_shelling

from lexshell import (
    OrderClass,
    VertexOrder,
    brute_force_shellable,
    build_complex,
    census_lex_orders,
    certificate_to_shelling,
    check_order,
    complete_skeleton,
    count_orders,
    deletion,
    enumerate_complexes,
    example,
    f_vector,
    find_order,
    find_shelling,
    gap_free_facet,
    is_interval,
    is_lex_shellable_under,
    is_semi_closed,
    is_shelling,
    is_shelling_completable,
    is_strongly_connected,
    is_unit_interval,
    is_vertex_decomposable,
    lex_facet_order,
    link,
    nonshellable_interval,
    relabel,
    verify_shedding_order,
)
from lexshell.corpus import (
    EX_3_4_SHELLING,
    EXAMPLE_IDS,
    EnumerationBound,
    HACHIMORI_RELABEL,
    class_order_pairs,
    greedy_connected_labeling,
)
from lexshell.orders import iter_orders

RESULTS: list[str] = []

CLASSES = list(OrderClass)
CORPUS = [i for i in EXAMPLE_IDS if i != "path-graph(k)"]
# every dimension for the n <= 5 sweeps
WIDE = EnumerationBound(max_n=5, max_d=4)


@contextmanager
def criterion(cid: str, title: str, limit: float):
    """Run a criterion body, enforce its wall-clock limit, print one line."""
    t0 = time.perf_counter()
    info: dict = {}
    try:
        yield info
        elapsed = time.perf_counter() - t0
        assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit:.0f}s"
    except BaseException as e:
        elapsed = time.perf_counter() - t0
        line = f"ACCEPTANCE {cid} FAIL ({elapsed:.2f}s) {title}: {type(e).__name__}: {e}"
        RESULTS.append(line)
        print(line)
        raise
    extra = "".join(f" {k}={v}" for k, v in info.items())
    line = f"ACCEPTANCE {cid} PASS ({elapsed:.2f}s) {title}{extra}"
    RESULTS.append(line)
    print(line)


def _unit_interval_pairs(n, d):
    """(complex, order) with the order unit interval, over strongly connected
    enumerated complexes.  Below n = 6 this is the literal search; at n = 6
    it uses the relabeling reduction (checked against the literal search in
    test_orders)."""
    if n < 6:
        for c in enumerate_complexes(n, d, require_strongly_connected=True):
            for o in iter_orders(c, OrderClass.UNIT_INTERVAL):
                yield c, o
    else:
        yield from class_order_pairs(n, d, OrderClass.UNIT_INTERVAL)


def _interval_pairs(n):
    if n < 6:
        for g in enumerate_complexes(n, 1, require_strongly_connected=True):
            for o in iter_orders(g, OrderClass.INTERVAL):
                yield g, o
    else:
        yield from class_order_pairs(n, 1, OrderClass.INTERVAL)


def _descending_shedding(c):
    """n, n-1, ... stopping as soon as the deletion is a simplex."""
    vs = []
    cur = c
    for v in reversed(c.vertex_set):
        if cur.is_simplex():
            break
        vs.append(v)
        cur = deletion(cur, v)
    return tuple(vs)


def test_criterion_01_ex32():
    with criterion("1", "ex-3.2 unit interval, shelling, failing lex order", 1.0):
        c = build_complex([[1, 2, 3], [2, 3, 4], [3, 4, 5]])
        assert is_unit_interval(c, VertexOrder.identity(c))
        assert is_shelling(c, [(1, 2, 3), (2, 3, 4), (3, 4, 5)])
        o = VertexOrder((1, 3, 5, 2, 4))
        seq = lex_facet_order(c, o)
        assert seq == ((1, 2, 3), (3, 4, 5), (2, 3, 4))
        res = is_shelling(c, seq)
        assert not res and res.step == 2 and res.bad_face == (3,)


def test_criterion_02_ex34():
    with criterion("2", "ex-3.4 shelling, zero lex orders, shedding order, VD", 600.0) as info:
        c = example("ex-3.4")
        assert c.m == 20 and c.vertex_set == tuple(range(10))
        assert is_shelling(c, EX_3_4_SHELLING)
        t0 = time.perf_counter()
        assert census_lex_orders(c) == 0
        info["census_s"] = f"{time.perf_counter() - t0:.1f}"
        info["orders"] = factorial(10)
        assert verify_shedding_order(c, (6, 5, 4, 3, 1, 0, 7))
        cert = is_vertex_decomposable(c)
        assert cert is not None
        assert is_shelling(c, certificate_to_shelling(c, cert))
    if (os.cpu_count() or 1) >= 8:
        with criterion("2b", "ex-3.4 census with 8 workers", 120.0):
            assert census_lex_orders(example("ex-3.4"), jobs=8) == 0
    else:
        line = (f"ACCEPTANCE 2b SKIP 8-worker timing needs 8 CPUs, "
                f"this machine has {os.cpu_count()}")
        RESULTS.append(line)
        print(line)


def test_criterion_03_hachimori():
    with criterion("3", "Hachimori: lex shelling, census 7, not VD, relabeling", 5.0):
        h = example("hachimori")
        assert h.m == 13 and h.n == 7
        assert is_lex_shellable_under(h, VertexOrder.identity(h))
        assert census_lex_orders(h) == 7
        assert is_vertex_decomposable(h) is None
        orig = relabel(h, HACHIMORI_RELABEL)
        listed = build_complex([[int(ch) for ch in w] for w in [
            "125", "126", "127", "134", "145", "167", "234",
            "235", "236", "247", "356", "457", "567",
        ]])
        assert orig == listed
        assert orig.m == 13 and f_vector(orig) == f_vector(h)


def test_criterion_04_matroid():
    with criterion("4", "matroid-4.6: census 120, no semi-closed order, VD", 5.0):
        c = build_complex([[1, 2, 3], [1, 2, 5], [2, 3, 4], [2, 4, 5]])
        assert census_lex_orders(c) == 120 == factorial(5)
        assert count_orders(c, OrderClass.SEMI_CLOSED) == 0
        assert is_vertex_decomposable(c) is not None


@pytest.mark.parametrize("d", [2, 3])
def test_criterion_05_nonshellable_interval(d):
    with criterion(f"5[d={d}]", "interval but not shellable", 10.0):
        c = nonshellable_interval(d)
        assert c.pure and c.dim == d and is_strongly_connected(c)
        assert is_interval(c, VertexOrder.identity(c))
        lk = link(c, d + 3)
        assert lk.m == 2
        a, b = lk.facets
        # two (d-1)-faces of the link sharing d-2 vertices: codimension 2
        assert len(set(a) & set(b)) == d - 2
        assert find_shelling(c) is None
        assert not brute_force_shellable(c)
        assert sum(1 for p in permutations(c.facets) if is_shelling(c, p)) == 0
        assert factorial(c.m) == 120


def test_criterion_06_semiclosed_graph():
    with criterion("6", "semi-closed graph is not lex shellable under identity", 1.0):
        g = build_complex([[1, 4], [2, 3], [2, 4], [3, 4]])
        ident = VertexOrder.identity(g)
        assert is_semi_closed(g, ident)
        res = is_lex_shellable_under(g, ident)
        assert not res and res.step == 2 and res.empty_intersection


def test_criterion_07_unit_interval_gives_lex_shelling():
    with criterion("7", "unit interval order => lex shelling, n<=6, d in {1,2}", 900.0) as info:
        pairs = 0
        for d in (1, 2):
            for n in range(d + 1, 7):
                for c, o in _unit_interval_pairs(n, d):
                    pairs += 1
                    assert is_lex_shellable_under(c, o), (c, o)
        info["pairs"] = pairs


def test_criterion_08_interval_graphs():
    with criterion("8", "interval order on graphs => lex shelling; greedy labeling", 600.0) as info:
        pairs = 0
        for n in range(2, 7):
            for g, o in _interval_pairs(n):
                pairs += 1
                assert is_lex_shellable_under(g, o), (g, o)
        graphs = 0
        for n in range(2, 7):
            for g in enumerate_complexes(n, 1, require_strongly_connected=True):
                graphs += 1
                for v in g.vertex_set:
                    o = greedy_connected_labeling(g, start=v)
                    assert is_lex_shellable_under(g, o), (g, v)
        info["pairs"] = pairs
        info["graphs"] = graphs


def test_criterion_09_vertex_decomposable_and_completable():
    with criterion("9", "unit interval => VD, descending shedding, H_i, completable", 1200.0) as info:
        done_complex = set()
        done_base = set()
        for d in (1, 2):
            for n in range(d + 1, 7):
                skeleton = complete_skeleton(n, d)
                for c, o in _unit_interval_pairs(n, d):
                    base = relabel(c, o)
                    if base not in done_base:
                        done_base.add(base)
                        assert is_unit_interval(base, VertexOrder.identity(base))
                        assert verify_shedding_order(base, _descending_shedding(base)), base
                        for i in range(1, n - d + 1):
                            assert base.contains_face(gap_free_facet(i, d)), (base, i)
                    if c in done_complex:
                        continue
                    done_complex.add(c)
                    assert is_vertex_decomposable(c) is not None, c
                    pair = is_shelling_completable(c, n)
                    assert pair is not None, c
                    shelling, full = pair
                    assert is_shelling(c, shelling)
                    assert tuple(full[: len(shelling)]) == tuple(shelling)
                    assert is_shelling(skeleton, full)
        info["complexes"] = len(done_complex)
        info["relabeled"] = len(done_base)


def test_criterion_10_oracle_equivalences():
    with criterion("10", "is_shelling / find_shelling / census agree with oracles", 600.0) as info:
        small = [example(i) for i in CORPUS if example(i).m <= 6]
        small += [example(f"path-graph({k})") for k in range(2, 8)]
        perms = 0
        for c in small:
            for p in permutations(c.facets):
                perms += 1
                assert bool(is_shelling(c, p)) == literal_is_shelling(p), (c, p)
        searched = 0
        for n in range(2, 6):
            for d in range(0, n):
                for c in enumerate_complexes(n, d, bound=WIDE):
                    if c.m <= 6:
                        searched += 1
                        assert (find_shelling(c) is not None) == brute_force_shellable(c), c
        censused = 0
        for n in range(1, 6):
            for d in range(0, n):
                for c in enumerate_complexes(n, d, bound=WIDE):
                    censused += 1
                    assert census_lex_orders(c) == census_lex_orders(c, pruned=False), c
        info["permutations"] = perms
        info["searched"] = searched
        info["censused"] = censused


def test_criterion_11_hierarchy():
    with criterion("11", "unit interval => interval => semi-closed; fig-2b witness", 600.0) as info:
        checked = 0
        # corpus: only members of a class need checking against the next one,
        # and iter_orders lists exactly those members
        for name in CORPUS:
            c = example(name)
            for o in iter_orders(c, OrderClass.UNIT_INTERVAL):
                assert is_interval(c, o), (name, o)
            for o in iter_orders(c, OrderClass.INTERVAL):
                assert is_semi_closed(c, o), (name, o)
            checked += factorial(c.n)
        for n in range(1, 6):
            for d in range(0, n):
                for c in enumerate_complexes(n, d, bound=WIDE):
                    for p in permutations(c.vertex_set):
                        o = VertexOrder(p)
                        ui, iv, sc = (check_order(c, o, k) is None for k in CLASSES)
                        assert (not ui or iv) and (not iv or sc), (c, o)
                        checked += 1
        f = example("fig-2b")
        orders = [VertexOrder(p) for p in permutations(f.vertex_set)]
        assert len(orders) == 120
        assert not any(is_interval(f, o) for o in orders)
        assert find_order(f, OrderClass.INTERVAL) is None
        assert is_semi_closed(f, VertexOrder.identity(f))
        info["orders"] = checked
