"""Unit interval, interval and semi-closed vertex orders.

Every predicate reads a facet through the positions an order assigns to its
vertices, so ``v0 < v1 < ... < vd`` always means increasing position.  A
replacement tuple ``w`` only names a facet when its positions are strictly
increasing; tuples that collide or fall out of order are skipped.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator, Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations

from .core import Complex, Face, require_pure
from .errors import InvalidOrder


class OrderClass(enum.Enum):
    UNIT_INTERVAL = "unit-interval"
    INTERVAL = "interval"
    SEMI_CLOSED = "semi-closed"

    @classmethod
    def parse(cls, s: str | OrderClass) -> OrderClass:
        if isinstance(s, OrderClass):
            return s
        key = s.strip().lower().replace("_", "-")
        for member in cls:
            if key in (member.value, member.name.lower().replace("_", "-")):
                return member
        raise ValueError(f"unknown order class {s!r}")


@dataclass(frozen=True)
class VertexOrder:
    """Vertices listed by increasing position; position numbering starts at 1."""

    sequence: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.sequence)) != len(self.sequence):
            raise InvalidOrder(f"order {self.sequence} repeats a vertex")

    @classmethod
    def identity(cls, c: Complex) -> VertexOrder:
        return cls(c.vertex_set)

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> VertexOrder:
        """Build from ``vertex -> position`` with positions exactly ``1..n``."""
        n = len(mapping)
        if sorted(mapping.values()) != list(range(1, n + 1)):
            raise InvalidOrder("positions must be exactly 1..n")
        return cls(tuple(sorted(mapping, key=mapping.__getitem__)))

    @cached_property
    def mapping(self) -> dict[int, int]:
        return {v: i + 1 for i, v in enumerate(self.sequence)}

    def position(self, v: int) -> int:
        return self.mapping[v]

    def inverse(self) -> dict[int, int]:
        return {i + 1: v for i, v in enumerate(self.sequence)}

    def __str__(self) -> str:
        return " < ".join(map(str, self.sequence))


def validate_order(c: Complex, o: VertexOrder) -> None:
    if set(o.sequence) != set(c.vertex_set) or len(o.sequence) != c.n:
        raise InvalidOrder(f"order {o.sequence} is not a bijection on {c.vertex_set}")


@dataclass(frozen=True)
class OrderViolation:
    """``facet`` requires ``missing``, which is not a facet (original labels)."""

    facet: Face
    missing: Face


# Requirement generators.  All work on sorted position tuples and yield in
# lexicographic order.


def _unit_interval_required(p: Face) -> Iterator[Face]:
    return combinations(range(p[0], p[-1] + 1), len(p))


def _down_required(p: Face) -> Iterator[Face]:
    # v0 fixed; v0 < w1 < ... < wd with wi <= vi
    d = len(p) - 1
    acc = [p[0]]

    def rec(i: int) -> Iterator[Face]:
        if i > d:
            yield tuple(acc)
            return
        for w in range(acc[-1] + 1, p[i] + 1):
            acc.append(w)
            yield from rec(i + 1)
            acc.pop()

    return rec(1)


def _up_required(p: Face) -> Iterator[Face]:
    # vd fixed; w0 < ... < w_{d-1} < vd with wi >= vi
    d = len(p) - 1
    acc: list[int] = []

    def rec(i: int) -> Iterator[Face]:
        if i == d:
            yield (*acc, p[d])
            return
        lo = p[i] if not acc else max(p[i], acc[-1] + 1)
        for w in range(lo, p[d]):
            acc.append(w)
            yield from rec(i + 1)
            acc.pop()

    return rec(0)


def _first_missing(required: Iterable[Face], present: set) -> Face | None:
    for t in required:
        if t not in present:
            return t
    return None


def _facet_violation(p: Face, present: set, cls: OrderClass) -> Face | None:
    """First missing required position tuple for facet ``p``, or None."""
    if cls is OrderClass.UNIT_INTERVAL:
        return _first_missing(_unit_interval_required(p), present)
    down = _first_missing(_down_required(p), present)
    if cls is OrderClass.INTERVAL or down is None:
        return down
    if _first_missing(_up_required(p), present) is None:
        return None
    return down


def check_order(c: Complex, o: VertexOrder, cls: OrderClass | str) -> OrderViolation | None:
    """Return the lexicographically first violation, or None if ``o`` is in ``cls``.

    Facets are scanned in increasing order of their position tuples; for a
    semi-closed failure the witness comes from the first-vertex-fixed clause.
    """
    cls = OrderClass.parse(cls)
    require_pure(c)
    validate_order(c, o)
    pos = o.mapping
    back = o.inverse()
    ptuples = sorted(tuple(sorted(pos[v] for v in f)) for f in c.facets)
    present = set(ptuples)
    for p in ptuples:
        miss = _facet_violation(p, present, cls)
        if miss is not None:
            return OrderViolation(
                tuple(sorted(back[i] for i in p)), tuple(sorted(back[i] for i in miss))
            )
    return None


def is_unit_interval(c: Complex, o: VertexOrder) -> bool:
    return check_order(c, o, OrderClass.UNIT_INTERVAL) is None


def is_interval(c: Complex, o: VertexOrder) -> bool:
    return check_order(c, o, OrderClass.INTERVAL) is None


def is_semi_closed(c: Complex, o: VertexOrder) -> bool:
    return check_order(c, o, OrderClass.SEMI_CLOSED) is None


def satisfies(c: Complex, o: VertexOrder, cls: OrderClass | str) -> bool:
    return check_order(c, o, cls) is None


# -- search over orders ------------------------------------------------------


def _iter_orders(c: Complex, cls: OrderClass, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """Depth-first over position assignments, candidates in increasing label.

    A facet is checked as soon as its last vertex is placed: every tuple it
    requires lies inside already-assigned positions, so the prune is exact.
    """
    verts = c.vertex_set
    n = len(verts)
    size = c.dim + 1
    m = len(c.facets)
    facets_of = {v: [i for i, f in enumerate(c.facets) if v in f] for v in verts}
    ptuple: list[list[int]] = [[] for _ in range(m)]
    present: set[Face] = set()
    seq: list[int] = []
    used: set[int] = set()

    def place(v: int, k: int) -> tuple[list[Face], bool]:
        done = []
        for i in facets_of[v]:
            ptuple[i].append(k)
            if len(ptuple[i]) == size:
                t = tuple(ptuple[i])
                present.add(t)
                done.append(t)
        ok = all(_facet_violation(t, present, cls) is None for t in done)
        return done, ok

    def unplace(v: int, done: list[Face]) -> None:
        for t in done:
            present.discard(t)
        for i in facets_of[v]:
            ptuple[i].pop()

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k > n:
            yield tuple(seq)
            return
        cands = verts if not (k == 1 and first is not None) else (first,)
        for v in cands:
            if v in used:
                continue
            done, ok = place(v, k)
            if ok:
                used.add(v)
                seq.append(v)
                yield from rec(k + 1)
                seq.pop()
                used.discard(v)
            unplace(v, done)

    return rec(1)


def iter_orders(c: Complex, cls: OrderClass | str) -> Iterator[VertexOrder]:
    """Every order in ``cls``, in lexicographic order of vertex sequences."""
    cls = OrderClass.parse(cls)
    require_pure(c)
    return (VertexOrder(s) for s in _iter_orders(c, cls))


def _first_in_subtree(args):
    c, cls, v = args
    return next(_iter_orders(c, cls, v), None)


def _count_in_subtree(args):
    c, cls, v = args
    return sum(1 for _ in _iter_orders(c, cls, v))


def find_order(c: Complex, cls: OrderClass | str, jobs: int = 1) -> VertexOrder | None:
    """Lexicographically first order in ``cls``, or None.  Independent of ``jobs``."""
    cls = OrderClass.parse(cls)
    require_pure(c)
    if jobs <= 1:
        s = next(_iter_orders(c, cls), None)
        return None if s is None else VertexOrder(s)
    tasks = [(c, cls, v) for v in c.vertex_set]
    with ProcessPoolExecutor(jobs) as ex:
        for s in ex.map(_first_in_subtree, tasks):
            if s is not None:
                return VertexOrder(s)
    return None


def count_orders(c: Complex, cls: OrderClass | str, jobs: int = 1, pruned: bool = True) -> int:
    """Exact number of the ``n!`` orders that lie in ``cls``."""
    cls = OrderClass.parse(cls)
    require_pure(c)
    if not pruned:
        return sum(
            1 for s in permutations(c.vertex_set) if check_order(c, VertexOrder(s), cls) is None
        )
    if jobs <= 1:
        return sum(1 for _ in _iter_orders(c, cls))
    tasks = [(c, cls, v) for v in c.vertex_set]
    with ProcessPoolExecutor(jobs) as ex:
        return sum(ex.map(_count_in_subtree, tasks))
