"""Named complexes, the non-shellable interval family, and small enumerations.

``enumerate_complexes`` is the brute-force universe behind the property
suites: every labeled pure complex on ``{1..n}``, no isomorphism reduction.
"""

from __future__ import annotations

import re
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations, permutations

from .core import Complex, Face, build_complex, masks_strongly_connected, relabel
from .errors import BoundExceeded, DimensionTooSmall, InvalidDimensions, TooManyFacets, UnknownExample
from .orders import (
    OrderClass,
    VertexOrder,
    _down_required,
    _unit_interval_required,
    _up_required,
)
from .shelling import is_shelling

HACHIMORI_RELABEL = {1: 5, 2: 6, 3: 2, 4: 7, 5: 3, 6: 1, 7: 4}

_FACETS: dict[str, list[str] | list[list[int]]] = {
    "ex-3.2": ["123", "234", "345"],
    "ex-3.4": [
        "123", "129", "135", "029", "234", "124", "136", "127", "027", "017",
        "289", "278", "346", "345", "089", "245", "789", "018", "156", "256",
    ],
    "hachimori": [
        "124", "125", "135", "136", "147", "167", "235",
        "236", "246", "346", "347", "357", "567",
    ],
    "matroid-4.6": ["123", "125", "234", "245"],
    "semiclosed-graph": ["14", "23", "24", "34"],
    "fig-2b": ["123", "124", "134", "235", "245", "345"],
    "claw": ["12", "13", "14"],
}

# ex-3.4's facets in the listed order, which is a shelling.
EX_3_4_SHELLING: tuple[Face, ...] = tuple(tuple(int(ch) for ch in s) for s in _FACETS["ex-3.4"])

EXAMPLE_IDS = (
    "ex-3.2",
    "ex-3.4",
    "hachimori",
    "hachimori-original",
    "matroid-4.6",
    "semiclosed-graph",
    "fig-2b",
    "claw",
    "path-graph(k)",
)

_PATH_RE = re.compile(r"path-graph\((\d+)\)$")


def _digits(rows) -> list[list[int]]:
    return [[int(ch) for ch in r] for r in rows]


def path_graph(k: int) -> Complex:
    """Path 1-2-...-k (for k = 1 a single vertex)."""
    if k < 1:
        raise UnknownExample("path-graph needs k >= 1")
    if k == 1:
        return build_complex([[1]])
    return build_complex([[i, i + 1] for i in range(1, k)])


def example(name: str) -> Complex:
    if name == "hachimori-original":
        return relabel(example("hachimori"), HACHIMORI_RELABEL)
    if name in _FACETS:
        return build_complex(_digits(_FACETS[name]))
    mt = _PATH_RE.match(name)
    if mt:
        return path_graph(int(mt.group(1)))
    raise UnknownExample(f"unknown example {name!r}; known: {', '.join(EXAMPLE_IDS)}")


def nonshellable_interval(d: int) -> Complex:
    """Five facets on ``1..d+3``: interval under the identity, never shellable for d >= 2."""
    if d < 2:
        raise DimensionTooSmall(f"family is defined for d >= 2, got {d}")
    base = list(range(1, d + 1))
    return build_complex(
        [
            base + [d + 1],
            base + [d + 2],
            base + [d + 3],
            list(range(2, d + 3)),
            list(range(3, d + 4)),
        ]
    )


def gap_free_facet(i: int, d: int) -> Face:
    if i < 1 or d < 0:
        raise InvalidDimensions(f"need i >= 1 and d >= 0, got i={i}, d={d}")
    return tuple(range(i, i + d + 1))


@dataclass(frozen=True)
class EnumerationBound:
    max_n: int = 7
    max_d: int = 3


def iter_facet_subsets(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """Facet-mask tuples for every nonempty subset of the d-skeleton on 1..n
    that uses all n vertices, in increasing subset-index order."""
    skel = [sum(1 << v for v in f) for f in combinations(range(1, n + 1), d + 1)]
    full = sum(1 << v for v in range(1, n + 1))
    k = len(skel)
    for idx in range(1, 1 << k):
        chosen = []
        cover = 0
        j = 0
        x = idx
        while x:
            if x & 1:
                chosen.append(skel[j])
                cover |= skel[j]
            x >>= 1
            j += 1
        if cover == full:
            yield tuple(chosen)


def enumerate_complexes(
    n: int,
    d: int,
    require_strongly_connected: bool = False,
    bound: EnumerationBound = EnumerationBound(),
) -> Iterator[Complex]:
    """Every pure d-dimensional complex whose vertex set is exactly {1..n}."""
    if not 0 <= d < n:
        raise InvalidDimensions(f"need 0 <= d < n, got n={n}, d={d}")
    if n > bound.max_n or d > bound.max_d:
        raise BoundExceeded(f"(n={n}, d={d}) exceeds bound {bound}")
    for masks in iter_facet_subsets(n, d):
        if require_strongly_connected and not masks_strongly_connected(masks, d):
            continue
        yield Complex.from_masks(masks)


def _requirement_masks(skel: list[Face], cls: OrderClass) -> list[tuple[int, ...]]:
    """Per skeleton facet, the required facets as bitmasks over skeleton indices.

    Semi-closed facets get two alternatives; the others one.
    """
    index = {f: i for i, f in enumerate(skel)}

    def to_mask(tuples) -> int:
        return sum(1 << index[t] for t in tuples)

    out = []
    for f in skel:
        if cls is OrderClass.UNIT_INTERVAL:
            out.append((to_mask(_unit_interval_required(f)),))
        elif cls is OrderClass.INTERVAL:
            out.append((to_mask(_down_required(f)),))
        else:
            out.append((to_mask(_down_required(f)), to_mask(_up_required(f))))
    return out


def identity_class_complexes(
    n: int, d: int, cls: OrderClass | str, require_strongly_connected: bool = True
) -> Iterator[Complex]:
    """Complexes from ``enumerate_complexes`` whose identity order lies in ``cls``."""
    cls = OrderClass.parse(cls)
    skel = list(combinations(range(1, n + 1), d + 1))
    skel_masks = [sum(1 << v for v in f) for f in skel]
    req = _requirement_masks(skel, cls)
    full = sum(1 << v for v in range(1, n + 1))
    for idx in range(1, 1 << len(skel)):
        ok = True
        cover = 0
        chosen = []
        j = 0
        x = idx
        while x:
            if x & 1:
                if not any(r & ~idx == 0 for r in req[j]):
                    ok = False
                    break
                chosen.append(skel_masks[j])
                cover |= skel_masks[j]
            x >>= 1
            j += 1
        if not ok or cover != full:
            continue
        if require_strongly_connected and not masks_strongly_connected(chosen, d):
            continue
        yield Complex.from_masks(chosen)


def class_order_pairs(
    n: int, d: int, cls: OrderClass | str, require_strongly_connected: bool = True
) -> Iterator[tuple[Complex, VertexOrder]]:
    """Every (complex, order) with the complex from ``enumerate_complexes(n, d)``
    and the order in ``cls`` for it.

    A pair (c, o) qualifies iff relabeling c by o's positions gives a complex
    whose identity order qualifies, so each qualifying identity complex is
    paired with all n! relabelings; each pair appears exactly once.
    """
    perms = list(permutations(range(1, n + 1)))
    for base in identity_class_complexes(n, d, cls, require_strongly_connected):
        for seq in perms:
            # position p is taken by vertex seq[p-1]
            c = relabel(base, {p: seq[p - 1] for p in range(1, n + 1)})
            yield c, VertexOrder(seq)


def brute_force_shellable(c: Complex, max_facets: int = 7) -> bool:
    """Try every permutation of the facets with the full checker."""
    if len(c.facets) > max_facets:
        raise TooManyFacets(f"{len(c.facets)} facets exceeds {max_facets}")
    return any(is_shelling(c, p) for p in permutations(c.facets))


def greedy_connected_labeling(c: Complex, start: int | None = None) -> VertexOrder:
    """For a connected graph: label ``start`` first, then repeatedly the
    smallest vertex adjacent to something already labeled."""
    verts = c.vertex_set
    start = verts[0] if start is None else start
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for f in c.facets:
        if len(f) == 2:
            a, b = f
            adj[a].add(b)
            adj[b].add(a)
    seq = [start]
    seen = {start}
    while len(seq) < len(verts):
        nxt = min((w for v in seq for w in adj[v] if w not in seen), default=None)
        if nxt is None:
            raise ValueError("graph is not connected")
        seq.append(nxt)
        seen.add(nxt)
    return VertexOrder(tuple(seq))
