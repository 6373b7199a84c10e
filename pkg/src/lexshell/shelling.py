"""Shellings, lexicographic facet orders and the lex-shelling census."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from math import factorial

from .core import Complex, Face, face_mask, mask_face, maximal_masks, require_pure
from .errors import Inconclusive, NotAPermutation
from .orders import VertexOrder, validate_order

FacetSequence = tuple[Face, ...]


class NodeBudget:
    """Search-node counter shared by cooperating searches; None means unlimited."""

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.used = 0

    @classmethod
    def of(cls, budget: int | NodeBudget | None) -> NodeBudget:
        return budget if isinstance(budget, NodeBudget) else cls(budget)

    def tick(self) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise Inconclusive(self.limit)


@dataclass(frozen=True)
class ShellingCertificate:
    """A shelling plus, for every step after the first, the codimension-one
    faces generating the intersection with the earlier facets."""

    sequence: FacetSequence
    step_witnesses: tuple[tuple[Face, ...], ...]

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class ShellingFailure:
    """First failing step (1-based position in the sequence).

    ``bad_face`` is a maximal face of the intersection whose dimension is too
    small; it is ``()`` when the new facet meets the earlier ones only in ∅.
    """

    sequence: FacetSequence
    step: int
    bad_face: Face

    @property
    def empty_intersection(self) -> bool:
        return self.bad_face == ()

    def __bool__(self) -> bool:
        return False


ShellingResult = ShellingCertificate | ShellingFailure


def step_passes(f: int, prev: Sequence[int], d: int) -> bool:
    """Whether <f> ∩ <prev> is pure of dimension d-1 (facet masks of size d+1).

    ``miss`` collects the vertices of f left out by the codimension-one
    intersections; a smaller intersection f∩g is covered by one of those
    iff it avoids some vertex of ``miss``.
    """
    miss = 0
    for g in prev:
        if (f & g).bit_count() == d:
            miss |= f & ~g
    if not miss:
        return False
    for g in prev:
        if not miss & ~g:
            return False
    return True


def _normalize_sequence(c: Complex, seq: Iterable[Iterable[int]]) -> FacetSequence:
    out = tuple(tuple(sorted(f)) for f in seq)
    if len(out) != len(c.facets) or set(out) != set(c.facets):
        raise NotAPermutation("sequence must list every facet exactly once")
    return out


def is_shelling(c: Complex, seq: Iterable[Iterable[int]]) -> ShellingResult:
    require_pure(c)
    seq = _normalize_sequence(c, seq)
    d = c.dim
    masks = [face_mask(f) for f in seq]
    witnesses = []
    for k in range(1, len(masks)):
        f = masks[k]
        gens = maximal_masks(f & g for g in masks[:k])
        small = [g for g in gens if g.bit_count() != d]
        if small:
            bad = min(mask_face(g) for g in small)
            return ShellingFailure(seq, k + 1, bad)
        witnesses.append(tuple(sorted(mask_face(g) for g in gens)))
    return ShellingCertificate(seq, tuple(witnesses))


def lex_facet_order(c: Complex, o: VertexOrder) -> FacetSequence:
    require_pure(c)
    validate_order(c, o)
    pos = o.mapping
    return tuple(sorted(c.facets, key=lambda f: sorted(pos[v] for v in f)))


def is_lex_shellable_under(c: Complex, o: VertexOrder) -> ShellingResult:
    return is_shelling(c, lex_facet_order(c, o))


# -- lex census --------------------------------------------------------------


def _census_subtree(
    c: Complex,
    fixed: tuple[int, ...] = (),
    budget: int | None = None,
    progress: Callable[[int], None] | None = None,
) -> int:
    """Count lex-shelling orders whose sequence starts with ``fixed``.

    Position p (0-based) carries weight 2**(n-1-p); summing the weights of a
    facet's placed vertices gives a key that is larger exactly when the
    facet comes earlier lexicographically, and a partly placed facet's key
    still compares correctly against every fully placed one.  So the next
    facet of the lex order is known whenever the largest key among unplaced
    facets belongs to a fully placed facet.
    """
    verts = c.vertex_set
    n = len(verts)
    d = c.dim
    size = d + 1
    masks = c.masks
    m = len(masks)
    facets_of = {v: [i for i, f in enumerate(c.facets) if v in f] for v in verts}
    key = [0] * m
    cnt = [0] * m
    placed = [False] * m
    prefix: list[int] = []
    order_stack: list[int] = []
    used: set[int] = set()
    nodes = 0

    def rec(k: int) -> int:
        nonlocal nodes
        total = 0
        w = 1 << (n - 1 - k)
        cands = (fixed[k],) if k < len(fixed) else verts
        for v in cands:
            if v in used:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise Inconclusive(budget)
            if progress is not None and nodes % 100_000 == 0:
                progress(nodes)
            for i in facets_of[v]:
                key[i] += w
                cnt[i] += 1
            added = 0
            ok = True
            while len(prefix) < m:
                best = -1
                bi = -1
                for i in range(m):
                    if not placed[i] and key[i] > best:
                        best = key[i]
                        bi = i
                if cnt[bi] < size:
                    break
                f = masks[bi]
                if prefix and not step_passes(f, prefix, d):
                    ok = False
                    break
                placed[bi] = True
                prefix.append(f)
                order_stack.append(bi)
                added += 1
            if ok:
                if len(prefix) == m:
                    total += factorial(n - k - 1)
                else:
                    used.add(v)
                    total += rec(k + 1)
                    used.discard(v)
            for _ in range(added):
                placed[order_stack.pop()] = False
                prefix.pop()
            for i in facets_of[v]:
                key[i] -= w
                cnt[i] -= 1
        return total

    return rec(0)


def _census_task(args):
    c, fixed, budget = args
    return _census_subtree(c, fixed, budget)


def census_lex_orders(
    c: Complex,
    *,
    pruned: bool = True,
    jobs: int = 1,
    budget: int | None = None,
    progress: Callable[[int], None] | None = None,
) -> int:
    """Number of the ``n!`` vertex orders whose lex facet order is a shelling.

    With ``jobs > 1`` the search is split on the first two positions; a
    ``budget`` then bounds each of those subtrees separately.
    """
    require_pure(c)
    if not pruned:
        return sum(
            1
            for s in permutations(c.vertex_set)
            if is_lex_shellable_under(c, VertexOrder(s))
        )
    if jobs <= 1:
        return _census_subtree(c, (), budget, progress)
    verts = c.vertex_set
    tasks = [(c, (a, b), budget) for a in verts for b in verts if a != b]
    if len(verts) < 2:
        tasks = [(c, (), budget)]
    with ProcessPoolExecutor(jobs) as ex:
        return sum(ex.map(_census_task, tasks))


def iter_lex_shelling_orders(c: Complex) -> Iterator[VertexOrder]:
    """Orders inducing a lex shelling, by brute force over all permutations."""
    require_pure(c)
    for s in permutations(c.vertex_set):
        o = VertexOrder(s)
        if is_lex_shellable_under(c, o):
            yield o


# -- general shelling search -------------------------------------------------


def iter_shellings(
    c: Complex, budget: int | NodeBudget | None = None
) -> Iterator[FacetSequence]:
    """All shellings, depth first, trying facets in lexicographic order."""
    require_pure(c)
    d = c.dim
    facets = c.facets
    masks = c.masks
    m = len(masks)
    chosen: list[int] = []
    prefix: list[int] = []
    used = [False] * m
    counter = NodeBudget.of(budget)

    def rec() -> Iterator[FacetSequence]:
        if len(chosen) == m:
            yield tuple(facets[i] for i in chosen)
            return
        for i in range(m):
            if used[i]:
                continue
            counter.tick()
            if prefix and not step_passes(masks[i], prefix, d):
                continue
            used[i] = True
            chosen.append(i)
            prefix.append(masks[i])
            yield from rec()
            prefix.pop()
            chosen.pop()
            used[i] = False

    return rec()


def find_shelling(c: Complex, budget: int | NodeBudget | None = None) -> ShellingCertificate | None:
    seq = next(iter_shellings(c, budget), None)
    if seq is None:
        return None
    cert = is_shelling(c, seq)
    assert cert, "search produced a sequence the checker rejects"
    return cert
