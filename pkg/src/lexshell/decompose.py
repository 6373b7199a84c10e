"""Vertex decomposability, shedding orders and shelling completion."""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

from .core import Complex, Face, deletion, face_mask, link, require_pure
from .errors import Duplicate, InvalidCertificate, NotAShelling, UnknownVertex
from .shelling import FacetSequence, NodeBudget, is_shelling, iter_shellings, step_passes


class LeafKind(enum.Enum):
    SIMPLEX = "simplex"
    EMPTY_FACE_ONLY = "empty-face-only"


@dataclass(frozen=True)
class Leaf:
    kind: LeafKind


@dataclass(frozen=True)
class Node:
    shed: int
    link_cert: SheddingCertificate
    del_cert: SheddingCertificate


SheddingCertificate = Leaf | Node


def shedding_sequence(cert: SheddingCertificate) -> tuple[int, ...]:
    """The chain of shed vertices along deletions."""
    out = []
    while isinstance(cert, Node):
        out.append(cert.shed)
        cert = cert.del_cert
    return tuple(out)


def _leaf_for(c: Complex) -> Leaf | None:
    if c.facets == ((),):
        return Leaf(LeafKind.EMPTY_FACE_ONLY)
    if len(c.facets) == 1:
        return Leaf(LeafKind.SIMPLEX)
    return None


def _sheds(c: Complex, v: int) -> bool:
    bit = 1 << v
    own = set(c.masks)
    return all(m in own for m in deletion(c, v).masks) if c.vertex_mask & bit else False


def is_shedding_vertex(c: Complex, v: int) -> bool:
    """Every facet of the deletion of ``v`` is a facet of ``c``."""
    require_pure(c)
    if v < 0 or not (c.vertex_mask >> v) & 1:
        raise UnknownVertex(f"vertex {v} is not in the complex")
    return _sheds(c, v)


def _decompose(c: Complex, memo: dict) -> SheddingCertificate | None:
    key = c.facets
    if key in memo:
        return memo[key]
    leaf = _leaf_for(c)
    if leaf is not None:
        memo[key] = leaf
        return leaf
    memo[key] = None
    result = None
    for v in c.vertex_set:
        if not _sheds(c, v):
            continue
        lk = _decompose(link(c, v), memo)
        if lk is None:
            continue
        dl = _decompose(deletion(c, v), memo)
        if dl is None:
            continue
        result = Node(v, lk, dl)
        break
    memo[key] = result
    return result


def is_vertex_decomposable(c: Complex) -> SheddingCertificate | None:
    """A certificate, trying shedding vertices in increasing label order."""
    require_pure(c)
    return _decompose(c, {})


def shedding_order_certificate(c: Complex, vs: Sequence[int]) -> SheddingCertificate | None:
    """Certificate along the given deletion chain, or None if it does not work.

    Each vertex must shed in the current complex, its link there must be
    vertex decomposable, and what remains at the end must be a simplex or {∅}.
    """
    require_pure(c)
    if len(set(vs)) != len(vs):
        raise Duplicate(f"shedding order {tuple(vs)} repeats a vertex")
    for v in vs:
        if v < 0 or not (c.vertex_mask >> v) & 1:
            raise UnknownVertex(f"vertex {v} is not in the complex")
    memo: dict = {}
    stages = []
    cur = c
    for v in vs:
        if not (cur.vertex_mask >> v) & 1 or not _sheds(cur, v):
            return None
        lk = _decompose(link(cur, v), memo)
        if lk is None:
            return None
        stages.append((v, lk))
        cur = deletion(cur, v)
    tail = _leaf_for(cur)
    if tail is None:
        return None
    cert: SheddingCertificate = tail
    for v, lk in reversed(stages):
        cert = Node(v, lk, cert)
    return cert


def verify_shedding_order(c: Complex, vs: Sequence[int]) -> bool:
    return shedding_order_certificate(c, vs) is not None


def certificate_to_shelling(c: Complex, cert: SheddingCertificate) -> FacetSequence:
    """Shelling of the deletion, then the shed vertex joined to a shelling of its link."""
    if isinstance(cert, Leaf):
        if _leaf_for(c) != cert:
            raise InvalidCertificate(f"{cert.kind.value} leaf does not match {c}")
        return c.facets
    v = cert.shed
    if not (c.vertex_mask >> v) & 1 or not _sheds(c, v):
        raise InvalidCertificate(f"{v} is not a shedding vertex of {c}")
    first = certificate_to_shelling(deletion(c, v), cert.del_cert)
    rest = certificate_to_shelling(link(c, v), cert.link_cert)
    return first + tuple(tuple(sorted((*g, v))) for g in rest)


# -- shelling completion -----------------------------------------------------


def completion_universe(c: Complex, n: int) -> tuple[int, ...]:
    """The vertex set, padded with labels above the maximum up to size ``n``."""
    verts = list(c.vertex_set)
    if n < len(verts):
        raise ValueError(f"n={n} is smaller than the {len(verts)} vertices of the complex")
    top = max(verts) if verts else 0
    return tuple(verts + list(range(top + 1, top + 1 + n - len(verts))))


def complete_shelling(
    c: Complex,
    seq: Iterable[Iterable[int]],
    n: int,
    budget: int | NodeBudget | None = None,
    universe: Sequence[int] | None = None,
) -> FacetSequence | None:
    """Extend a shelling of ``c`` to a shelling of the full d-skeleton on ``n`` vertices.

    Remaining skeleton facets are tried in lexicographic order at each step.
    """
    require_pure(c)
    cert = is_shelling(c, seq)
    if not cert:
        raise NotAShelling(f"sequence fails at step {cert.step}")
    d = c.dim
    uni = tuple(universe) if universe is not None else completion_universe(c, n)
    if not set(c.vertex_set) <= set(uni):
        raise ValueError("universe must contain every vertex of the complex")
    have = set(c.facets)
    rest = [f for f in combinations(sorted(uni), d + 1) if f not in have]
    rest_masks = [face_mask(f) for f in rest]
    prefix = [face_mask(f) for f in cert.sequence]
    used = [False] * len(rest)
    out: list[int] = []
    counter = NodeBudget.of(budget)

    def rec() -> bool:
        if len(out) == len(rest):
            return True
        for i, f in enumerate(rest_masks):
            if used[i]:
                continue
            counter.tick()
            if not step_passes(f, prefix, d):
                continue
            used[i] = True
            out.append(i)
            prefix.append(f)
            if rec():
                return True
            prefix.pop()
            out.pop()
            used[i] = False
        return False

    if not rec():
        return None
    return cert.sequence + tuple(rest[i] for i in out)


def is_shelling_completable(
    c: Complex, n: int, budget: int | NodeBudget | None = None
) -> tuple[FacetSequence, FacetSequence] | None:
    """Some shelling of ``c`` together with a completion of it, or None.

    ``budget`` bounds the nodes of both searches together; running out
    raises ``Inconclusive``.
    """
    require_pure(c)
    counter = NodeBudget.of(budget)
    for s in iter_shellings(c, counter):
        full = complete_shelling(c, s, n, counter)
        if full is not None:
            return s, full
    return None
