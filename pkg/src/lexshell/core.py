"""Simplicial complexes stored by their facets.

A face is a strictly increasing tuple of non-negative integer labels.  Set
operations run on integer bitmasks (bit ``v`` set for vertex ``v``); Python
integers are unbounded, so there is no fixed vertex universe, but masks stay
machine-word sized only while labels are below 64.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import (
    DimensionOutOfRange,
    DomainMismatch,
    EmptyFacet,
    EmptyInput,
    InvalidDimensions,
    NotABijection,
    NotPure,
    UnknownVertex,
)

Face = tuple[int, ...]


def face_mask(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


def mask_face(mask: int) -> Face:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def maximal_masks(masks: Iterable[int]) -> list[int]:
    """Drop duplicates and every mask strictly contained in another."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class Complex:
    """A simplicial complex given by its facets, in canonical sorted order.

    Equality is facet-set equality; labels matter.  The complex ``{∅}`` is
    represented by the single empty facet ``()``.
    """

    facets: tuple[Face, ...]

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> Complex:
        kept = maximal_masks(masks)
        if not kept:
            raise EmptyInput("a complex needs at least one face")
        return cls(tuple(sorted(mask_face(m) for m in kept)))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(face_mask(f) for f in self.facets)

    @cached_property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.masks:
            m |= f
        return m

    @property
    def vertex_set(self) -> Face:
        return mask_face(self.vertex_mask)

    @property
    def n(self) -> int:
        return self.vertex_mask.bit_count()

    @property
    def m(self) -> int:
        return len(self.facets)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    def contains_face(self, face: Iterable[int]) -> bool:
        fm = face_mask(face)
        return any(fm & m == fm for m in self.masks)

    def __contains__(self, face: object) -> bool:
        return self.contains_face(face)  # type: ignore[arg-type]

    def __len__(self) -> int:
        return len(self.facets)

    def __str__(self) -> str:
        return "<" + ", ".join(format_face(f) for f in self.facets) + ">"


def format_face(face: Face) -> str:
    if not face:
        return "∅"
    if all(v < 10 for v in face):
        return "".join(map(str, face))
    return "{" + ",".join(map(str, face)) + "}"


def build_complex(facet_lists: Iterable[Iterable[int]]) -> Complex:
    """Build a complex from vertex lists, dropping duplicates and non-maximal faces."""
    masks = []
    for lst in facet_lists:
        vs = list(lst)
        if not vs:
            raise EmptyFacet("facet lists must be nonempty")
        for v in vs:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"vertex ids must be non-negative integers, got {v!r}")
        masks.append(face_mask(vs))
    if not masks:
        raise EmptyInput("no facets given")
    return Complex.from_masks(masks)


def dimension(c: Complex) -> int:
    return c.dim


def is_pure(c: Complex) -> bool:
    return c.pure


def require_pure(c: Complex) -> None:
    if not c.pure:
        raise NotPure(f"complex with facet sizes {sorted({len(f) for f in c.facets})} is not pure")


def faces(c: Complex, k: int) -> set[Face]:
    """All ``k``-dimensional faces; ``k = -1`` gives ``{()}``."""
    if not -1 <= k <= c.dim:
        raise DimensionOutOfRange(f"k={k} outside [-1, {c.dim}]")
    out: set[Face] = set()
    for f in c.facets:
        if len(f) > k:
            out.update(combinations(f, k + 1))
    return out


def f_vector(c: Complex) -> tuple[int, ...]:
    return tuple(len(faces(c, k)) for k in range(-1, c.dim + 1))


def _check_vertex(c: Complex, v: int) -> int:
    if v < 0 or not (c.vertex_mask >> v) & 1:
        raise UnknownVertex(f"vertex {v} is not in the complex")
    return 1 << v


def link(c: Complex, v: int) -> Complex:
    bit = _check_vertex(c, v)
    return Complex.from_masks(m ^ bit for m in c.masks if m & bit)


def deletion(c: Complex, v: int) -> Complex:
    bit = _check_vertex(c, v)
    return Complex.from_masks(m & ~bit for m in c.masks)


@dataclass(frozen=True)
class DualGraph:
    """Facet adjacency: nodes index ``Complex.facets``; edges are pairs ``i < j``."""

    nodes: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def neighbors(self, i: int) -> list[int]:
        return sorted({b if a == i else a for a, b in self.edges if i in (a, b)})


def dual_graph(c: Complex) -> DualGraph:
    require_pure(c)
    d = c.dim
    ms = c.masks
    edges = frozenset(
        (i, j)
        for i in range(len(ms))
        for j in range(i + 1, len(ms))
        if (ms[i] & ms[j]).bit_count() == d
    )
    return DualGraph(tuple(range(len(ms))), edges)


def masks_strongly_connected(masks: list[int] | tuple[int, ...], d: int) -> bool:
    """Dual-graph connectivity for equal-size facet masks (graph search on masks)."""
    if len(masks) <= 1:
        return True
    seen = 1
    stack = [0]
    full = (1 << len(masks)) - 1
    while stack:
        a = masks[stack.pop()]
        for j, b in enumerate(masks):
            if not (seen >> j) & 1 and (a & b).bit_count() == d:
                seen |= 1 << j
                stack.append(j)
        if seen == full:
            return True
    return False


def is_strongly_connected(c: Complex) -> bool:
    require_pure(c)
    return masks_strongly_connected(c.masks, c.dim)


def relabel(c: Complex, mapping: Mapping[int, int]) -> Complex:
    """Replace every vertex ``v`` by ``mapping[v]``.

    ``mapping`` may be a plain dict or a ``VertexOrder`` (vertex -> position).
    """
    if hasattr(mapping, "mapping"):
        mapping = mapping.mapping  # type: ignore[union-attr]
    if set(mapping) != set(c.vertex_set):
        raise DomainMismatch("mapping domain must equal the vertex set")
    if len(set(mapping.values())) != len(mapping):
        raise NotABijection("mapping sends two vertices to the same label")
    return Complex(tuple(sorted(tuple(sorted(mapping[v] for v in f)) for f in c.facets)))


def complete_skeleton(n: int, d: int) -> Complex:
    """All ``(d+1)``-subsets of ``{1, ..., n}``."""
    if not 0 <= d < n:
        raise InvalidDimensions(f"need 0 <= d < n, got n={n}, d={d}")
    return Complex(tuple(combinations(range(1, n + 1), d + 1)))


def parse_complex(text: str) -> Complex:
    """Read the line format: one facet per line, ``#`` starts a comment line."""
    from .errors import ParseError

    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        row = []
        for tok in s.split():
            if not tok.isdigit():
                raise ParseError("expected a non-negative integer", lineno, tok)
            row.append(int(tok))
        rows.append(row)
    if not rows:
        raise EmptyInput("no facets in input")
    return build_complex(rows)


def format_complex(c: Complex, header: str | None = None) -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines += [" ".join(map(str, f)) for f in c.facets]
    return "\n".join(lines) + "\n"
