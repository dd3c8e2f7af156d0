"""Colored posets given by Hasse covers, and their structural operations.

Two flavours: vertex-colored posets (the P side, whose order ideals get
enumerated) and edge-colored posets (the L side, lattices of ideals).
Both are immutable after construction; construction validates acyclicity
and irredundancy of the cover relation, rejecting transitive edges rather
than repairing them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .algebras import Color


class PosetError(ValueError):
    pass


def _check_covers(ids: tuple[int, ...], pairs: Iterable[tuple[int, int]]) -> None:
    """Reject unknown ids, cycles and transitive (redundant) covers."""
    idset = set(ids)
    if len(idset) != len(ids):
        raise PosetError("duplicate vertex ids")
    up: dict[int, list[int]] = {v: [] for v in ids}
    pairs = list(pairs)
    for u, v in pairs:
        if u not in idset or v not in idset:
            raise PosetError(f"cover ({u}, {v}) uses an unknown id")
        if u == v:
            raise PosetError(f"cover ({u}, {u}) is a loop")
        up[u].append(v)
    order = _topological_order(ids, up)
    if order is None:
        raise PosetError("cover relation contains a cycle")
    # reach[v] = bitmask of vertices strictly above v
    pos = {v: i for i, v in enumerate(order)}
    reach = [0] * len(order)
    for v in reversed(order):
        m = 0
        for w in up[v]:
            m |= (1 << pos[w]) | reach[pos[w]]
        reach[pos[v]] = m
    for u, v in pairs:
        two_step = 0
        for w in up[u]:
            two_step |= reach[pos[w]]
        if (two_step >> pos[v]) & 1:
            raise PosetError(f"cover ({u}, {v}) is transitive")


def _topological_order(ids: tuple[int, ...], up: Mapping[int, list[int]]) -> list[int] | None:
    indeg = {v: 0 for v in ids}
    for v in ids:
        for w in up[v]:
            indeg[w] += 1
    stack = sorted((v for v in ids if indeg[v] == 0), reverse=True)
    order = []
    while stack:
        v = stack.pop()
        order.append(v)
        for w in sorted(up[v], reverse=True):
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    if len(order) != len(ids):
        return None
    return order


@dataclass(frozen=True)
class VertexColoredPoset:
    """Finite poset with {alpha, beta}-colored vertices, given by covers."""

    vertices: tuple[tuple[int, Color], ...]
    covers: frozenset[tuple[int, int]]

    def __post_init__(self):
        _check_covers(self.ids, self.covers)

    @staticmethod
    def build(colors: Mapping[int, Color], covers: Iterable[tuple[int, int]]) -> "VertexColoredPoset":
        verts = tuple(sorted(colors.items()))
        return VertexColoredPoset(verts, frozenset((u, v) for u, v in covers))

    @cached_property
    def ids(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.vertices)

    @cached_property
    def color_of(self) -> dict[int, Color]:
        return dict(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def upper_covers(self) -> dict[int, tuple[int, ...]]:
        up: dict[int, list[int]] = {v: [] for v in self.ids}
        for u, v in self.covers:
            up[u].append(v)
        return {v: tuple(sorted(ws)) for v, ws in up.items()}

    @cached_property
    def lower_covers(self) -> dict[int, tuple[int, ...]]:
        down: dict[int, list[int]] = {v: [] for v in self.ids}
        for u, v in self.covers:
            down[v].append(u)
        return {v: tuple(sorted(ws)) for v, ws in down.items()}

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        return tuple(_topological_order(self.ids, {v: list(ws) for v, ws in self.upper_covers.items()}))

    @cached_property
    def below(self) -> dict[int, frozenset[int]]:
        """Strict down-sets: below[v] = all u with u < v."""
        out: dict[int, set[int]] = {v: set() for v in self.ids}
        for v in self.linear_extension:
            for u in self.lower_covers[v]:
                out[v].add(u)
                out[v] |= out[u]
        return {v: frozenset(s) for v, s in out.items()}

    def leq(self, u: int, v: int) -> bool:
        return u == v or u in self.below[v]

    @cached_property
    def maximal_elements(self) -> tuple[int, ...]:
        return tuple(v for v in self.ids if not self.upper_covers[v])

    @cached_property
    def minimal_elements(self) -> tuple[int, ...]:
        return tuple(v for v in self.ids if not self.lower_covers[v])

    @cached_property
    def components(self) -> tuple[frozenset[int], ...]:
        return _components(self.ids, self.covers)

    def dual(self) -> "VertexColoredPoset":
        return VertexColoredPoset(self.vertices, frozenset((v, u) for u, v in self.covers))

    def recolor(self, sigma: Mapping[Color, Color]) -> "VertexColoredPoset":
        verts = tuple((v, sigma[c]) for v, c in self.vertices)
        return VertexColoredPoset(verts, self.covers)

    def relabel(self, mapping: Mapping[int, int]) -> "VertexColoredPoset":
        verts = tuple(sorted((mapping[v], c) for v, c in self.vertices))
        return VertexColoredPoset(verts, frozenset((mapping[u], mapping[v]) for u, v in self.covers))

    def restrict(self, keep: Iterable[int]) -> "VertexColoredPoset":
        """Subposet on `keep` whose covers are the covers of self (grid-subposet sense)."""
        keep = set(keep)
        verts = tuple((v, c) for v, c in self.vertices if v in keep)
        covs = frozenset((u, v) for u, v in self.covers if u in keep and v in keep)
        return VertexColoredPoset(verts, covs)

    def canonical(self) -> "VertexColoredPoset":
        """Relabel ids 0..n-1 along a deterministic linear extension."""
        ext = self.linear_extension
        return self.relabel({v: i for i, v in enumerate(ext)})


@dataclass(frozen=True)
class EdgeColoredPoset:
    """Finite poset with {alpha, beta}-colored Hasse edges."""

    elements: tuple[int, ...]
    covers: frozenset[tuple[int, int, Color]]

    def __post_init__(self):
        pairs = [(u, v) for u, v, _ in self.covers]
        if len(set(pairs)) != len(pairs):
            raise PosetError("two colors assigned to one cover")
        _check_covers(self.elements, pairs)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def upper_covers(self) -> dict[int, tuple[tuple[int, Color], ...]]:
        up: dict[int, list[tuple[int, Color]]] = {v: [] for v in self.elements}
        for u, v, c in self.covers:
            up[u].append((v, c))
        return {v: tuple(sorted(ws, key=lambda t: (t[0], t[1].value))) for v, ws in up.items()}

    @cached_property
    def lower_covers(self) -> dict[int, tuple[tuple[int, Color], ...]]:
        down: dict[int, list[tuple[int, Color]]] = {v: [] for v in self.elements}
        for u, v, c in self.covers:
            down[v].append((u, c))
        return {v: tuple(sorted(ws, key=lambda t: (t[0], t[1].value))) for v, ws in down.items()}

    def dual(self) -> "EdgeColoredPoset":
        return EdgeColoredPoset(self.elements, frozenset((v, u, c) for u, v, c in self.covers))

    def recolor(self, sigma: Mapping[Color, Color]) -> "EdgeColoredPoset":
        return EdgeColoredPoset(self.elements, frozenset((u, v, sigma[c]) for u, v, c in self.covers))

    def relabel(self, mapping: Mapping[int, int]) -> "EdgeColoredPoset":
        return EdgeColoredPoset(
            tuple(sorted(mapping[v] for v in self.elements)),
            frozenset((mapping[u], mapping[v], c) for u, v, c in self.covers),
        )

    def canonical(self) -> "EdgeColoredPoset":
        up = {v: [w for w, _ in self.upper_covers[v]] for v in self.elements}
        ext = _topological_order(self.elements, up)
        return self.relabel({v: i for i, v in enumerate(ext)})

    def edges_of_color(self, color: Color) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u, v, c in self.covers if c is color)

    def component_of(self, element: int, colors: Iterable[Color]) -> frozenset[int]:
        """Connected component of `element` in the subgraph of the given colors."""
        colors = set(colors)
        adj: dict[int, list[int]] = {v: [] for v in self.elements}
        for u, v, c in self.covers:
            if c in colors:
                adj[u].append(v)
                adj[v].append(u)
        seen = {element}
        stack = [element]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen)

    def components(self, colors: Iterable[Color]) -> tuple[frozenset[int], ...]:
        colors = set(colors)
        pairs = [(u, v) for u, v, c in self.covers if c in colors]
        return _components(self.elements, pairs)

    def sub(self, keep: Iterable[int]) -> "EdgeColoredPoset":
        keep = set(keep)
        return EdgeColoredPoset(
            tuple(v for v in self.elements if v in keep),
            frozenset((u, v, c) for u, v, c in self.covers if u in keep and v in keep),
        )


def _components(ids: Iterable[int], pairs: Iterable[tuple[int, int]]) -> tuple[frozenset[int], ...]:
    parent = {v: v for v in ids}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, set[int]] = {}
    for v in parent:
        groups.setdefault(find(v), set()).add(v)
    return tuple(sorted((frozenset(g) for g in groups.values()), key=lambda g: min(g)))


def dual(p):
    return p.dual()


def recolor(p, sigma: Mapping[Color, Color]):
    return p.recolor(sigma)


def disjoint_sum(p, q):
    """Disjoint sum; q's ids are shifted above p's to force disjointness."""
    if isinstance(p, VertexColoredPoset) != isinstance(q, VertexColoredPoset):
        raise PosetError("disjoint_sum needs two posets of the same kind")
    shift = (max(p.ids) + 1 if len(p) else 0) if isinstance(p, VertexColoredPoset) else (
        max(p.elements) + 1 if len(p) else 0)
    if isinstance(p, VertexColoredPoset):
        q2 = q.relabel({v: v + shift for v in q.ids})
        return VertexColoredPoset(p.vertices + q2.vertices, p.covers | q2.covers)
    q2 = q.relabel({v: v + shift for v in q.elements})
    return EdgeColoredPoset(p.elements + q2.elements, p.covers | q2.covers)


def product(p: EdgeColoredPoset, q: EdgeColoredPoset) -> EdgeColoredPoset:
    """Componentwise product: a cover moves one coordinate along one of its covers."""
    pairs = list(itertools.product(p.elements, q.elements))
    index = {pair: i for i, pair in enumerate(pairs)}
    covers = set()
    for u, v, c in p.covers:
        for w in q.elements:
            covers.add((index[(u, w)], index[(v, w)], c))
    for u, v, c in q.covers:
        for w in p.elements:
            covers.add((index[(w, u)], index[(w, v)], c))
    return EdgeColoredPoset(tuple(range(len(pairs))), frozenset(covers))


@dataclass(frozen=True)
class RankFunction:
    """Surjective rank map onto {0..length}; every cover raises rank by one."""

    ranks: tuple[tuple[int, int], ...]  # (element, rank), sorted by element
    length: int

    @cached_property
    def of(self) -> dict[int, int]:
        return dict(self.ranks)

    def rank_sizes(self) -> tuple[int, ...]:
        sizes = [0] * (self.length + 1)
        for _, r in self.ranks:
            sizes[r] += 1
        return tuple(sizes)


def find_rank_function(p) -> RankFunction | None:
    """Rank function of a (possibly disconnected) poset, or None.

    Ranks are propagated along covers inside each connected component and
    each component is based at zero; the result must be surjective onto
    {0..l} and raise by exactly one along every cover.
    """
    if isinstance(p, VertexColoredPoset):
        ids, pairs = p.ids, [(u, v) for u, v in p.covers]
    else:
        ids, pairs = p.elements, [(u, v) for u, v, _ in p.covers]
    if not ids:
        return None
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in ids}
    for u, v in pairs:
        adj[u].append((v, 1))
        adj[v].append((u, -1))
    rank: dict[int, int] = {}
    for root in ids:
        if root in rank:
            continue
        comp = [root]
        rank[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w, d in adj[v]:
                r = rank[v] + d
                if w in rank:
                    if rank[w] != r:
                        return None
                else:
                    rank[w] = r
                    comp.append(w)
                    stack.append(w)
        base = min(rank[v] for v in comp)
        for v in comp:
            rank[v] -= base
    length = max(rank.values())
    present = set(rank.values())
    if present != set(range(length + 1)):
        return None
    return RankFunction(tuple(sorted(rank.items())), length)


def diamond_coloring_check(p: EdgeColoredPoset) -> bool:
    """Every diamond must have equal colors on its opposite sides."""
    up = p.upper_covers
    for s in p.elements:
        outs = up[s]
        for (u, cu), (v, cv) in itertools.combinations(outs, 2):
            tops_u = dict(up[u])
            for t, ct in up[v]:
                if t in tops_u:
                    # s->u colored cu, s->v colored cv, u->t, v->t
                    if not (cu == ct and cv == tops_u[t]):
                        return False
    return True


# ---------------------------------------------------------------------------
# Isomorphism search: backtracking with degree/color partition refinement.
# All instances in this project are small (well under 1000 elements).

def _vposet_signature(p: VertexColoredPoset, v: int, depth_map) -> tuple:
    return (
        p.color_of[v].value,
        len(p.lower_covers[v]),
        len(p.upper_covers[v]),
        depth_map[v],
    )


def _depths(ids, lower, order) -> dict[int, int]:
    d = {}
    for v in order:
        lows = lower[v]
        d[v] = 0 if not lows else 1 + max(d[u] for u in lows)
    return d


def vertex_color_isomorphism(p: VertexColoredPoset, q: VertexColoredPoset) -> dict[int, int] | None:
    """An isomorphism p -> q respecting covers and vertex colors, or None."""
    if len(p) != len(q) or len(p.covers) != len(q.covers):
        return None
    pd = _depths(p.ids, {v: p.lower_covers[v] for v in p.ids}, p.linear_extension)
    qd = _depths(q.ids, {v: q.lower_covers[v] for v in q.ids}, q.linear_extension)
    psig = {v: _vposet_signature(p, v, pd) for v in p.ids}
    qsig = {v: _vposet_signature(q, v, qd) for v in q.ids}
    if sorted(psig.values()) != sorted(qsig.values()):
        return None
    porder = p.linear_extension
    candidates = {v: [w for w in q.ids if qsig[w] == psig[v]] for v in p.ids}
    qcovers = {(u, v) for u, v in q.covers}

    def extend(mapping, used, v, w) -> bool:
        return w not in used and all(
            (mapping[u], w) in qcovers for u in p.lower_covers[v])

    return _backtrack_iso(porder, candidates, extend)


def edge_color_isomorphism(p: EdgeColoredPoset, q: EdgeColoredPoset) -> dict[int, int] | None:
    """An isomorphism p -> q respecting covers and edge colors, or None."""
    if len(p) != len(q) or len(p.covers) != len(q.covers):
        return None

    def esig(poset, v):
        lows = tuple(sorted(c.value for _, c in poset.lower_covers[v]))
        ups = tuple(sorted(c.value for _, c in poset.upper_covers[v]))
        return (lows, ups)

    up_p = {v: [w for w, _ in p.upper_covers[v]] for v in p.elements}
    up_q = {v: [w for w, _ in q.upper_covers[v]] for v in q.elements}
    porder = _topological_order(p.elements, up_p)
    _topological_order(q.elements, up_q)
    pdep = _depths(p.elements, {v: [w for w, _ in p.lower_covers[v]] for v in p.elements}, porder)
    qorder = _topological_order(q.elements, up_q)
    qdep = _depths(q.elements, {v: [w for w, _ in q.lower_covers[v]] for v in q.elements}, qorder)
    psig = {v: (pdep[v],) + esig(p, v) for v in p.elements}
    qsig = {v: (qdep[v],) + esig(q, v) for v in q.elements}
    if sorted(psig.values()) != sorted(qsig.values()):
        return None
    candidates = {v: [w for w in q.elements if qsig[w] == psig[v]] for v in p.elements}
    qcovers = {(u, v): c for u, v, c in q.covers}

    def extend(mapping, used, v, w) -> bool:
        return w not in used and all(
            qcovers.get((mapping[u], w)) is c for u, c in p.lower_covers[v])

    return _backtrack_iso(porder, candidates, extend)


def _backtrack_iso(porder, candidates, extend) -> dict[int, int] | None:
    """Iterative depth-first search for a full consistent assignment."""
    n = len(porder)
    if n == 0:
        return {}
    mapping: dict[int, int] = {}
    used: set[int] = set()
    cursors = [0] * n
    i = 0
    while True:
        v = porder[i]
        cands = candidates[v]
        advanced = False
        while cursors[i] < len(cands):
            w = cands[cursors[i]]
            cursors[i] += 1
            if extend(mapping, used, v, w):
                mapping[v] = w
                used.add(w)
                advanced = True
                break
        if advanced:
            i += 1
            if i == n:
                return mapping
            cursors[i] = 0
        else:
            i -= 1
            if i < 0:
                return None
            prev = porder[i]
            used.remove(mapping[prev])
            del mapping[prev]


def are_vertex_color_isomorphic(p: VertexColoredPoset, q: VertexColoredPoset) -> bool:
    return vertex_color_isomorphism(p, q) is not None


def are_edge_color_isomorphic(p: EdgeColoredPoset, q: EdgeColoredPoset) -> bool:
    return edge_color_isomorphism(p, q) is not None
