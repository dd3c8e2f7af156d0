"""Lattices of order ideals with edge colors inherited from vertex colors,
per-color component statistics, element weights, and the structure condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .algebras import ALPHA, BETA, Color, Weight
from .grid import Decomposition, GridPoset, total_order
from .poset import EdgeColoredPoset, VertexColoredPoset

DEFAULT_MAX_IDEALS = 10**7


class TooManyIdeals(RuntimeError):
    pass


@dataclass(frozen=True)
class RankStats:
    """Within-component rank data of one element for one color."""

    rho: int
    length: int

    @property
    def delta(self) -> int:
        return self.length - self.rho

    @property
    def m(self) -> int:
        return 2 * self.rho - self.length


def _grid_of(source) -> GridPoset | VertexColoredPoset:
    """Unwrap builder outputs that carry a .grid attribute."""
    return getattr(source, "grid", source)


@dataclass(frozen=True)
class IdealLattice:
    """All order ideals of a poset, as bitmasks over a fixed vertex order."""

    source: object  # GridPoset, VertexColoredPoset, or a wrapper with .grid
    vertex_order: tuple[int, ...]
    elements: tuple[int, ...]  # bitmasks, sorted by (size, value)

    @cached_property
    def base(self) -> VertexColoredPoset:
        p = _grid_of(self.source)
        return p.base if isinstance(p, GridPoset) else p

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def index_of(self) -> dict[int, int]:
        return {mask: i for i, mask in enumerate(self.elements)}

    @cached_property
    def _bit_of_vertex(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertex_order)}

    def element_vertices(self, i: int) -> frozenset[int]:
        mask = self.elements[i]
        return frozenset(v for v, b in self._bit_of_vertex.items() if (mask >> b) & 1)

    def element_index(self, vertices: Iterable[int]) -> int:
        mask = 0
        for v in vertices:
            mask |= 1 << self._bit_of_vertex[v]
        return self.index_of[mask]

    def size_of(self, i: int) -> int:
        return self.elements[i].bit_count()

    @cached_property
    def covers(self) -> tuple[tuple[int, int, Color], ...]:
        # adding any single vertex to an ideal that stays an ideal is a cover
        color = self.base.color_of
        out = []
        index = self.index_of
        for i, mask in enumerate(self.elements):
            for b, v in enumerate(self.vertex_order):
                if (mask >> b) & 1:
                    continue
                j = index.get(mask | (1 << b))
                if j is not None:
                    out.append((i, j, color[v]))
        return tuple(out)

    @cached_property
    def edge_poset(self) -> EdgeColoredPoset:
        return EdgeColoredPoset(tuple(range(len(self.elements))), frozenset(self.covers))

    @cached_property
    def _color_components(self) -> dict[Color, tuple[tuple[frozenset[int], ...], dict[int, int]]]:
        out = {}
        for color in (ALPHA, BETA):
            comps = self.edge_poset.components([color])
            member = {}
            for k, comp in enumerate(comps):
                for i in comp:
                    member[i] = k
            out[color] = (comps, member)
        return out

    def component(self, i: int, colors: Iterable[Color]) -> EdgeColoredPoset:
        members = self.edge_poset.component_of(i, colors)
        return self.edge_poset.sub(members)

    def rank_stats(self, i: int, color: Color) -> RankStats:
        comps, member = self._color_components[color]
        comp = comps[member[i]]
        sizes = [self.size_of(j) for j in comp]
        lo, hi = min(sizes), max(sizes)
        return RankStats(rho=self.size_of(i) - lo, length=hi - lo)

    @cached_property
    def weights(self) -> tuple[Weight, ...]:
        per_color = {}
        for color in (ALPHA, BETA):
            comps, member = self._color_components[color]
            bounds = []
            for comp in comps:
                sizes = [self.size_of(j) for j in comp]
                bounds.append((min(sizes), max(sizes)))
            per_color[color] = (bounds, member)
        out = []
        for i in range(len(self.elements)):
            row = []
            for color in (ALPHA, BETA):
                bounds, member = per_color[color]
                lo, hi = bounds[member[i]]
                row.append(2 * (self.size_of(i) - lo) - (hi - lo))
            out.append((row[0], row[1]))
        return tuple(out)

    def weight(self, i: int) -> Weight:
        return self.weights[i]

    @cached_property
    def top(self) -> int:
        return len(self.elements) - 1

    @cached_property
    def bottom(self) -> int:
        return 0


def order_ideals(p: GridPoset | VertexColoredPoset,
                 max_ideals: int = DEFAULT_MAX_IDEALS) -> IdealLattice:
    """Enumerate all order ideals of p, refusing beyond `max_ideals`.

    Vertices are taken in the grid total order (chains ascending, descending
    inside a chain) when available, else in a linear extension; masks are
    generated by a depth-first scan that adds a vertex only once all of its
    lower covers are present.
    """
    source = p
    p = _grid_of(p)
    base = p.base if isinstance(p, GridPoset) else p
    if isinstance(p, GridPoset):
        order = total_order(p)
    else:
        order = base.linear_extension
    bit = {v: i for i, v in enumerate(order)}
    n = len(order)
    # visit vertices so every lower cover is decided first
    scan = sorted(range(n), key=lambda b: len(base.below[order[b]]))
    low_masks = []
    for b in scan:
        m = 0
        for u in base.lower_covers[order[b]]:
            m |= 1 << bit[u]
        low_masks.append(m)
    ideals: list[int] = []

    def rec(k: int, mask: int) -> None:
        if k == n:
            ideals.append(mask)
            if len(ideals) > max_ideals:
                raise TooManyIdeals(f"more than {max_ideals} order ideals")
            return
        rec(k + 1, mask)
        if mask & low_masks[k] == low_masks[k]:
            rec(k + 1, mask | (1 << scan[k]))

    import sys
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, n + 100))
    try:
        rec(0, 0)
    finally:
        sys.setrecursionlimit(old)
    ideals.sort(key=lambda m: (m.bit_count(), m))
    return IdealLattice(source, order, tuple(ideals))


def check_structure(lattice: IdealLattice | EdgeColoredPoset,
                    matrix: tuple[Weight, Weight],
                    weights: Sequence[Weight] | None = None) -> bool:
    """True iff every edge of color c shifts the weight by row c of matrix."""
    covers, weights = _covers_and_weights(lattice, weights)
    rows = {ALPHA: matrix[0], BETA: matrix[1]}
    for i, j, c in covers:
        (p1, q1), (p2, q2) = weights[i], weights[j]
        if (p2 - p1, q2 - q1) != rows[c]:
            return False
    return True


def infer_structure_matrix(lattice: IdealLattice | EdgeColoredPoset,
                           weights: Sequence[Weight] | None = None
                           ) -> tuple[Weight, Weight] | None:
    """The unique matrix satisfied by the weight shifts, or None.

    None signals either disagreeing shifts within one color class or a
    color with no edges at all (the matrix would not be unique).
    """
    covers, weights = _covers_and_weights(lattice, weights)
    rows: dict[Color, Weight] = {}
    for i, j, c in covers:
        (p1, q1), (p2, q2) = weights[i], weights[j]
        d = (p2 - p1, q2 - q1)
        if rows.setdefault(c, d) != d:
            return None
    if set(rows) != {ALPHA, BETA}:
        return None
    return (rows[ALPHA], rows[BETA])


def _covers_and_weights(lattice, weights):
    if isinstance(lattice, IdealLattice):
        return lattice.covers, lattice.weights if weights is None else weights
    if weights is None:
        raise ValueError("explicit weights required for a bare edge-colored poset")
    return tuple(lattice.covers), weights


def _piece_lattice(piece: GridPoset) -> IdealLattice:
    if piece not in _PIECE_CACHE:
        _PIECE_CACHE[piece] = order_ideals(piece)
    return _PIECE_CACHE[piece]


_PIECE_CACHE: dict[GridPoset, IdealLattice] = {}


def weight_via_decomposition(lattice: IdealLattice, i: int,
                             dec: Decomposition) -> Weight:
    """Sum of piece-lattice weights of the intersections with each piece."""
    s = lattice.element_vertices(i)
    total = (0, 0)
    for piece in dec.pieces:
        sub = _piece_lattice(piece)
        j = sub.element_index(s & set(piece.base.ids))
        w = sub.weight(j)
        total = (total[0] + w[0], total[1] + w[1])
    return total


def piece_rank_stats(lattice: IdealLattice, i: int, dec: Decomposition,
                     color: Color) -> tuple[int, int]:
    """(sum of piece rho, sum of piece lengths) for one color."""
    s = lattice.element_vertices(i)
    rho = length = 0
    for piece in dec.pieces:
        sub = _piece_lattice(piece)
        j = sub.element_index(s & set(piece.base.ids))
        st = sub.rank_stats(j, color)
        rho += st.rho
        length += st.length
    return rho, length


def join_irreducible_poset(lattice: IdealLattice | EdgeColoredPoset) -> VertexColoredPoset:
    """Poset of join-irreducibles, colored by the single lower-cover color.

    A join-irreducible of a distributive lattice covers exactly one element;
    the induced subposet of join-irreducibles recovers the poset whose order
    ideals the lattice enumerates.
    """
    ep = getattr(lattice, "edge_poset", lattice)
    lower = ep.lower_covers
    irr = [v for v in ep.elements if len(lower[v]) == 1]
    colors = {v: lower[v][0][1] for v in irr}
    # order relation inside the lattice
    up = {v: [w for w, _ in ep.upper_covers[v]] for v in ep.elements}
    pos = {v: k for k, v in enumerate(ep.elements)}
    reach = {v: 0 for v in ep.elements}
    from .poset import _topological_order

    order = _topological_order(ep.elements, up)
    for v in reversed(order):
        m = 0
        for w in up[v]:
            m |= (1 << pos[w]) | reach[w]
        reach[v] = m

    def leq(u, v):
        return u == v or (reach[u] >> pos[v]) & 1

    covers = set()
    for u in irr:
        uppers = [v for v in irr if v != u and leq(u, v)]
        for v in uppers:
            if not any(w != v and leq(w, v) for w in uppers):
                covers.add((u, v))
    return VertexColoredPoset.build(colors, covers)
