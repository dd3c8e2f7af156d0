"""Grid posets: chain functions, two-color axioms, max property, and the
decomposition of a grid poset into an order-ideal prefix and its complement.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .algebras import Algebra, Color, sigma0
from .poset import PosetError, VertexColoredPoset, vertex_color_isomorphism


@dataclass(frozen=True)
class GridPoset:
    """A vertex-colored poset with a chain function into [m].

    Chain indices are stored exactly as given, so that violations in the
    input (jumped chains and the like) stay visible to validate_grid;
    normalized() re-indexes onto a surjective 1..m', which is unique for
    a connected grid poset.
    """

    base: VertexColoredPoset
    chains: tuple[tuple[int, int], ...]  # (vertex id, chain index), sorted by id

    def __post_init__(self):
        if sorted(v for v, _ in self.chains) != sorted(self.base.ids):
            raise PosetError("chain function must cover exactly the vertex set")

    def normalized(self) -> "GridPoset":
        used = sorted({c for _, c in self.chains})
        renum = {c: i + 1 for i, c in enumerate(used)}
        return GridPoset(self.base, tuple((v, renum[c]) for v, c in self.chains))

    @staticmethod
    def build(colors: Mapping[int, Color], covers: Iterable[tuple[int, int]],
              chain: Mapping[int, int]) -> "GridPoset":
        base = VertexColoredPoset.build(colors, covers)
        return GridPoset(base, tuple(sorted(chain.items())))

    def __len__(self) -> int:
        return len(self.base)

    @cached_property
    def chain_of(self) -> dict[int, int]:
        return dict(self.chains)

    @cached_property
    def num_chains(self) -> int:
        return max((c for _, c in self.chains), default=0)

    def chain_members(self, c: int) -> tuple[int, ...]:
        """Elements of one chain, bottom to top."""
        members = [v for v, cc in self.chains if cc == c]
        below = self.base.below
        return tuple(sorted(members, key=lambda v: len(below[v] & set(members))))

    def dual(self) -> "GridPoset":
        m = self.num_chains
        return GridPoset(self.base.dual(), tuple((v, m + 1 - c) for v, c in self.chains))

    def recolor(self, sigma: Mapping[Color, Color]) -> "GridPoset":
        return GridPoset(self.base.recolor(sigma), self.chains)

    def relabel(self, mapping: Mapping[int, int]) -> "GridPoset":
        return GridPoset(self.base.relabel(mapping),
                         tuple(sorted((mapping[v], c) for v, c in self.chains)))

    def restrict(self, keep: Iterable[int]) -> "GridPoset":
        keep = set(keep)
        return GridPoset(self.base.restrict(keep),
                         tuple((v, c) for v, c in self.chains if v in keep))


def validate_grid(p: GridPoset) -> list[str]:
    """Check the chain axioms and the two-color axioms; violations are data."""
    violations: list[str] = []
    base, chain = p.base, p.chain_of
    by_chain: dict[int, list[int]] = {}
    for v, c in p.chains:
        by_chain.setdefault(c, []).append(v)
    for c, members in sorted(by_chain.items()):
        for u, v in itertools.combinations(members, 2):
            if not (base.leq(u, v) or base.leq(v, u)):
                violations.append(f"chain {c} is not a chain: {u} and {v} incomparable")
    for u, v in sorted(base.covers):
        if chain[u] not in (chain[v], chain[v] + 1):
            violations.append(
                f"cover ({u}, {v}) jumps chains {chain[u]} -> {chain[v]}")
    color = base.color_of
    for c, members in sorted(by_chain.items()):
        cols = {color[v] for v in members}
        if len(cols) > 1:
            violations.append(f"chain {c} mixes colors")
    for comp in base.components:
        for u in sorted(comp):
            for v in sorted(comp):
                if chain[u] == chain[v] + 1 and color[u] is color[v]:
                    violations.append(
                        f"adjacent chains {chain[v]}, {chain[u]} share color "
                        f"in one component ({v}, {u})")
    return violations


def total_order(p: GridPoset) -> tuple[int, ...]:
    """Vertices by ascending chain index, descending poset order within a chain."""
    out: list[int] = []
    for c in sorted({c for _, c in p.chains}):
        out.extend(reversed(p.chain_members(c)))
    return tuple(out)


def _component_intervals(p: GridPoset) -> list[tuple[frozenset[int], int, int]]:
    """(component, lowest chain, highest chain) per connected component."""
    chain = p.chain_of
    out = []
    for comp in p.base.components:
        cs = [chain[v] for v in comp]
        out.append((comp, min(cs), max(cs)))
    return out


def has_max_property(p: GridPoset) -> bool:
    """All maximal elements on the first two chains, with pairwise distinct
    colors, for some valid re-indexing of the chain function.

    Components occupy disjoint chain intervals, so the only freedom beyond
    the canonical surjective re-indexing is the order of the components.
    """
    if len(p) == 0:
        return True
    maxima = p.base.maximal_elements
    color = p.base.color_of
    for u, v in itertools.combinations(maxima, 2):
        if color[u] is color[v]:
            return False
    # Two colors and pairwise-distinct maxima: at most two maximal elements,
    # and every component has at least one, so at most two components.
    comps = _component_intervals(p)
    if len(comps) > 2:
        return False
    chain = p.chain_of

    def local(v: int, comp_lo: int) -> int:
        return chain[v] - comp_lo + 1

    if len(comps) == 1:
        comp, lo, _ = comps[0]
        return all(local(v, lo) <= 2 for v in maxima)
    for first, second in itertools.permutations(comps):
        comp1, lo1, hi1 = first
        comp2, lo2, _ = second
        width1 = hi1 - lo1 + 1
        ok = all(local(v, lo1) <= 2 for v in maxima if v in comp1) and all(
            width1 + local(v, lo2) <= 2 for v in maxima if v in comp2)
        if ok:
            return True
    return False


@dataclass(frozen=True)
class Decomposition:
    """Ordered pieces of a grid poset; each prefix union is an order ideal."""

    pieces: tuple[GridPoset, ...]
    labels: tuple[str | None, ...]  # fundamental-poset type per piece, if any

    def __len__(self) -> int:
        return len(self.pieces)


def _ideals_by_size(p: GridPoset, max_size: int):
    """Yield (size, ideals-of-that-size) lists in deterministic order."""
    base = p.base
    layer: list[frozenset[int]] = [frozenset()]
    yield 0, layer
    lower = base.lower_covers
    order = {v: i for i, v in enumerate(total_order(p))}
    for size in range(1, max_size + 1):
        nxt = set()
        for ideal in layer:
            for v in base.ids:
                if v not in ideal and all(u in ideal for u in lower[v]):
                    nxt.add(ideal | {v})
        layer = sorted(nxt, key=lambda s: sorted(order[v] for v in s))
        yield size, layer


def _splits_validly(p: GridPoset, part: frozenset[int]) -> bool:
    chain = p.chain_of
    rest = set(p.base.ids) - part
    p1 = p.base.restrict(part)
    p2 = p.base.restrict(rest)
    max1 = [chain[v] for v in p1.maximal_elements]
    max2 = [chain[v] for v in p2.maximal_elements]
    min1 = [chain[v] for v in p1.minimal_elements]
    min2 = [chain[v] for v in p2.minimal_elements]
    return (max(max1, default=0) <= min(max2, default=10**9)
            and max(min1, default=0) <= min(min2, default=10**9))


def _first_piece(p: GridPoset) -> frozenset[int] | None:
    """Smallest nonempty proper order ideal that splits off validly."""
    n = len(p)
    below = p.base.below
    for size, layer in _ideals_by_size(p, n - 1):
        if size == 0:
            continue
        for ideal in layer:
            # order-ideal property holds by construction of the layers
            assert all(below[v] <= ideal for v in ideal)
            if _splits_validly(p, ideal):
                return ideal
    return None


def decompose(p: GridPoset) -> Decomposition:
    """Maximal decomposition into indecomposable pieces (k = 1 when none)."""
    from .build import fundamental_fixtures  # deferred: build imports grid

    pieces: list[GridPoset] = []
    remainder = p
    while len(remainder):
        part = _first_piece(remainder)
        if part is None:
            pieces.append(remainder)
            break
        pieces.append(remainder.restrict(part))
        remainder = remainder.restrict(set(remainder.base.ids) - part)
    labels: list[str | None] = []
    fixtures = fundamental_fixtures()
    for piece in pieces:
        label = None
        for name, fund in fixtures.items():
            if vertex_color_isomorphism(piece.base, fund.base) is not None:
                label = name
                break
        labels.append(label)
    return Decomposition(tuple(pieces), tuple(labels))


def triangle_dual(p, algebra: Algebra):
    """Dual recolored by the Dynkin symmetry of the longest Weyl element."""
    return p.dual().recolor(sigma0(algebra))
