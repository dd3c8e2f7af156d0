"""Fundamental posets for the rank-two algebras and the semistandard-poset
builders that concatenate them.

Each fundamental poset is stored as a literal fixture: vertices in a fixed
bottom-to-top linear extension, each carrying a chain index and a color,
plus the cover list.  A semistandard poset is a stack of such pieces: the
pieces of the second weight type sit one chain to the right, every global
chain is the concatenation of the per-piece chain segments in piece order,
and consecutive segments of one chain are joined by a single cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .algebras import ALPHA, BETA, Algebra, Color, Weight
from .grid import GridPoset

Order = Literal["beta_alpha", "alpha_beta"]
Which = Literal["alpha_fund", "beta_fund"]


@dataclass(frozen=True)
class PieceSpan:
    """One fundamental-poset copy inside a semistandard poset."""

    kind: Which
    vertex_ids: tuple[int, ...]  # global ids, indexed by local vertex number


# (chain, color) per local vertex, bottom to top, plus covers (lo, hi).
_A = ALPHA
_B = BETA
_FUNDAMENTALS: dict[tuple[Algebra, Which], tuple[tuple[tuple[int, Color], ...], tuple[tuple[int, int], ...]]] = {
    (Algebra.A1A1, "alpha_fund"): (((1, _A),), ()),
    (Algebra.A1A1, "beta_fund"): (((1, _B),), ()),
    (Algebra.A2, "alpha_fund"): (((2, _B), (1, _A)), ((0, 1),)),
    (Algebra.A2, "beta_fund"): (((2, _A), (1, _B)), ((0, 1),)),
    (Algebra.C2, "alpha_fund"): (((3, _A), (2, _B), (1, _A)), ((0, 1), (1, 2))),
    (Algebra.C2, "beta_fund"): (((3, _B), (2, _A), (2, _A), (1, _B)),
                                ((0, 1), (1, 2), (2, 3))),
    (Algebra.G2, "alpha_fund"): (((5, _A), (4, _B), (3, _A), (3, _A), (2, _B), (1, _A)),
                                 ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5))),
    # The 10-vertex poset: chains sized 1,3,2,3,1 top to bottom; the two
    # middle beta vertices each sit between alpha neighbours one chain away.
    (Algebra.G2, "beta_fund"): (
        ((5, _B), (4, _A), (4, _A), (4, _A), (3, _B), (3, _B),
         (2, _A), (2, _A), (2, _A), (1, _B)),
        ((0, 1), (1, 2), (2, 3), (2, 4), (3, 5), (4, 5),
         (4, 6), (5, 7), (6, 7), (7, 8), (8, 9)),
    ),
}


@lru_cache(maxsize=None)
def fundamental_poset(algebra: Algebra, which: Which) -> GridPoset:
    """One of the eight fundamental grid posets."""
    verts, covers = _FUNDAMENTALS[(algebra, which)]
    colors = {i: c for i, (_, c) in enumerate(verts)}
    chain = {i: ch for i, (ch, _) in enumerate(verts)}
    return GridPoset.build(colors, covers, chain)


@lru_cache(maxsize=None)
def fundamental_fixtures() -> dict[str, GridPoset]:
    out = {}
    for (algebra, which) in _FUNDAMENTALS:
        weight = "(1,0)" if which == "alpha_fund" else "(0,1)"
        out[f"{algebra.value}{weight}"] = fundamental_poset(algebra, which)
    return out


@dataclass(frozen=True)
class SemistandardPoset:
    """A built semistandard poset together with its piece structure."""

    grid: GridPoset
    pieces: tuple[PieceSpan, ...]
    algebra: Algebra
    order: Order
    weight: Weight


def _piece_sequence(algebra: Algebra, order: Order, lam: Weight) -> list[tuple[Which, int]]:
    """(kind, chain offset) per piece, in concatenation order."""
    a, b = lam
    if order == "beta_alpha":
        return [("beta_fund", 0)] * b + [("alpha_fund", 1)] * a
    if order == "alpha_beta":
        return [("alpha_fund", 0)] * a + [("beta_fund", 1)] * b
    raise ValueError(f"order must be beta_alpha or alpha_beta, got {order!r}")


def semistandard_poset(algebra: Algebra, order: Order, lam: Weight) -> SemistandardPoset:
    """Concatenate b copies of one fundamental poset and a of the other."""
    a, b = lam
    if a < 0 or b < 0:
        raise ValueError("weight coordinates must be nonnegative")
    colors: dict[int, Color] = {}
    chain: dict[int, int] = {}
    covers: set[tuple[int, int]] = set()
    spans: list[PieceSpan] = []
    segments: dict[int, list[int]] = {}  # global chain -> vertex ids bottom to top
    next_id = 0
    for kind, offset in _piece_sequence(algebra, order, lam):
        verts, piece_covers = _FUNDAMENTALS[(algebra, kind)]
        ids = tuple(range(next_id, next_id + len(verts)))
        next_id += len(verts)
        local_segments: dict[int, list[int]] = {}
        for local, (ch, col) in enumerate(verts):
            g = ids[local]
            colors[g] = col
            chain[g] = ch + offset
            local_segments.setdefault(ch + offset, []).append(g)
        for lo, hi in piece_covers:
            u, v = ids[lo], ids[hi]
            if chain[u] != chain[v]:
                covers.add((u, v))
            # same-chain piece covers reappear as consecutive segment pairs
        for c, seg in local_segments.items():
            segments.setdefault(c, []).extend(seg)
    for seg in segments.values():
        covers.update(zip(seg, seg[1:]))
    grid = GridPoset.build(colors, covers, chain).normalized()
    # vertex order inside each piece fixture is bottom to top
    pos = 0
    for kind, _ in _piece_sequence(algebra, order, lam):
        n = len(_FUNDAMENTALS[(algebra, kind)][0])
        spans.append(PieceSpan(kind, tuple(range(pos, pos + n))))
        pos += n
    return SemistandardPoset(grid, tuple(spans), algebra, order, lam)


def semistandard_poset_oracle(algebra: Algebra, lam: Weight):
    """Independent construction path for differential testing.

    For the simple algebras the lattice is rebuilt from tableaux and the
    poset of its join-irreducibles is extracted, with each join-irreducible
    colored by the color of its unique lower cover.  For A1+A1 the lattice
    is the colored product of two chains.
    """
    from .lattice import join_irreducible_poset
    from .poset import EdgeColoredPoset, product

    if algebra is Algebra.A1A1:
        a, b = lam
        alpha_chain = EdgeColoredPoset(
            tuple(range(a + 1)), frozenset((i, i + 1, ALPHA) for i in range(a)))
        beta_chain = EdgeColoredPoset(
            tuple(range(b + 1)), frozenset((i, i + 1, BETA) for i in range(b)))
        lattice = product(beta_chain, alpha_chain)
    else:
        from .tableaux import tableau_lattice

        lattice = tableau_lattice(algebra, lam)
    return join_irreducible_poset(lattice)
