"""Semistandard tableaux for the simple rank-two algebras, the
ideal <-> tableau bijection, the tableau-native lattice, and the
correspondence with Littelmann's column-block tableaux.

Shapes are pairs (a, b): b columns of length two followed by a columns of
length one.  A column is a tuple of one or two strictly increasing entries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebras import ALPHA, BETA, Algebra, Color, Weight
from .build import SemistandardPoset, fundamental_poset, semistandard_poset
from .lattice import IdealLattice, order_ideals
from .poset import EdgeColoredPoset, edge_color_isomorphism

Column = tuple[int, ...]
Tableau = tuple[Column, ...]
Block = tuple[Column, ...]
LittelmannTableau = tuple[Block, ...]


class ShapeError(ValueError):
    """Malformed shape or alphabet, as opposed to a mere admissibility failure."""


ALPHABET_SIZE = {Algebra.A2: 3, Algebra.C2: 4, Algebra.G2: 7}

_FORBIDDEN_G2 = {(2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6)}

# forbidden successors, keyed by the left column
_SUCCESSOR_FORBIDDEN_G2: dict[Column, frozenset[Column]] = {
    (4,): frozenset({(4,)}),
    (1, 4): frozenset({(1,), (1, 4), (1, 5), (1, 6), (1, 7)}),
    (1, 5): frozenset({(1,), (1, 5), (1, 6), (1, 7)}),
    (1, 6): frozenset({(1,), (2,), (1, 6), (1, 7), (2, 6), (2, 7)}),
    (2, 6): frozenset({(2,), (2, 6), (2, 7)}),
    (1, 7): frozenset({(1,), (2,), (3,), (4,), (1, 7), (2, 7), (3, 7), (4, 7)}),
    (2, 7): frozenset({(2,), (3,), (4,), (2, 7), (3, 7), (4, 7)}),
    (3, 7): frozenset({(3,), (4,), (3, 7), (4, 7)}),
    (4, 7): frozenset({(4,), (4, 7)}),
}

# decrementing an entry to this value colors the new edge
EDGE_COLOR_OF_VALUE: dict[Algebra, dict[int, Color]] = {
    Algebra.A2: {1: ALPHA, 2: BETA},
    Algebra.C2: {1: ALPHA, 2: BETA, 3: ALPHA},
    Algebra.G2: {1: ALPHA, 2: BETA, 3: ALPHA, 4: ALPHA, 5: BETA, 6: ALPHA},
}


def _require_simple(algebra: Algebra) -> None:
    if not algebra.is_simple:
        raise ValueError("tableaux are defined for the simple algebras only")


def entry_counts(t) -> dict[int, int]:
    counts: dict[int, int] = {}
    for column in t:
        for e in column:
            counts[e] = counts.get(e, 0) + 1
    return counts


def _n(counts: dict[int, int], k: int) -> int:
    return counts.get(k, 0)


def tableauwt(algebra: Algebra, t: Tableau) -> Weight:
    """Weight of a tableau as a linear functional of its entry counts."""
    _require_simple(algebra)
    n = entry_counts(t)
    if algebra is Algebra.A2:
        return (_n(n, 1) - _n(n, 2), _n(n, 2) - _n(n, 3))
    if algebra is Algebra.C2:
        return (_n(n, 1) - _n(n, 2) + _n(n, 3) - _n(n, 4), _n(n, 2) - _n(n, 3))
    return (
        _n(n, 1) - _n(n, 2) + 2 * _n(n, 3) - 2 * _n(n, 5) + _n(n, 6) - _n(n, 7),
        _n(n, 2) - _n(n, 3) + _n(n, 5) - _n(n, 6),
    )


def check_shape(algebra: Algebra, lam: Weight, t: Tableau) -> None:
    """Raise ShapeError unless t has shape lam over the right alphabet."""
    _require_simple(algebra)
    a, b = lam
    if len(t) != a + b:
        raise ShapeError(f"expected {a + b} columns, got {len(t)}")
    top = ALPHABET_SIZE[algebra]
    for i, column in enumerate(t):
        want = 2 if i < b else 1
        if len(column) != want:
            raise ShapeError(f"column {i + 1} must have {want} entries")
        if any(not (1 <= e <= top) for e in column):
            raise ShapeError(f"column {i + 1} has entries outside 1..{top}")
        if len(column) == 2 and column[0] >= column[1]:
            raise ShapeError(f"column {i + 1} does not strictly increase")


def _row_compatible(left: Column, right: Column) -> bool:
    return all(left[r] <= right[r] for r in range(min(len(left), len(right))))


def _pair_admissible(algebra: Algebra, left: Column, right: Column) -> bool:
    if not _row_compatible(left, right):
        return False
    if algebra is Algebra.C2 and left == (2, 3) and right == (2, 3):
        return False
    if algebra is Algebra.G2 and right in _SUCCESSOR_FORBIDDEN_G2.get(left, ()):
        return False
    return True


def _column_admissible(algebra: Algebra, column: Column) -> bool:
    if algebra is Algebra.C2 and column == (1, 4):
        return False
    if algebra is Algebra.G2 and column in _FORBIDDEN_G2:
        return False
    return True


def is_semistandard(algebra: Algebra, lam: Weight, t: Tableau) -> bool:
    """Admissibility within the fixed shape (ShapeError if malformed)."""
    check_shape(algebra, lam, t)
    if any(not _column_admissible(algebra, c) for c in t):
        return False
    return all(_pair_admissible(algebra, t[i], t[i + 1]) for i in range(len(t) - 1))


def allowed_columns(algebra: Algebra, length: int) -> tuple[Column, ...]:
    top = ALPHABET_SIZE[algebra]
    if length == 1:
        return tuple((v,) for v in range(1, top + 1))
    cols = [c for c in itertools.combinations(range(1, top + 1), 2)
            if _column_admissible(algebra, c)]
    return tuple(cols)


def enumerate_tableaux(algebra: Algebra, lam: Weight) -> tuple[Tableau, ...]:
    """All admissible tableaux of the given shape, sorted lexicographically."""
    _require_simple(algebra)
    a, b = lam
    lengths = [2] * b + [1] * a
    out: list[Tableau] = []

    def rec(i: int, prefix: list[Column]) -> None:
        if i == len(lengths):
            out.append(tuple(prefix))
            return
        for column in allowed_columns(algebra, lengths[i]):
            if prefix and not _pair_admissible(algebra, prefix[-1], column):
                continue
            prefix.append(column)
            rec(i + 1, prefix)
            prefix.pop()

    rec(0, [])
    out.sort()
    return tuple(out)


# --- tableau-native lattice ---------------------------------------------------


@dataclass(frozen=True)
class TableauLattice:
    """The reverse-componentwise order on admissible tableaux."""

    algebra: Algebra
    weight: Weight
    tableaux: tuple[Tableau, ...]
    edge_poset: EdgeColoredPoset

    def __len__(self) -> int:
        return len(self.tableaux)

    def index_of(self, t: Tableau) -> int:
        return self.tableaux.index(t)


def _decrements(algebra: Algebra, lam: Weight, t: Tableau):
    """Tableaux covering t-as-lattice-element: one entry lowered by one."""
    for i, column in enumerate(t):
        for j, e in enumerate(column):
            if e == 1:
                continue
            new_col = column[:j] + (e - 1,) + column[j + 1:]
            candidate = t[:i] + (new_col,) + t[i + 1:]
            try:
                ok = is_semistandard(algebra, lam, candidate)
            except ShapeError:
                ok = False
            if ok:
                yield candidate, EDGE_COLOR_OF_VALUE[algebra][e - 1]


def tableau_lattice(algebra: Algebra, lam: Weight) -> TableauLattice:
    _require_simple(algebra)
    tabs = enumerate_tableaux(algebra, lam)
    index = {t: i for i, t in enumerate(tabs)}
    covers = set()
    for t in tabs:
        for upper, color in _decrements(algebra, lam, t):
            covers.add((index[t], index[upper], color))
    ep = EdgeColoredPoset(tuple(range(len(tabs))), frozenset(covers))
    return TableauLattice(algebra, lam, tabs, ep)


# --- per-column dictionary between fundamental ideals and columns ------------


@lru_cache(maxsize=None)
def _piece_column_maps(algebra: Algebra, which: str) -> tuple[dict, dict]:
    """(local ideal frozenset -> column, column -> frozenset) for one piece type.

    The dictionary is the unique edge-colored isomorphism between the
    fundamental ideal lattice and the one-column tableau lattice.
    """
    lam = (1, 0) if which == "alpha_fund" else (0, 1)
    fund = order_ideals(fundamental_poset(algebra, which))
    tl = tableau_lattice(algebra, lam)
    iso = edge_color_isomorphism(fund.edge_poset, tl.edge_poset)
    if iso is None:
        raise RuntimeError("fundamental lattice does not match its column lattice")
    fwd = {}
    back = {}
    for i in range(len(fund)):
        ideal = fund.element_vertices(i)
        column = tl.tableaux[iso[i]][0]
        fwd[ideal] = column
        back[column] = ideal
    return fwd, back


def tableau_of_ideal(lattice: IdealLattice, index: int) -> Tableau:
    """Tableau of one lattice element, column by decomposition piece."""
    sp = lattice.source
    if not isinstance(sp, SemistandardPoset) or sp.order != "beta_alpha":
        raise ValueError("tableaux are defined on beta-alpha semistandard lattices")
    _require_simple(sp.algebra)
    s = lattice.element_vertices(index)
    columns = []
    for span in sp.pieces:
        fwd, _ = _piece_column_maps(sp.algebra, span.kind)
        local = frozenset(i for i, g in enumerate(span.vertex_ids) if g in s)
        columns.append(fwd[local])
    return tuple(columns)


def ideal_of_tableau(algebra: Algebra, lam: Weight, t: Tableau) -> frozenset[int]:
    """Vertex set of the order ideal labelled by an admissible tableau."""
    if not is_semistandard(algebra, lam, t):
        raise ValueError("tableau is not admissible for this shape")
    sp = semistandard_poset(algebra, "beta_alpha", lam)
    out: set[int] = set()
    for span, column in zip(sp.pieces, t):
        _, back = _piece_column_maps(algebra, span.kind)
        for local in back[column]:
            out.add(span.vertex_ids[local])
    return frozenset(out)


# --- Littelmann column blocks -------------------------------------------------

# block width per algebra
BLOCK_WIDTH = {Algebra.A2: 1, Algebra.C2: 2, Algebra.G2: 6}

LT_ALPHABET_SIZE = {Algebra.A2: 3, Algebra.C2: 4, Algebra.G2: 6}


def _rep(col: Column, k: int) -> Block:
    return (col,) * k


_BLOCKS_SINGLE: dict[Algebra, dict[Column, Block]] = {
    Algebra.A2: {(v,): ((v,),) for v in (1, 2, 3)},
    Algebra.C2: {(v,): _rep((v,), 2) for v in (1, 2, 3, 4)},
    Algebra.G2: {
        (1,): _rep((1,), 6),
        (2,): _rep((2,), 6),
        (3,): _rep((3,), 6),
        (4,): _rep((3,), 3) + _rep((4,), 3),
        (5,): _rep((4,), 6),
        (6,): _rep((5,), 6),
        (7,): _rep((6,), 6),
    },
}

_BLOCKS_DOUBLE: dict[Algebra, dict[Column, Block]] = {
    Algebra.A2: {c: (c,) for c in ((1, 2), (1, 3), (2, 3))},
    Algebra.C2: {
        (1, 2): _rep((1, 2), 2),
        (1, 3): _rep((1, 3), 2),
        (2, 3): ((1, 3), (2, 4)),
        (2, 4): _rep((2, 4), 2),
        (3, 4): _rep((3, 4), 2),
    },
    Algebra.G2: {
        (1, 2): _rep((1, 2), 6),
        (1, 3): _rep((1, 3), 6),
        (1, 4): _rep((1, 3), 4) + _rep((2, 4), 2),
        (1, 5): _rep((1, 3), 2) + _rep((2, 4), 4),
        (2, 5): _rep((2, 4), 6),
        (1, 6): _rep((1, 3), 2) + ((2, 4),) + _rep((3, 5), 3),
        (2, 6): _rep((2, 4), 3) + _rep((3, 5), 3),
        (1, 7): _rep((1, 3), 2) + ((2, 4), (3, 5)) + _rep((4, 6), 2),
        (3, 6): _rep((3, 5), 6),
        (2, 7): _rep((2, 4), 3) + ((3, 5),) + _rep((4, 6), 2),
        (3, 7): _rep((3, 5), 4) + _rep((4, 6), 2),
        (4, 7): _rep((3, 5), 2) + _rep((4, 6), 4),
        (5, 7): _rep((4, 6), 6),
        (6, 7): _rep((5, 6), 6),
    },
}


def admissible_blocks(algebra: Algebra, rows: int) -> tuple[Block, ...]:
    table = _BLOCKS_DOUBLE[algebra] if rows == 2 else _BLOCKS_SINGLE[algebra]
    return tuple(sorted(table.values()))


def to_littelmann(algebra: Algebra, t: Tableau) -> LittelmannTableau:
    """Replace every column by its admissible block."""
    _require_simple(algebra)
    blocks = []
    for column in t:
        table = _BLOCKS_DOUBLE[algebra] if len(column) == 2 else _BLOCKS_SINGLE[algebra]
        if column not in table:
            raise ValueError(f"column {column} has no admissible block")
        blocks.append(table[column])
    return tuple(blocks)


def from_littelmann(algebra: Algebra, u: LittelmannTableau) -> Tableau:
    _require_simple(algebra)
    single = {block: col for col, block in _BLOCKS_SINGLE[algebra].items()}
    double = {block: col for col, block in _BLOCKS_DOUBLE[algebra].items()}
    columns = []
    for block in u:
        rows = len(block[0])
        table = double if rows == 2 else single
        if block not in table:
            raise ValueError(f"unknown block {block}")
        columns.append(table[block])
    return tuple(columns)


def wt_lit(algebra: Algebra, u: LittelmannTableau) -> Weight:
    """Normalized weight of a block tableau; always integral on admissible input."""
    _require_simple(algebra)
    n = entry_counts(col for block in u for col in block)
    if algebra is Algebra.A2:
        pair = (Fraction(_n(n, 1) - _n(n, 2)), Fraction(_n(n, 2) - _n(n, 3)))
    elif algebra is Algebra.C2:
        pair = (
            Fraction(_n(n, 1) - _n(n, 2) + _n(n, 3) - _n(n, 4), 2),
            Fraction(_n(n, 2) - _n(n, 3), 2),
        )
    else:
        pair = (
            Fraction(_n(n, 1) - _n(n, 2) + 2 * _n(n, 3) - 2 * _n(n, 4)
                     + _n(n, 5) - _n(n, 6), 6),
            Fraction(_n(n, 2) - _n(n, 3) + _n(n, 4) - _n(n, 5), 6),
        )
    if pair[0].denominator != 1 or pair[1].denominator != 1:
        raise ArithmeticError(f"non-integral block-tableau weight {pair}")
    return (int(pair[0]), int(pair[1]))


def enumerate_littelmann(algebra: Algebra, lam: Weight) -> tuple[LittelmannTableau, ...]:
    """All semistandard block tableaux built from admissible blocks."""
    _require_simple(algebra)
    a, b = lam
    rows_seq = [2] * b + [1] * a
    out: list[LittelmannTableau] = []

    def compatible(left: Block, right: Block) -> bool:
        return _row_compatible(left[-1], right[0])

    def rec(i: int, prefix: list[Block]) -> None:
        if i == len(rows_seq):
            out.append(tuple(prefix))
            return
        for block in admissible_blocks(algebra, rows_seq[i]):
            if prefix and not compatible(prefix[-1], block):
                continue
            prefix.append(block)
            rec(i + 1, prefix)
            prefix.pop()

    rec(0, [])
    out.sort()
    return tuple(out)


def tableau_text(t: Tableau) -> str:
    """Canonical whitespace-free text, e.g. [1,2][1]."""
    return "".join("[" + ",".join(str(e) for e in column) + "]" for column in t)


def littelmann_text(u: LittelmannTableau) -> str:
    return "|".join(tableau_text(block) for block in u)


def parse_tableau(text: str) -> Tableau:
    if text == "":
        return ()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"malformed tableau text {text!r}")
    parts = text[1:-1].split("][")
    return tuple(tuple(int(e) for e in part.split(",")) for part in parts)
