"""Canonical JSON and DOT serialization for posets and ideal lattices.

JSON layouts:
  poset    {"kind": "vertex"|"edge", "vertices": [{"id", "color"}], "covers": [...]}
           (vertex posets may add "chain": [{"id", "chain"}] for grid posets)
  lattice  {"poset": ..., "elements": [[vertex ids]], "covers": [[i, j, color]],
            "weights": [[m_a, m_b]]}

Serialization is canonical: keys sorted, fixed separators, lists in a
deterministic order, so parse -> re-serialize is byte-identical.
"""

from __future__ import annotations

import json
from typing import Any

from .algebras import Color
from .grid import GridPoset
from .lattice import IdealLattice, order_ideals
from .poset import EdgeColoredPoset, VertexColoredPoset, find_rank_function


def poset_to_obj(p: VertexColoredPoset | EdgeColoredPoset | GridPoset) -> dict[str, Any]:
    if isinstance(p, GridPoset):
        obj = poset_to_obj(p.base)
        obj["chain"] = [{"chain": c, "id": v} for v, c in sorted(p.chains)]
        return obj
    if isinstance(p, VertexColoredPoset):
        return {
            "kind": "vertex",
            "vertices": [{"color": c.value, "id": v} for v, c in p.vertices],
            "covers": [[u, v] for u, v in sorted(p.covers)],
        }
    return {
        "kind": "edge",
        "vertices": [{"id": v} for v in p.elements],
        "covers": [[u, v, c.value] for u, v, c in sorted(p.covers, key=lambda t: (t[0], t[1]))],
    }


def poset_from_obj(obj: dict[str, Any]) -> VertexColoredPoset | EdgeColoredPoset | GridPoset:
    kind = obj.get("kind")
    if kind == "vertex":
        colors = {rec["id"]: Color(rec["color"]) for rec in obj["vertices"]}
        covers = [(u, v) for u, v in obj["covers"]]
        base = VertexColoredPoset.build(colors, covers)
        if "chain" in obj:
            chain = {rec["id"]: rec["chain"] for rec in obj["chain"]}
            return GridPoset(base, tuple(sorted(chain.items())))
        return base
    if kind == "edge":
        elements = tuple(rec["id"] for rec in obj["vertices"])
        covers = frozenset((u, v, Color(c)) for u, v, c in obj["covers"])
        return EdgeColoredPoset(elements, covers)
    raise ValueError(f"unknown poset kind {kind!r}")


def lattice_to_obj(lat: IdealLattice) -> dict[str, Any]:
    from .lattice import _grid_of

    return {
        "poset": poset_to_obj(_grid_of(lat.source)),
        "elements": [sorted(lat.element_vertices(i)) for i in range(len(lat))],
        "covers": [[i, j, c.value] for i, j, c in sorted(lat.covers, key=lambda t: (t[0], t[1]))],
        "weights": [list(w) for w in lat.weights],
    }


def lattice_from_obj(obj: dict[str, Any]) -> IdealLattice:
    """Rebuild the lattice from its poset and check the file against it."""
    poset = poset_from_obj(obj["poset"])
    lat = order_ideals(poset)
    if [sorted(lat.element_vertices(i)) for i in range(len(lat))] != obj["elements"]:
        raise ValueError("lattice file elements do not match its poset")
    if [list(w) for w in lat.weights] != obj["weights"]:
        raise ValueError("lattice file weights do not match its poset")
    return lat


def dumps(obj: dict[str, Any]) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def load(path: str) -> dict[str, Any]:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dump(obj: dict[str, Any], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(obj))


# --- DOT ---------------------------------------------------------------------

_DOT_COLOR = {"a": "firebrick", "b": "royalblue"}


def poset_to_dot(p: VertexColoredPoset | EdgeColoredPoset | GridPoset) -> str:
    """Hasse diagram, drawn bottom to top, colors as labels."""
    if isinstance(p, GridPoset):
        p = p.base
    lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=circle];"]
    if isinstance(p, VertexColoredPoset):
        for v, c in p.vertices:
            lines.append(
                f'  "{v}" [label="{v}:{c.value}", color={_DOT_COLOR[c.value]}];')
        for u, v in sorted(p.covers):
            lines.append(f'  "{u}" -> "{v}";')
    else:
        for v in p.elements:
            lines.append(f'  "{v}";')
        for u, v, c in sorted(p.covers, key=lambda t: (t[0], t[1])):
            lines.append(
                f'  "{u}" -> "{v}" [label="{c.value}", color={_DOT_COLOR[c.value]}];')
    rank = find_rank_function(p)
    if rank is not None:
        by_rank: dict[int, list[int]] = {}
        for v, r in rank.ranks:
            by_rank.setdefault(r, []).append(v)
        for r in sorted(by_rank):
            members = " ".join(f'"{v}"' for v in sorted(by_rank[r]))
            lines.append(f"  {{ rank=same; {members} }}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_to_dot(lat: IdealLattice) -> str:
    return poset_to_dot(lat.edge_poset)
