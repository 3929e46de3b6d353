"""Solvable and minimal prime graph predicates with certificates.

A graph is a solvable prime graph when its complement is triangle-free and
3-colourable.  It is minimal when, in addition, it is connected on at least
two vertices and deleting any one of its edges breaks at least one of those
two complement properties.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import (  # noqa: F401  (chromatic_number re-exported)
    Coloring,
    chromatic_number,
    find_3_coloring,
    find_coloring,
    is_proper_coloring,
)
from .graph import Edge, Graph, GraphError, add_edge, complement, find_triangle, is_connected

COLORING_SURVIVES = "coloring-survives"


def is_triangle_free(g: Graph) -> bool:
    return find_triangle(g) is None


def triangle_witness(g: Graph) -> tuple[int, int, int] | None:
    return find_triangle(g)


def is_solvable_prime_graph(g: Graph) -> bool:
    h = complement(g)
    return is_triangle_free(h) and find_3_coloring(h) is not None


@dataclass
class MinimalityReport:
    """Outcome of :func:`check_minimal_prime_graph`.

    ``reason`` is one of ``"minimal"``, ``"too-small"``, ``"disconnected"``,
    ``"complement-triangle"``, ``"complement-not-3-colorable"`` or
    ``"removable-edge"``.  For a removable edge, ``witness`` is a proper
    3-colouring of the complement after the deletion (whose
    triangle-freeness is checkable directly); for ``complement-triangle`` it
    is the triangle.
    """

    is_solvable: bool
    is_minimal: bool
    connected: bool
    reason: str
    failing_edge: Edge | None = None
    failure_kind: str | None = None
    witness: tuple[int, ...] | None = None
    coloring: tuple[int, ...] | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        return {
            "is_solvable": self.is_solvable,
            "is_minimal": self.is_minimal,
            "connected": self.connected,
            "reason": self.reason,
            "failing_edge": list(self.failing_edge) if self.failing_edge else None,
            "failure_kind": self.failure_kind,
            "witness": list(self.witness) if self.witness is not None else None,
        }


def _surviving_coloring(h: Graph, u: int, v: int, base: Coloring) -> Coloring | None:
    """3-colouring of ``h + {u, v}`` if ``h + {u, v}`` stays triangle-free and
    3-colourable, else ``None``.  ``base`` is any 3-colouring of ``h``."""
    if h.adj[u] & h.adj[v]:
        return None
    if base.colors[u] != base.colors[v]:
        return base
    return find_3_coloring(add_edge(h, u, v))


def check_minimal_prime_graph(g: Graph) -> MinimalityReport:
    """Decide minimality, reporting the first removable edge in sorted order."""
    h = complement(g)
    connected = is_connected(g)
    tri = find_triangle(h)
    if tri is not None:
        return MinimalityReport(False, False, connected, "complement-triangle", witness=tri)
    base = find_3_coloring(h)
    if base is None:
        return MinimalityReport(False, False, connected, "complement-not-3-colorable")
    if g.n < 2:
        return MinimalityReport(True, False, connected, "too-small", coloring=base.colors)
    if not connected:
        return MinimalityReport(True, False, connected, "disconnected", coloring=base.colors)
    for u, v in g.edges():
        survived = _surviving_coloring(h, u, v, base)
        if survived is not None:
            return MinimalityReport(
                True, False, True, "removable-edge",
                failing_edge=(u, v), failure_kind=COLORING_SURVIVES,
                witness=survived.colors, coloring=base.colors,
            )
    return MinimalityReport(True, True, True, "minimal", coloring=base.colors)


def is_minimal_prime_graph(g: Graph) -> bool:
    return check_minimal_prime_graph(g).is_minimal


def edge_deletion_effect(g: Graph, u: int, v: int) -> dict:
    """What deleting edge ``{u, v}`` of ``g`` does to the complement."""
    if not g.has_edge(u, v):
        raise GraphError(f"{{{u}, {v}}} is not an edge")
    h = add_edge(complement(g), u, v)
    common = h.adj[u] & h.adj[v]
    triangle = None
    if common:
        w = (common & -common).bit_length() - 1
        triangle = tuple(sorted((u, v, w)))
    col = find_3_coloring(h)
    return {
        "triangle": triangle,
        "three_colorable": col is not None,
        "coloring": col.colors if col else None,
    }


def addable_edges(h: Graph, first_only: bool = False) -> list[Edge]:
    """Non-edges of ``h`` whose addition keeps ``h`` triangle-free and 3-colourable."""
    if not is_triangle_free(h):
        raise GraphError("addable_edges needs a triangle-free graph")
    base = find_3_coloring(h)
    if base is None:
        raise GraphError("addable_edges needs a 3-colourable graph")
    out = []
    for u, v in h.non_edges():
        if _surviving_coloring(h, u, v, base) is not None:
            out.append((u, v))
            if first_only:
                break
    return out


def two_colorable_on(h: Graph, vertices) -> Coloring | None:
    """A 3-colouring of ``h`` using at most two colours on ``vertices``.

    Palette symmetry makes "some colour is unused on the set" equivalent to
    "colour 2 is unused on the set", so one constrained search decides it.
    """
    return find_coloring(h, 3, {v: 0b011 for v in vertices})


def check_coloring(g: Graph, coloring: Coloring) -> bool:
    return is_proper_coloring(g, coloring.colors, coloring.palette)
