"""Vertex duplication, true-twin classes and the C5 duplication model."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import (
    Graph,
    GraphError,
    attach_vertex,
    cycle_graph,
    induced_subgraph,
    is_clique,
    is_connected,
)

C5 = cycle_graph(5)


def duplicate_vertex(g: Graph, v: int) -> Graph:
    """Append a true twin of ``v``: the new vertex is adjacent to ``N[v]``."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    return attach_vertex(g, g.neighbors(v) + [v])


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)

    def class_of(self) -> list[int]:
        """Class index of every vertex."""
        out = [0] * sum(self.sizes)
        for i, cls in enumerate(self.classes):
            for v in cls:
                out[v] = i
        return out


def twin_partition(g: Graph) -> TwinPartition:
    """Classes of vertices with equal closed neighbourhoods, ordered by least member."""
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.closed_neighborhood(v), []).append(v)
    classes = sorted(tuple(c) for c in groups.values())
    for c in classes:
        # every twin class is a clique
        assert is_clique(g, c)
    return TwinPartition(tuple(classes))


def base_graph(g: Graph) -> Graph:
    """Quotient by true twins, keeping each class's least member."""
    return induced_subgraph(g, twin_partition(g).representatives)


def is_base_graph(g: Graph) -> bool:
    return all(len(c) == 1 for c in twin_partition(g).classes)


def build_reseminant(base: Graph, w: Sequence[int]) -> Graph:
    """Duplicate vertex ``i`` of ``base`` exactly ``w[i]`` times, ascending in ``i``.

    Copies are appended in that order, so the ``j``-th copy of vertex ``i``
    (``j >= 1``) is ``base.n + sum(w[:i]) + j - 1``.
    """
    if len(w) != base.n:
        raise GraphError(f"multiplicity vector has length {len(w)}, base has {base.n} vertices")
    if any(x < 0 for x in w):
        raise GraphError("multiplicities must be non-negative")
    g = base
    for i, times in enumerate(w):
        for _ in range(times):
            g = duplicate_vertex(g, i)
    return g


def duplicate_in_order(base: Graph, sequence: Sequence[int]) -> Graph:
    """Duplicate base vertices in the given order (each step duplicates the
    original vertex, whose twin class keeps growing)."""
    g = base
    for i in sequence:
        g = duplicate_vertex(g, i)
    return g


def duplication_matrix(base: Graph = C5) -> np.ndarray:
    """Adjacency plus identity: column ``i`` is the degree gain of every class
    when class ``i`` grows by one vertex."""
    a = np.eye(base.n, dtype=np.int64)
    for u, v in base.edges():
        a[u, v] = a[v, u] = 1
    return a


def _require_c5(w: Sequence[int]) -> None:
    if len(w) != 5:
        raise GraphError("the C5 duplication model needs a length-5 multiplicity vector")


def degree_vector(w: Sequence[int]) -> list[int]:
    """Per-class degrees ``A w + 2`` of the C5-reseminant with multiplicities ``w``."""
    _require_c5(w)
    v = duplication_matrix(C5) @ np.asarray(w, dtype=np.int64) + 2
    return [int(x) for x in v]


def class_degrees(g: Graph) -> list[int]:
    """Degree of each twin class (well defined: twins share degree)."""
    return [g.degree(c[0]) for c in twin_partition(g).classes]


@dataclass(frozen=True)
class RegularityVerdict:
    regular: bool
    k: int | None = None
    h: int | None = None
    n: int | None = None


def regular_reseminant_verdict(w: Sequence[int]) -> RegularityVerdict:
    """Regular iff all multiplicities equal some ``h >= 0``; then the graph is
    ``(2 + 3h)``-regular on ``5 + 5h`` vertices."""
    _require_c5(w)
    if len(set(w)) != 1:
        return RegularityVerdict(False)
    h = w[0]
    return RegularityVerdict(True, k=2 + 3 * h, h=h, n=5 + 5 * h)


def c5_reseminant_multiplicities(g: Graph) -> tuple[int, ...] | None:
    """Multiplicities ``h_i - 1`` of a C5-reseminant graph, read off in the
    base graph's vertex order, or ``None`` when the base graph is not C5."""
    part = twin_partition(g)
    base = induced_subgraph(g, part.representatives)
    if base.n != 5 or sorted(base.degree(v) for v in range(5)) != [2] * 5:
        return None
    if not is_connected(base):
        return None
    return tuple(s - 1 for s in part.sizes)
