"""Direct, Cartesian and strong products and their complementary variants.

All products index vertex ``(u, v)`` as ``u * h.n + v`` so the strong
product is literally the union of the direct and Cartesian edge sets.
"""

from __future__ import annotations

from enum import Enum
from typing import Sequence

import numpy as np

from .graph import (
    MAX_VERTICES,
    Graph,
    GraphError,
    Permutation,
    complement,
    complete_graph,
    induced_subgraph,
    is_isomorphism,
    iter_bits,
)
from .reseminant import build_reseminant
from .verify import check_minimal_prime_graph, is_solvable_prime_graph


class ProductKind(str, Enum):
    DIRECT = "direct"
    CARTESIAN = "cartesian"
    STRONG = "strong"
    COMPLEMENTARY_DIRECT = "cdirect"
    COMPLEMENTARY_CARTESIAN = "ccartesian"


def _check_size(g: Graph, h: Graph) -> None:
    if g.n * h.n > MAX_VERTICES:
        raise GraphError(f"product of {g.n} and {h.n} vertices exceeds the cap of {MAX_VERTICES}")


def _blow_up(mask: int, width: int, inner: int) -> int:
    """Union over ``u`` in ``mask`` of ``inner << (u * width)``."""
    out = 0
    for u in iter_bits(mask):
        out |= inner << (u * width)
    return out


def direct_product(g: Graph, h: Graph) -> Graph:
    _check_size(g, h)
    rows = [_blow_up(g.adj[u], h.n, h.adj[v]) for u in range(g.n) for v in range(h.n)]
    return Graph(g.n * h.n, tuple(rows))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    _check_size(g, h)
    rows = []
    for u in range(g.n):
        for v in range(h.n):
            same_u = h.adj[v] << (u * h.n)
            same_v = _blow_up(g.adj[u], h.n, 1 << v)
            rows.append(same_u | same_v)
    return Graph(g.n * h.n, tuple(rows))


def strong_product(g: Graph, h: Graph) -> Graph:
    d, c = direct_product(g, h), cartesian_product(g, h)
    return Graph(d.n, tuple(a | b for a, b in zip(d.adj, c.adj)))


_PLAIN = {
    ProductKind.DIRECT: direct_product,
    ProductKind.CARTESIAN: cartesian_product,
    ProductKind.STRONG: strong_product,
}


def product(kind: ProductKind | str, g: Graph, h: Graph) -> Graph:
    kind = ProductKind(kind)
    if kind is ProductKind.COMPLEMENTARY_DIRECT:
        return complement(direct_product(complement(g), complement(h)))
    if kind is ProductKind.COMPLEMENTARY_CARTESIAN:
        return complement(cartesian_product(complement(g), complement(h)))
    return _PLAIN[kind](g, h)


def complementary_product(kind: ProductKind | str, g: Graph, h: Graph) -> Graph:
    """``complement(X(complement(g), complement(h)))`` for plain product ``X``."""
    kind = ProductKind(kind)
    if kind in (ProductKind.COMPLEMENTARY_DIRECT, ProductKind.COMPLEMENTARY_CARTESIAN):
        return product(kind, g, h)
    return complement(_PLAIN[kind](complement(g), complement(h)))


def iterated_product(kind: ProductKind | str, gs: Sequence[Graph]) -> Graph:
    """Left-associated ``((g0 * g1) * g2) * ...``."""
    if not gs:
        raise GraphError("need at least one factor")
    out = gs[0]
    for g in gs[1:]:
        out = product(kind, out, g)
    return out


def iterated_complementary_direct(g: Graph, t: int) -> Graph:
    if t < 1:
        raise GraphError("need t >= 1")
    return iterated_product(ProductKind.COMPLEMENTARY_DIRECT, [g] * t)


def check_product_preservation(kind: ProductKind | str, gs: Sequence[Graph]) -> bool:
    """Whether the iterated complementary product of solvable prime graphs is
    again a solvable prime graph."""
    kind = ProductKind(kind)
    if kind not in (ProductKind.COMPLEMENTARY_DIRECT, ProductKind.COMPLEMENTARY_CARTESIAN):
        raise GraphError("preservation is defined for the complementary products")
    for g in gs:
        if not is_solvable_prime_graph(g):
            raise GraphError("every factor must be a solvable prime graph")
    return is_solvable_prime_graph(iterated_product(kind, gs))


def is_minimal_product(kind: ProductKind | str, gs: Sequence[Graph]) -> bool:
    return check_minimal_prime_graph(iterated_product(kind, gs)).is_minimal


def diagonal_embedding_witness(g: Graph) -> list[int]:
    """Vertices ``(u, u)`` of ``g x g``; they induce a copy of ``g``."""
    return [u * g.n + u for u in range(g.n)]


def diagonal_subgraph(g: Graph) -> Graph:
    return induced_subgraph(direct_product(g, g), diagonal_embedding_witness(g))


def strong_duplication_iso(g: Graph, m: int) -> Permutation:
    """Explicit isomorphism from ``K_{m+1} (strong) g`` onto ``g`` with every
    vertex duplicated ``m`` times.

    ``(0, j)`` goes to ``j`` and ``(i, j)`` for ``i >= 1`` to the ``i``-th copy
    of ``j``, which :func:`build_reseminant` places at ``n + j*m + i - 1``.
    """
    if m < 0:
        raise GraphError("m must be non-negative")
    n = g.n
    if (m + 1) * n > MAX_VERTICES:
        raise GraphError(f"{(m + 1) * n} vertices exceeds the cap of {MAX_VERTICES}")
    left = strong_product(complete_graph(m + 1), g)
    right = build_reseminant(g, [m] * n)
    perm = []
    for i in range(m + 1):
        for j in range(n):
            perm.append(j if i == 0 else n + j * m + i - 1)
    perm_t = tuple(perm)
    if not is_isomorphism(left, right, perm_t):
        raise GraphError("duplication map is not an isomorphism")
    return perm_t


def adjacency_tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(a, b)


def adjacency_cartesian(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(a, np.eye(len(b), dtype=a.dtype)) + np.kron(np.eye(len(a), dtype=a.dtype), b)
