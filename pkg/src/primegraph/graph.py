"""Immutable simple undirected graphs over ``0..n-1`` with bitset rows.

Row ``adj[u]`` is a Python ``int`` whose bit ``v`` is set iff ``{u, v}`` is an
edge.  Everything downstream (colouring, products, automorphisms) works on
these rows directly, so the set algebra stays at a handful of integer ops.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_VERTICES = 256
CANONICAL_LIMIT = 64

Edge = tuple[int, int]
Permutation = tuple[int, ...]


class GraphError(ValueError):
    """Raised on malformed graph input or a violated size limit."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[u]`` is the open neighbourhood bitset of ``u``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        if self.n > MAX_VERTICES:
            raise GraphError(f"{self.n} vertices exceeds the cap of {MAX_VERTICES}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def edges(self) -> list[Edge]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def non_edges(self) -> list[Edge]:
        full = self.full_mask
        out = []
        for u in range(self.n):
            missing = (~self.adj[u] & full) >> (u + 1)
            for v in iter_bits(missing):
                out.append((u, u + 1 + v))
        return out

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def _trusted(n: int, rows: Sequence[int]) -> Graph:
    return Graph(n, tuple(rows))


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an edge list, rejecting loops and out-of-range endpoints."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    if n > MAX_VERTICES:
        raise GraphError(f"{n} vertices exceeds the cap of {MAX_VERTICES}")
    rows = [0] * n
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {{{u}, {v}}} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return _trusted(n, rows)


def from_rows(rows: Sequence[int]) -> Graph:
    """Build a graph from bitset rows, checking symmetry and loops."""
    n = len(rows)
    full = (1 << n) - 1
    for u, row in enumerate(rows):
        if row & ~full:
            raise GraphError(f"row {u} has bits beyond vertex {n - 1}")
        if row >> u & 1:
            raise GraphError(f"loop at vertex {u}")
        for v in iter_bits(row):
            if not rows[v] >> u & 1:
                raise GraphError(f"asymmetric adjacency between {u} and {v}")
    return _trusted(n, rows)


def empty_graph(n: int) -> Graph:
    return _trusted(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return _trusted(n, [full & ~(1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return _trusted(g.n, [~row & full & ~(1 << v) for v, row in enumerate(g.adj)])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"cannot add edge {{{u}, {v}}}")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return _trusted(g.n, rows)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"cannot remove edge {{{u}, {v}}}")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return _trusted(g.n, rows)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled in ascending order."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for w in iter_bits(g.adj[v]):
            i = index.get(w)
            if i is not None:
                row |= 1 << i
        rows.append(row)
    return _trusted(len(keep), rows)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


def attach_vertex(g: Graph, neighbors: Iterable[int]) -> Graph:
    """Append vertex ``g.n`` adjacent to exactly ``neighbors``."""
    nbrs = set(neighbors)
    for u in nbrs:
        if not 0 <= u < g.n:
            raise GraphError(f"vertex {u} out of range")
    if g.n + 1 > MAX_VERTICES:
        raise GraphError(f"{g.n + 1} vertices exceeds the cap of {MAX_VERTICES}")
    rows = [row | (1 << g.n) if u in nbrs else row for u, row in enumerate(g.adj)]
    rows.append(mask_of(nbrs))
    return _trusted(g.n + 1, rows)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with edge ``{perm[u], perm[v]}`` for every edge ``{u, v}`` of ``g``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabelling must be a permutation of the vertices")
    rows = [0] * g.n
    for u, row in enumerate(g.adj):
        pu = perm[u]
        for v in iter_bits(row):
            rows[pu] |= 1 << perm[v]
    return _trusted(g.n, rows)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.full_mask


def components(g: Graph) -> list[list[int]]:
    left = g.full_mask
    out = []
    while left:
        start = left & -left
        seen = frontier = start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        out.append(list(iter_bits(seen)))
        left &= ~seen
    return out


def degree_sequence(g: Graph) -> list[int]:
    return [row.bit_count() for row in g.adj]


def is_regular(g: Graph) -> int | None:
    """The common degree if every vertex has it, else ``None``."""
    degs = set(degree_sequence(g))
    if len(degs) == 1:
        return degs.pop()
    if g.n == 0:
        return 0
    return None


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    m = mask_of(vertices)
    return all((g.adj[v] | (1 << v)) & m == m for v in iter_bits(m))


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    m = mask_of(vertices)
    return all(g.adj[v] & m == 0 for v in iter_bits(m))


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in iter_bits(g.adj[u]):
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    stack.append(v)
                elif side[v] == side[u]:
                    return False
    return True


# ---------------------------------------------------------------- triangles


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    """Lexicographically first triangle ``(a, b, c)`` with ``a < b < c``, if any."""
    for a in range(g.n):
        higher = g.adj[a] >> (a + 1) << (a + 1)
        for b in iter_bits(higher):
            common = g.adj[a] & g.adj[b] >> (b + 1) << (b + 1)
            if common:
                c = (common & -common).bit_length() - 1
                return (a, b, c)
    return None


def triangle_count(g: Graph) -> int:
    """Count triangles by intersecting neighbourhood bitsets."""
    total = 0
    for a in range(g.n):
        for b in iter_bits(g.adj[a] >> (a + 1) << (a + 1)):
            total += (g.adj[a] & g.adj[b] >> (b + 1) << (b + 1)).bit_count()
    return total


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    return a


def triangle_count_trace(g: Graph) -> int:
    """Count triangles as ``tr(A^3) / 6``; a cross-check for :func:`triangle_count`."""
    a = adjacency_matrix(g)
    return int(np.trace(a @ a @ a)) // 6


def triangle_count_bruteforce(g: Graph) -> int:
    return sum(
        1
        for a, b, c in combinations(range(g.n), 3)
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    )


# ----------------------------------------------------------- canonical form


@dataclass(frozen=True)
class CanonicalForm:
    """``cert`` identifies the isomorphism class; ``relabel(g, perm)`` is the canonical graph."""

    cert: bytes
    perm: Permutation


def refine_partition(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Each round splits every cell by the vector of neighbour counts into the
    current cells; sub-cells are ordered by that vector, so the result
    depends only on the graph structure and the input cell order.
    """
    while True:
        masks = [mask_of(c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((g.adj[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
                continue
            changed = True
            for key in keys:
                out.append([v for v in cell if sig[v] == key])
        cells = out
        if not changed:
            return cells


def _interchangeable(g: Graph, u: int, v: int) -> bool:
    # true twins or false twins: the transposition (u v) is an automorphism
    bu, bv = 1 << u, 1 << v
    return (g.adj[u] | bu) == (g.adj[v] | bv) or (g.adj[u] & ~bv) == (g.adj[v] & ~bu)


def _rows_in_order(g: Graph, order: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        for w in iter_bits(g.adj[v]):
            row |= 1 << (g.n - 1 - pos[w])
        rows.append(row)
    return tuple(rows)


def canonical_form(g: Graph, limit: int = CANONICAL_LIMIT) -> CanonicalForm:
    """Canonical labelling by individualisation-refinement.

    Explores every branch of the refinement tree (pruning only swaps of
    twin vertices, which are automorphisms) and keeps the ordering whose
    adjacency rows are lexicographically largest.
    """
    if g.n > limit:
        raise GraphError(f"canonical form limited to {limit} vertices, got {g.n}")
    if g.n == 0:
        return CanonicalForm(to_graph6(g).encode(), ())
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = refine_partition(g, cells)
        if len(cells) == g.n:
            order = [c[0] for c in cells]
            rows = _rows_in_order(g, order)
            if best[0] is None or rows > best[0]:
                best[0], best[1] = rows, order
            return
        idx = min(
            (i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: len(cells[i])
        )
        target = cells[idx]
        tried: list[int] = []
        for v in target:
            if any(_interchangeable(g, v, t) for t in tried):
                continue
            tried.append(v)
            rest = [u for u in target if u != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1 :])

    degs = degree_sequence(g)
    start = [[v for v in range(g.n) if degs[v] == d] for d in sorted(set(degs))]
    search(start)
    order = best[1]
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    perm_t = tuple(perm)
    return CanonicalForm(to_graph6(relabel(g, perm_t)).encode(), perm_t)


def is_isomorphic(a: Graph, b: Graph) -> Permutation | None:
    """An isomorphism ``a -> b`` as an image tuple, or ``None``."""
    if a.n != b.n or a.num_edges != b.num_edges:
        return None
    if sorted(degree_sequence(a)) != sorted(degree_sequence(b)):
        return None
    ca, cb = canonical_form(a), canonical_form(b)
    if ca.cert != cb.cert:
        return None
    inv_b = [0] * b.n
    for v, p in enumerate(cb.perm):
        inv_b[p] = v
    return tuple(inv_b[ca.perm[v]] for v in range(a.n))


def is_isomorphism(a: Graph, b: Graph, perm: Sequence[int]) -> bool:
    """True iff ``perm`` is a bijection mapping ``a``'s edges exactly onto ``b``'s."""
    if a.n != b.n or len(perm) != a.n or sorted(perm) != list(range(a.n)):
        return False
    return relabel(a, perm).adj == b.adj


# ------------------------------------------------------------ serialisation


def _encode_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError(f"graph6 size {n} not supported")


def to_graph6(g: Graph) -> str:
    """graph6 text (no header, no newline)."""
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k : k + 6]:
            x = (x << 1) | b
        body.append(chr(x + 63))
    return _encode_size(g.n) + "".join(body)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphError("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise GraphError("graph6 characters must lie in '?'..'~'")
    if codes[0] == 63:
        if len(codes) < 4 or codes[1] == 63:
            raise GraphError("unsupported graph6 size prefix")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        body = codes[4:]
    else:
        n = codes[0]
        body = codes[1:]
    if n > MAX_VERTICES:
        raise GraphError(f"{n} vertices exceeds the cap of {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} characters, expected {(nbits + 5) // 6}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise GraphError("nonzero graph6 padding bits")
    return _trusted(n, rows)


def to_json_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def from_json_dict(data: dict) -> Graph:
    try:
        n = int(data["n"])
        edges = data["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed edge-list JSON: {exc}") from exc
    seen = set()
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge {e!r} is not a pair")
        key = (min(e), max(e))
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
    return make_graph(n, edges)


def to_json(g: Graph) -> str:
    return json.dumps(to_json_dict(g))


def from_json(text: str) -> Graph:
    return from_json_dict(json.loads(text))
