"""Exact vertex colouring by backtracking with forward checking.

Domains are small bitmasks over the palette.  The next vertex is the one
with the fewest remaining colours (ties: higher degree, then lower index),
and a vertex may only open the next unused colour, which removes the
palette-permutation symmetry when no domain is pre-restricted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .graph import Graph, GraphError, iter_bits

CHROMATIC_LIMIT = 32


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    palette: int

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.palette)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out


def is_proper_coloring(g: Graph, colors: Sequence[int], palette: int | None = None) -> bool:
    if len(colors) != g.n:
        return False
    if palette is not None and any(not 0 <= c < palette for c in colors):
        return False
    return all(colors[u] != colors[v] for u, v in g.edges())


def find_coloring(
    g: Graph,
    k: int,
    allowed: Mapping[int, int] | None = None,
) -> Coloring | None:
    """A proper colouring with colours ``0..k-1``, or ``None`` if none exists.

    ``allowed`` optionally maps a vertex to a bitmask of permitted colours.
    The search is deterministic for fixed input.
    """
    n = g.n
    if n == 0:
        return Coloring((), 0)
    if k <= 0:
        return None
    full = (1 << k) - 1
    domain = [full] * n
    restricted = False
    if allowed:
        restricted = True
        for v, m in allowed.items():
            domain[v] &= m
            if not domain[v]:
                return None
    color = [-1] * n
    degree = [row.bit_count() for row in g.adj]
    adj = g.adj

    def pick() -> int:
        best = -1
        best_key = None
        for v in range(n):
            if color[v] >= 0:
                continue
            key = (domain[v].bit_count(), -degree[v])
            if best_key is None or key < best_key:
                best, best_key = v, key
                if key[0] <= 1:
                    break
        return best

    def solve(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        options = domain[v]
        if not restricted:
            # only reuse an open colour or open the lowest new one
            options &= (1 << (used + 1)) - 1
        for c in iter_bits(options):
            bit = 1 << c
            changed = []
            ok = True
            for u in iter_bits(adj[v]):
                if color[u] < 0 and domain[u] & bit:
                    domain[u] &= ~bit
                    changed.append(u)
                    if not domain[u]:
                        ok = False
                        break
            if ok:
                color[v] = c
                if solve(colored + 1, max(used, c + 1)):
                    return True
                color[v] = -1
            for u in changed:
                domain[u] |= bit
        return False

    if not solve(0, 0):
        return None
    return Coloring(tuple(color), max(color) + 1)


def find_3_coloring(g: Graph) -> Coloring | None:
    return find_coloring(g, 3)


def greedy_clique(g: Graph) -> list[int]:
    """A maximal clique grown greedily from high-degree vertices."""
    best: list[int] = []
    for start in sorted(range(g.n), key=lambda v: (-g.degree(v), v)):
        clique = [start]
        cand = g.adj[start]
        while cand:
            v = max(iter_bits(cand), key=lambda u: ((g.adj[u] & cand).bit_count(), -u))
            clique.append(v)
            cand &= g.adj[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def greedy_coloring(g: Graph) -> Coloring:
    """DSATUR-style greedy colouring; an upper bound for the chromatic number."""
    n = g.n
    color = [-1] * n
    seen = [0] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if color[u] < 0),
            key=lambda u: (seen[u].bit_count(), g.degree(u), -u),
        )
        c = 0
        while seen[v] >> c & 1:
            c += 1
        color[v] = c
        for u in iter_bits(g.adj[v]):
            seen[u] |= 1 << c
    return Coloring(tuple(color), max(color, default=-1) + 1)


def chromatic_number(g: Graph, limit: int = CHROMATIC_LIMIT) -> int:
    """Exact chromatic number: greedy clique lower bound, greedy upper bound,
    and a decision search for every palette size in between."""
    return optimal_coloring(g, limit).palette


def optimal_coloring(g: Graph, limit: int = CHROMATIC_LIMIT) -> Coloring:
    if g.n > limit:
        raise GraphError(f"chromatic number limited to {limit} vertices, got {g.n}")
    if g.n == 0:
        return Coloring((), 0)
    upper = greedy_coloring(g)
    lower = len(greedy_clique(g))
    for k in range(lower, upper.palette):
        found = find_coloring(g, k)
        if found is not None:
            return found
    return upper
