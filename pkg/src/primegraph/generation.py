"""Generation sites: vertex sets ``U`` of a minimal prime graph such that a
new vertex adjacent to exactly ``U`` gives another minimal prime graph.

Necessary conditions on ``K = V \\ U``: it is a clique, and some 3-colouring
of the complement uses at most two colours on it.  When ``K`` is moreover a
*maximal* clique the two conditions are sufficient (clique generation).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph, GraphError, attach_vertex, complement, iter_bits, mask_of
from .verify import check_minimal_prime_graph, two_colorable_on

SITE_LIMIT = 20

VD = "VD"
CG = "CG"
BOTH = "both"
OTHER = "other"


@dataclass(frozen=True)
class GenerationSite:
    site: tuple[int, ...]
    complement_set: tuple[int, ...]
    generated: Graph


@dataclass(frozen=True)
class SiteClassification:
    is_vertex_duplication: bool
    is_clique_generation: bool
    duplicated_vertex: int | None = None

    @property
    def kind(self) -> str:
        if self.is_vertex_duplication and self.is_clique_generation:
            return BOTH
        if self.is_vertex_duplication:
            return VD
        if self.is_clique_generation:
            return CG
        return OTHER


def _split(g: Graph, u: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    site = tuple(sorted(set(u)))
    for v in site:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    rest = tuple(v for v in range(g.n) if v not in set(site))
    return site, rest


def _require_minimal(g: Graph) -> None:
    if not check_minimal_prime_graph(g).is_minimal:
        raise GraphError("generation sites are defined for minimal prime graphs")


def is_generation_site(g: Graph, u: Iterable[int], check_base: bool = True) -> bool:
    if check_base:
        _require_minimal(g)
    site, _ = _split(g, u)
    return check_minimal_prime_graph(attach_vertex(g, site)).is_minimal


def all_cliques(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every clique of ``g`` (including the empty one), each exactly once."""

    def grow(clique: tuple[int, ...], cand: int) -> Iterator[tuple[int, ...]]:
        yield clique
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            # only later candidates, so each clique is built in ascending order
            yield from grow(clique + (v,), cand & g.adj[v])

    yield from grow((), g.full_mask)


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Maximal cliques by Bron-Kerbosch with Tomita pivoting, sorted."""
    out: list[tuple[int, ...]] = []

    def bk(r: tuple[int, ...], p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(iter_bits(p | x), key=lambda v: (g.adj[v] & p).bit_count())
        for v in iter_bits(p & ~g.adj[pivot]):
            bk(r + (v,), p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        bk((), g.full_mask, 0)
    return sorted(out)


def is_maximal_clique(g: Graph, k: Iterable[int]) -> bool:
    m = mask_of(k)
    if not m:
        return g.n == 0
    common = g.full_mask
    for v in iter_bits(m):
        if (g.adj[v] | (1 << v)) & m != m:
            return False
        common &= g.adj[v]
    return common == 0


def enumerate_generation_sites(g: Graph, limit: int = SITE_LIMIT) -> list[GenerationSite]:
    """All generation sites, found by trying ``U = V \\ K`` for every clique ``K``."""
    if g.n > limit:
        raise GraphError(f"site enumeration limited to {limit} vertices, got {g.n}")
    _require_minimal(g)
    out = []
    for k in all_cliques(g):
        site, rest = _split(g, set(range(g.n)) - set(k))
        gen = attach_vertex(g, site)
        if check_minimal_prime_graph(gen).is_minimal:
            out.append(GenerationSite(site, rest, gen))
    out.sort(key=lambda s: s.site)
    return out


def brute_force_sites(g: Graph) -> list[tuple[int, ...]]:
    """Sites by testing all ``2^n`` subsets; an oracle for small graphs."""
    out = []
    for m in range(1 << g.n):
        site = tuple(iter_bits(m))
        if check_minimal_prime_graph(attach_vertex(g, site)).is_minimal:
            out.append(site)
    return sorted(out)


def lemma_checks(g: Graph, u: Iterable[int]) -> tuple[bool, bool]:
    """``(K two-colourable in some 3-colouring of the complement, K is a clique)``."""
    _, k = _split(g, u)
    two = two_colorable_on(complement(g), k) is not None
    m = mask_of(k)
    clique = all((g.adj[v] | (1 << v)) & m == m for v in k)
    return two, clique


def clique_generate(g: Graph, k: Iterable[int]) -> Graph:
    """Attach a vertex adjacent to everything outside the maximal clique ``k``."""
    kk = tuple(sorted(set(k)))
    if not is_maximal_clique(g, kk):
        raise GraphError(f"{list(kk)} is not a maximal clique")
    if two_colorable_on(complement(g), kk) is None:
        raise GraphError(f"no 3-colouring of the complement uses two colours on {list(kk)}")
    site, _ = _split(g, set(range(g.n)) - set(kk))
    return attach_vertex(g, site)


def duplication_source(g: Graph, u: Iterable[int]) -> int | None:
    """Least ``v`` with ``N[v] = U``, if any."""
    m = mask_of(u)
    for v in range(g.n):
        if g.closed_neighborhood(v) == m:
            return v
    return None


def classify_site(g: Graph, u: Iterable[int], check_site: bool = True) -> SiteClassification:
    site, k = _split(g, u)
    if check_site and not is_generation_site(g, site):
        raise GraphError(f"{list(site)} is not a generation site")
    src = duplication_source(g, site)
    cg = is_maximal_clique(g, k) and two_colorable_on(complement(g), k) is not None
    return SiteClassification(src is not None, cg, src)
