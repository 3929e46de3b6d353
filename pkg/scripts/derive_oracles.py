"""Recompute the frozen reference values used by the test suite.

Everything here is deliberately naive: 3-colourings by enumerating all 3^n
assignments, triangles by enumerating vertex triples, automorphisms by
filtering all n! permutations.  None of the library's search routines are
used, so the numbers are an independent check.  Slow (the 10! permutation
filter takes over a minute); run once and commit the JSON.

    python3 scripts/derive_oracles.py [--out tests/data/derived_oracles.json]
"""

from __future__ import annotations

import argparse
import json
import time
from itertools import combinations, permutations, product
from pathlib import Path

from primegraph.catalog import fixture_graph
from primegraph.graph import Graph, attach_vertex, complete_graph, cycle_graph, path_graph
from primegraph.products import strong_product
from primegraph.reseminant import build_reseminant


def edge_set(g: Graph) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edges()}


def complement_edges(n: int, edges: set[frozenset[int]]) -> set[frozenset[int]]:
    return {frozenset(p) for p in combinations(range(n), 2)} - edges


def triangles(n: int, edges: set[frozenset[int]]) -> int:
    return sum(
        1
        for a, b, c in combinations(range(n), 3)
        if {frozenset((a, b)), frozenset((a, c)), frozenset((b, c))} <= edges
    )


def three_colorable(n: int, edges: set[frozenset[int]]) -> bool:
    pairs = [tuple(e) for e in edges]
    return any(all(c[u] != c[v] for u, v in pairs) for c in product(range(3), repeat=n))


def connected(n: int, edges: set[frozenset[int]]) -> bool:
    seen, stack = {0}, [0]
    while stack:
        u = stack.pop()
        for e in edges:
            if u in e:
                (v,) = e - {u}
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return len(seen) == n


def minimal(n: int, edges: set[frozenset[int]]) -> bool:
    if n < 2 or not connected(n, edges):
        return False
    comp = complement_edges(n, edges)
    if triangles(n, comp) or not three_colorable(n, comp):
        return False
    for e in edges:
        h = comp | {e}
        if not triangles(n, h) and three_colorable(n, h):
            return False
    return True


def automorphism_count(n: int, edges: set[frozenset[int]]) -> int:
    pairs = [tuple(e) for e in edges]
    return sum(
        1 for p in permutations(range(n)) if all(frozenset((p[u], p[v])) in edges for u, v in pairs)
    )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--out", default="tests/data/derived_oracles.json")
    args = parser.parse_args()
    t0 = time.time()
    c5 = cycle_graph(5)
    fig1 = fixture_graph("FIG1_8")
    fig2 = fixture_graph("FIG2_6")
    k2c5 = strong_product(complete_graph(2), c5)
    w_mixed = (2, 1, 0, 0, 1)
    mixed = build_reseminant(c5, w_mixed)

    c5_sites = [
        list(site)
        for r in range(6)
        for site in combinations(range(5), r)
        if minimal(6, edge_set(attach_vertex(c5, site)))
    ]
    p4 = path_graph(4)
    p4_comp = complement_edges(4, edge_set(p4))
    p4_addable = [
        sorted(e)
        for e in complement_edges(4, p4_comp)
        if not triangles(4, p4_comp | {e}) and three_colorable(4, p4_comp | {e})
    ]
    out = {
        "fig1_8_triangle_count": triangles(8, edge_set(fig1)),
        "fig1_8_complement_triangle_count": triangles(8, complement_edges(8, edge_set(fig1))),
        "c5_generation_sites": c5_sites,
        "c5_minus_vertex_minimal": minimal(4, edge_set(p4)),
        "p4_complement_addable_edges": sorted(p4_addable),
        "aut_order_c5": automorphism_count(5, edge_set(c5)),
        "aut_order_fig2_6": automorphism_count(6, edge_set(fig2)),
        "aut_order_k2_strong_c5": automorphism_count(10, edge_set(k2c5)),
        "aut_order_w_2_1_0_0_1": automorphism_count(mixed.n, edge_set(mixed)),
        "fig2_6_degrees": [sum(1 for e in edge_set(fig2) if v in e) for v in range(6)],
    }
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    Path(args.out).write_text(json.dumps(out, indent=1) + "\n")
    print(json.dumps(out, indent=1))
    print(f"done in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
