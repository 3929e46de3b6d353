"""Automorphism groups of small graphs and their twin-class decomposition.

For a graph with true-twin classes ``V_1..V_r`` the automorphisms fixing
every class setwise form a normal subgroup (the twin kernel) isomorphic to
``S_{h_1} x ... x S_{h_r}``; the quotient acts on the classes and embeds in
the automorphism group of the base graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial, prod
from typing import Sequence

from .graph import Graph, GraphError, Permutation, is_isomorphism, refine_partition
from .reseminant import C5, base_graph, build_reseminant, twin_partition

AUT_LIMIT = 16


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """``p`` after ``q``: ``v -> p[q[v]]``."""
    return tuple(p[x] for x in q)


def inverse(p: Sequence[int]) -> Permutation:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def identity(n: int) -> Permutation:
    return tuple(range(n))


def aut_group(g: Graph, limit: int = AUT_LIMIT) -> list[Permutation]:
    """Every automorphism of ``g`` exactly once, in lexicographic order.

    Vertices are mapped in a fixed order; a candidate image must share the
    source's cell in the equitable refinement of the degree partition and
    agree on adjacency with every vertex already mapped.
    """
    if g.n > limit:
        raise GraphError(f"automorphism search limited to {limit} vertices, got {g.n}")
    n = g.n
    degs = [g.degree(v) for v in range(n)]
    cells = refine_partition(g, [[v for v in range(n) if degs[v] == d] for d in sorted(set(degs))])
    cell_mask = [0] * n
    for cell in cells:
        m = 0
        for v in cell:
            m |= 1 << v
        for v in cell:
            cell_mask[v] = m
    image = [-1] * n
    out: list[Permutation] = []
    adj = g.adj

    def extend(v: int, used: int) -> None:
        if v == n:
            out.append(tuple(image))
            return
        cand = cell_mask[v] & ~used
        while cand:
            low = cand & -cand
            x = low.bit_length() - 1
            cand ^= low
            ok = True
            for u in range(v):
                if (adj[v] >> u & 1) != (adj[x] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = x
                extend(v + 1, used | low)
        image[v] = -1

    extend(0, 0)
    return out


def aut_group_bruteforce(g: Graph) -> list[Permutation]:
    """All ``n!`` permutations filtered by edge preservation (small ``n`` only)."""
    return [p for p in permutations(range(g.n)) if is_isomorphism(g, g, p)]


def is_group(perms: Sequence[Permutation]) -> bool:
    if not perms:
        return False
    s = set(perms)
    n = len(perms[0])
    if identity(n) not in s:
        return False
    return all(inverse(p) in s for p in perms) and all(
        compose(p, q) in s for p in perms for q in perms
    )


def _class_action(p: Sequence[int], class_of: Sequence[int], reps: Sequence[int]) -> Permutation:
    return tuple(class_of[p[r]] for r in reps)


def twin_kernel(g: Graph, auts: Sequence[Permutation]) -> list[Permutation]:
    """Automorphisms mapping every true-twin class onto itself."""
    part = twin_partition(g)
    class_of = part.class_of()
    reps = part.representatives
    trivial = identity(len(reps))
    return [p for p in auts if _class_action(p, class_of, reps) == trivial]


def is_normal_subgroup(sub: Sequence[Permutation], group: Sequence[Permutation]) -> bool:
    s = set(sub)
    return all(compose(compose(g, h), inverse(g)) in s for g in group for h in sub)


@dataclass
class AutReport:
    order: int
    kernel_order: int
    quotient_order: int
    class_sizes: tuple[int, ...]
    kernel_matches_twin_product: bool
    quotient_embeds_in_base_aut: bool
    base_aut_order: int
    class_permutations: list[Permutation]

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "kernel_order": self.kernel_order,
            "quotient_order": self.quotient_order,
            "class_sizes": list(self.class_sizes),
            "kernel_matches_twin_product": self.kernel_matches_twin_product,
            "quotient_embeds_in_base_aut": self.quotient_embeds_in_base_aut,
            "base_aut_order": self.base_aut_order,
            "class_permutations": [list(p) for p in self.class_permutations],
        }


def decompose_aut(g: Graph, limit: int = AUT_LIMIT) -> AutReport:
    """Split ``Aut(g)`` into the twin kernel and its action on twin classes.

    The class action of each automorphism, read as a permutation of the base
    graph's vertices (class ``i`` is base vertex ``i``), is checked to be a
    base-graph automorphism; the fibres of that map are the kernel cosets.
    """
    auts = aut_group(g, limit)
    part = twin_partition(g)
    class_of = part.class_of()
    reps = part.representatives
    base = base_graph(g)
    base_auts = set(aut_group(base, limit))

    fibres: dict[Permutation, int] = {}
    for p in auts:
        key = _class_action(p, class_of, reps)
        fibres[key] = fibres.get(key, 0) + 1
    kernel = twin_kernel(g, auts)
    assert is_normal_subgroup(kernel, auts)
    kernel_order = len(kernel)
    quotient = sorted(fibres)
    # cosets of the kernel are exactly the fibres, so each must have kernel size
    cosets_ok = all(c == kernel_order for c in fibres.values())
    embeds = cosets_ok and all(q in base_auts for q in quotient)
    return AutReport(
        order=len(auts),
        kernel_order=kernel_order,
        quotient_order=len(quotient),
        class_sizes=part.sizes,
        kernel_matches_twin_product=kernel_order == prod(factorial(h) for h in part.sizes),
        quotient_embeds_in_base_aut=embeds,
        base_aut_order=len(base_auts),
        class_permutations=quotient,
    )


D5_QUOTIENT = "D5-quotient"
Z2_QUOTIENT = "Z2-quotient"
KERNEL_ONLY = "kernel-only"

EXPECTED_QUOTIENT_ORDER = {D5_QUOTIENT: 10, Z2_QUOTIENT: 2, KERNEL_ONLY: 1}


def c5_reflections() -> list[Permutation]:
    """The five reflections ``i -> (c - i) mod 5`` of the index cycle."""
    return [tuple((c - i) % 5 for i in range(5)) for c in range(5)]


def classify_c5_reseminant_aut(w: Sequence[int]) -> str:
    """Predicted quotient type from the multiplicity vector alone."""
    if len(w) != 5:
        raise GraphError("need a length-5 multiplicity vector")
    if len(set(w)) == 1:
        return D5_QUOTIENT
    if any(all(w[r[i]] == w[i] for i in range(5)) for r in c5_reflections()):
        return Z2_QUOTIENT
    return KERNEL_ONLY


def measure_c5_reseminant_aut(w: Sequence[int], limit: int = AUT_LIMIT) -> AutReport:
    return decompose_aut(build_reseminant(C5, w), limit)


def quotient_has_reflection(report: AutReport) -> bool:
    """Whether some class permutation is an involution with a fixed class
    (a reflection of an odd cycle), separating D5 from Z5 at order 10."""
    for q in report.class_permutations:
        if compose(q, q) == identity(len(q)) and q != identity(len(q)):
            if any(q[i] == i for i in range(len(q))):
                return True
    return False
