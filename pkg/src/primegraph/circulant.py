"""The circulant family ``G(n, k)``: edges at cyclic distances ``k..2k-1``.

In the regime ``n = 0, 5 (mod 6)``, ``k = floor((n + 2) / 6)`` the
complement of ``G(n, k)`` is a minimal prime graph with no true twins.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import Coloring, chromatic_number, is_proper_coloring
from .graph import Graph, GraphError, complement, delete_vertex, make_graph
from .verify import MinimalityReport, check_minimal_prime_graph


@dataclass(frozen=True)
class CirculantSpec:
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 1:
            raise GraphError("circulant parameters need n >= 1 and k >= 1")

    @classmethod
    def from_n(cls, n: int) -> CirculantSpec:
        return cls(n, (n + 2) // 6)

    @property
    def diffset(self) -> range:
        return range(self.k, 2 * self.k)

    @property
    def in_family_regime(self) -> bool:
        return self.n >= 5 and self.n % 6 in (0, 5) and self.k == (self.n + 2) // 6


def g_circulant(spec: CirculantSpec) -> Graph:
    n = spec.n
    edges = set()
    for i in range(n):
        for d in spec.diffset:
            j = (i + d) % n
            if j != i:
                edges.add((min(i, j), max(i, j)))
    return make_graph(n, sorted(edges))


def _require_regime(spec: CirculantSpec) -> None:
    if not spec.in_family_regime:
        raise GraphError(
            f"(n={spec.n}, k={spec.k}) needs n >= 5, n = 0 or 5 mod 6 and k = floor((n+2)/6)"
        )


def block_coloring(spec: CirculantSpec) -> Coloring:
    """Colour ``v`` by ``floor(v / k) mod 3``: six blocks of ``k`` consecutive
    vertices, the last one a vertex short when ``n = 6k - 1``."""
    _require_regime(spec)
    colors = tuple((v // spec.k) % 3 for v in range(spec.n))
    col = Coloring(colors, 3)
    assert is_proper_coloring(g_circulant(spec), colors, 3)
    return col


lemma33_coloring = block_coloring


def family_mpg_check(spec: CirculantSpec) -> MinimalityReport:
    _require_regime(spec)
    return check_minimal_prime_graph(complement(g_circulant(spec)))


def proof_chords(spec: CirculantSpec) -> list[int]:
    """Chord lengths ``m`` with ``1 <= m < k`` or ``2k <= m <= 3k``; adding
    ``{0, m}`` to ``G(n, k)`` is claimed to close a triangle."""
    k = spec.k
    return [m for m in list(range(1, k)) + list(range(2 * k, 3 * k + 1)) if m < spec.n]


def chord_closes_triangle(g: Graph, m: int) -> bool:
    """Whether ``0`` and ``m`` already share a neighbour in ``g``."""
    return bool(g.adj[0] & g.adj[m])


def has_chromatic_number_three(spec: CirculantSpec) -> bool:
    """Optional check: the family is believed to need exactly three colours."""
    return chromatic_number(g_circulant(spec), limit=10**6) == 3


@dataclass
class SuperBaseReport:
    is_super_base: bool
    deletions: dict[int, MinimalityReport] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "is_super_base": self.is_super_base,
            "deletions": {
                str(v): {"is_minimal": r.is_minimal, "reason": r.reason}
                for v, r in self.deletions.items()
            },
        }


def super_base_report(g: Graph, require_minimal: bool = True) -> SuperBaseReport:
    """Check every single-vertex deletion of ``g`` for minimality."""
    if require_minimal and not check_minimal_prime_graph(g).is_minimal:
        raise GraphError("super-base check needs a minimal prime graph")
    reports = {v: check_minimal_prime_graph(delete_vertex(g, v)) for v in range(g.n)}
    return SuperBaseReport(not any(r.is_minimal for r in reports.values()), reports)


def is_super_base(g: Graph) -> bool:
    return super_base_report(g).is_super_base
