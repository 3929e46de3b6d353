"""Construction and verification of minimal prime graphs of solvable groups."""

from .coloring import Coloring, chromatic_number, find_3_coloring
from .graph import (
    Graph,
    GraphError,
    canonical_form,
    complement,
    cycle_graph,
    from_graph6,
    is_isomorphic,
    make_graph,
    to_graph6,
)
from .verify import (
    MinimalityReport,
    addable_edges,
    check_minimal_prime_graph,
    is_solvable_prime_graph,
)

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "Graph",
    "GraphError",
    "MinimalityReport",
    "addable_edges",
    "canonical_form",
    "check_minimal_prime_graph",
    "chromatic_number",
    "complement",
    "cycle_graph",
    "find_3_coloring",
    "from_graph6",
    "is_isomorphic",
    "is_solvable_prime_graph",
    "make_graph",
    "to_graph6",
]
