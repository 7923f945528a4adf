"""Small named instances used by the demos and the test suite."""

from __future__ import annotations

from .divisors import Divisor
from .graph import MultiGraph
from .morphism import FiniteMorphism

EXAMPLE_LABELS = list("abcdefg")

# Firing three chips from `a` sweeps searchers across this graph with four
# searchers; its divisorial gonality is 3.  Note the parallel pair e-f.
EXAMPLE_EDGES = [
    ("a", "b"), ("a", "c"), ("b", "d"), ("b", "e"),
    ("b", "f"), ("c", "g"), ("e", "f"), ("e", "f"), ("f", "g"),
]


def example_graph() -> MultiGraph:
    """7-vertex graph (labels a..g) with divisorial gonality 3."""
    index = {name: i for i, name in enumerate(EXAMPLE_LABELS)}
    edges = [(index[u], index[v]) for u, v in EXAMPLE_EDGES]
    return MultiGraph(7, edges, labels=EXAMPLE_LABELS)


def example_divisor(g: MultiGraph | None = None) -> Divisor:
    """Three chips on vertex a."""
    g = g or example_graph()
    return Divisor.single(g.n, g.vertex_index("a"), 3)


def path_graph(n: int) -> MultiGraph:
    return MultiGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> MultiGraph:
    return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def banana_graph(m: int) -> MultiGraph:
    """Two vertices joined by m parallel edges."""
    return MultiGraph(2, [(0, 1)] * m)


def c4_to_p3_morphism() -> tuple[MultiGraph, MultiGraph, FiniteMorphism]:
    """Fold the 4-cycle a-b-c-d onto a 3-vertex path; degree 2, all indices 1."""
    g = MultiGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)], labels=list("abcd"))
    t = path_graph(3)
    # g.edge_list is sorted: (0,1), (0,3), (1,2), (2,3)
    f = FiniteMorphism(
        vertex_map=(0, 1, 2, 1),
        edge_map=(0, 0, 1, 1),
        index=(1, 1, 1, 1),
    )
    return g, t, f
