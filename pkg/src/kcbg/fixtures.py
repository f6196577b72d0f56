"""Five small reference graphs, kept as reproducible fixtures."""
from __future__ import annotations

from typing import Callable

from kcbg.bigraph import BipartiteGraph
from kcbg.constructions import bar_g, ddot_g, dot_g, hat_g

# Order (7, 4); neighbourhoods of v_0..v_3 fixed by hand.  Minimum
# k-critical-bipartite with delta_U = 1 below floor(16/7) = 2.
SMALL_DELTA_NEIGHBORHOODS: tuple[tuple[int, ...], ...] = (
    (0, 1, 2, 4),
    (0, 1, 3, 5),
    (0, 2, 3, 5),
    (1, 2, 4, 6),
)


def small_delta() -> BipartiteGraph:
    edges = [(i, j) for j, nbrs in enumerate(SMALL_DELTA_NEIGHBORHOODS) for i in nbrs]
    return BipartiteGraph(7, 4, tuple(edges))


FIXTURES: dict[str, Callable[[], BipartiteGraph]] = {
    "bar_6_5": lambda: bar_g(6, 5),
    "hat_6_5_2": lambda: hat_g(6, 5, 2),
    "dot_6_5_2": lambda: dot_g(6, 5, 2),
    "ddot_6_5_2": lambda: ddot_g(6, 5, 2),
    "small_delta_7_4": small_delta,
}


def fixture_graph(name: str) -> BipartiteGraph:
    return FIXTURES[name]()
