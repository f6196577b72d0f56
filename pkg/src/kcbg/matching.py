"""Maximum bipartite matching.

Matchings grow from V-vertices in index order and try U-neighbours in index
order, so the result is a deterministic function of the canonical graph.
Vertex deletions are expressed as masks rather than by rebuilding ``G``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from kcbg import kernels
from kcbg.bigraph import BipartiteGraph, Edge


@dataclass(frozen=True)
class Matching:
    pairs: tuple[Edge, ...]

    @property
    def size(self) -> int:
        return len(self.pairs)

    def mate_of_u(self) -> dict[int, int]:
        return {i: j for i, j in self.pairs}

    def mate_of_v(self) -> dict[int, int]:
        return {j: i for i, j in self.pairs}


def _alive(size: int, removed: Iterable[int]) -> list[bool]:
    alive = [True] * size
    for x in removed:
        alive[x] = False
    return alive


def max_matching(G: BipartiteGraph, removed_u: Iterable[int] = (),
                 removed_v: Iterable[int] = ()) -> Matching:
    """Maximum matching of ``G`` minus the given U- and V-vertices."""
    ptr, idx = G.v_csr
    match_v = kernels.impl.masked_matching(
        G.n, G.m, ptr, idx, _alive(G.n, removed_u), _alive(G.m, removed_v))
    return Matching(tuple(sorted((i, j) for j, i in enumerate(match_v) if i >= 0)))


def has_complete_matching(G: BipartiteGraph, removed_u: Iterable[int] = ()) -> bool:
    """True iff ``G - removed_u`` has a matching saturating V."""
    return max_matching(G, removed_u).size == G.m


def hall_violator(G: BipartiteGraph, M: Matching) -> tuple[int, ...] | None:
    """A set ``X`` of V with ``|N(X)| < |X|``, extracted from a maximum matching.

    Collects the V-vertices reachable by alternating paths from the first
    unsaturated V-vertex.  Returns None when ``M`` saturates V.
    """
    mate_v = M.mate_of_v()
    mate_u = M.mate_of_u()
    free = [j for j in range(G.m) if j not in mate_v]
    if not free:
        return None
    reach = {free[0]}
    stack = [free[0]]
    while stack:
        j = stack.pop()
        for i in G.v_adj[j]:
            j2 = mate_u.get(i)
            if j2 is not None and j2 not in reach:
                reach.add(j2)
                stack.append(j2)
    return tuple(sorted(reach))
