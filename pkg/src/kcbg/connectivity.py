"""Vertex connectivity of bipartite graphs and strong connectivity of digraphs.

Local connectivities are computed as the number of internally
vertex-disjoint paths in a unit-capacity vertex-split network (Menger).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from kcbg import kernels
from kcbg.bigraph import BipartiteGraph, Vertex, component_count, degree_stats
from kcbg.errors import (
    AdjacentPair,
    AdjacentPairInS,
    Degenerate,
    NotKCB,
    NotPerfectMatching,
    SameVertex,
    TooFewVertices,
)
from kcbg.matching import Matching

SEPARATOR_CHECK_LIMIT = 16


@dataclass(frozen=True)
class Digraph:
    """Simple digraph on vertices ``0..size-1`` (no loops, no parallel arcs)."""

    size: int
    arcs: tuple[tuple[int, int], ...]
    provenance: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self) -> None:
        clean = set()
        for a, b in self.arcs:
            if not (0 <= a < self.size and 0 <= b < self.size):
                raise ValueError(f"arc ({a}, {b}) out of range for {self.size} vertices")
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            clean.add((a, b))
        object.__setattr__(self, "arcs", tuple(sorted(clean)))

    def csr(self) -> tuple[list[int], list[int]]:
        ptr, idx = [0], []
        out: list[list[int]] = [[] for _ in range(self.size)]
        for a, b in self.arcs:
            out[a].append(b)
        for nbrs in out:
            idx.extend(nbrs)
            ptr.append(len(idx))
        return ptr, idx


def _bipartite_csr(G: BipartiteGraph) -> tuple[list[int], list[int]]:
    """Symmetric out-adjacency over global ids (U first, then V)."""
    ptr, idx = [0], []
    for i in range(G.n):
        idx.extend(G.n + j for j in G.u_adj[i])
        ptr.append(len(idx))
    for j in range(G.m):
        idx.extend(G.v_adj[j])
        ptr.append(len(idx))
    return ptr, idx


def _min_over_pairs(G: BipartiteGraph, pairs: Sequence[tuple[int, int]]) -> tuple[int, int]:
    N = G.n + G.m
    ptr, idx = _bipartite_csr(G)
    sources = [s for s, _ in pairs]
    targets = [t for _, t in pairs]
    value, arg, _ = kernels.impl.min_local_connectivity(N, ptr, idx, sources, targets, N, 1)
    return value, arg


def local_connectivity(G: BipartiteGraph, x: Vertex, y: Vertex) -> int:
    """Size of a smallest vertex cut separating nonadjacent ``x`` and ``y``."""
    if x == y:
        raise SameVertex(f"{x!r} given twice")
    if G.adjacent(x, y):
        raise AdjacentPair(f"{x!r} and {y!r} are adjacent")
    value, _ = _min_over_pairs(G, [(G.vertex_id(x), G.vertex_id(y))])
    return value


def kappa_set(G: BipartiteGraph, S: Iterable[Vertex]) -> int:
    """Minimum local connectivity over pairs of ``S``."""
    S = list(S)
    if len(S) < 2:
        raise TooFewVertices("set connectivity needs at least two vertices")
    pairs = []
    for a, b in combinations(S, 2):
        if a == b:
            raise SameVertex(f"{a!r} repeated in S")
        if G.adjacent(a, b):
            raise AdjacentPairInS(f"{a!r} and {b!r} are adjacent")
        pairs.append((G.vertex_id(a), G.vertex_id(b)))
    return _min_over_pairs(G, pairs)[0]


def kappa_U(G: BipartiteGraph) -> int | None:
    return kappa_set(G, [("u", i) for i in range(G.n)]) if G.n >= 2 else None


def kappa_V(G: BipartiteGraph) -> int | None:
    return kappa_set(G, [("v", j) for j in range(G.m)]) if G.m >= 2 else None


def kappa(G: BipartiteGraph) -> int:
    """Vertex connectivity: minimum local connectivity over nonadjacent pairs."""
    N = G.n + G.m
    pairs = [(a, b) for a in range(N) for b in range(a + 1, N)
             if not G.adjacent(G.vertex_of(a), G.vertex_of(b))]
    if not pairs:
        raise Degenerate("every pair of vertices is adjacent")
    return _min_over_pairs(G, pairs)[0]


def contract_matching(G: BipartiteGraph, M: Matching) -> Digraph:
    """Direct every edge U -> V and contract the edges of a perfect matching.

    Vertex ``i`` of the result stands for the matched pair ``(u_i, M(u_i))``.
    """
    if G.n != G.m:
        raise NotPerfectMatching(f"classes differ in size: ({G.n}, {G.m})")
    mate_u = M.mate_of_u()
    mate_v = M.mate_of_v()
    if (len(mate_u) != G.n or len(mate_v) != G.m or len(M.pairs) != G.n
            or any(not G.has_edge(i, j) for i, j in M.pairs)):
        raise NotPerfectMatching("M is not a perfect matching of G")
    arcs = {(i, mate_v[j]) for i, j in G.edges if mate_u[i] != j}
    return Digraph(G.n, tuple(arcs), tuple(sorted(M.pairs)))


def nonadjacent_ordered_pairs(D: Digraph) -> list[tuple[int, int]]:
    arcset = set(D.arcs)
    return [(s, t) for s in range(D.size) for t in range(D.size)
            if s != t and (s, t) not in arcset]


def strongly_k_connected(D: Digraph, k: int) -> bool:
    """True iff ``D`` has more than ``k`` vertices and stays strongly connected
    after deleting any fewer than ``k`` vertices.

    Every ordered pair ``(s, t)`` without an arc ``s -> t`` must be joined by
    ``k`` internally disjoint directed paths.
    """
    return failing_pair(D, k) is None


def failing_pair(D: Digraph, k: int) -> tuple[int, int] | None:
    """First ordered pair with fewer than ``k`` disjoint paths, if any."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if D.size <= k:
        raise TooFewVertices(f"digraph on {D.size} vertices cannot be strongly {k}-connected")
    pairs = nonadjacent_ordered_pairs(D)
    if not pairs:
        return None
    ptr, idx = D.csr()
    value, arg, _ = kernels.impl.min_local_connectivity(
        D.size, ptr, idx, [s for s, _ in pairs], [t for _, t in pairs], k, k)
    return pairs[arg] if value < k else None


def min_vertex_cut(D: Digraph, s: int, t: int) -> tuple[int, ...]:
    """A minimum set of vertices (excluding ``s``, ``t``) meeting every ``s -> t`` path.

    ``s -> t`` must not be an arc.  Plain augmenting-path max-flow; used
    once per failed fast verification to build a witness, so it is not routed
    through the compiled kernels.
    """
    out: dict[int, list[int]] = {x: [] for x in range(2 * D.size)}
    cap: dict[tuple[int, int], int] = {}

    def add(a: int, b: int, c: int) -> None:
        out[a].append(b)
        out[b].append(a)
        cap[(a, b)] = c
        cap[(b, a)] = 0

    # Arc capacities exceed any flow so the residual cut consists of vertex arcs.
    for w in range(D.size):
        add(2 * w, 2 * w + 1, 1)
    for a, b in D.arcs:
        add(2 * a + 1, 2 * b, D.size)
    src, sink = 2 * s + 1, 2 * t
    while True:
        parent = {src: src}
        queue = [src]
        for x in queue:
            for y in out[x]:
                if y not in parent and cap[(x, y)] > 0:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            break
        y = sink
        while y != src:
            x = parent[y]
            cap[(x, y)] -= 1
            cap[(y, x)] += 1
            y = x
    reach = set(parent)
    return tuple(sorted(w for w in range(D.size)
                        if 2 * w in reach and 2 * w + 1 not in reach and w not in (s, t)))


def reaching(D: Digraph, t: int, removed: Iterable[int]) -> set[int]:
    """Vertices that reach ``t`` in ``D - removed``."""
    gone = set(removed)
    into: dict[int, list[int]] = {x: [] for x in range(D.size)}
    for a, b in D.arcs:
        into[b].append(a)
    seen = {t}
    stack = [t]
    while stack:
        x = stack.pop()
        for y in into[x]:
            if y not in seen and y not in gone:
                seen.add(y)
                stack.append(y)
    return seen


# --- reports ----------------------------------------------------------------

@dataclass
class ConnectivityReport:
    kappa: int
    kappa_U: int | None
    kappa_V: int | None
    delta_U: int
    Delta_U: int
    delta_V: int
    Delta_V: int
    components: int
    kcb: bool | None = None
    bounds: dict[str, bool | None] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "kappa": self.kappa, "kappa_U": self.kappa_U, "kappa_V": self.kappa_V,
            "delta_U": self.delta_U, "Delta_U": self.Delta_U,
            "delta_V": self.delta_V, "Delta_V": self.Delta_V,
            "components": self.components, "kcb": self.kcb, "bounds": dict(self.bounds),
        }


def _masks(G: BipartiteGraph) -> list[int]:
    N = G.n + G.m
    ptr, idx = _bipartite_csr(G)
    masks = []
    for a in range(N):
        mask = 0
        for p in range(ptr[a], ptr[a + 1]):
            mask |= 1 << idx[p]
        masks.append(mask)
    return masks


def _disconnected_after(masks: list[int], alive: int) -> bool:
    if alive == 0:
        return False
    start = alive & -alive
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = masks[low.bit_length() - 1] & alive & ~seen
        seen |= new
        frontier |= new
    return seen != alive


def separator_property(G: BipartiteGraph) -> bool:
    """Every separator ``Z`` with ``|Z| < k`` isolates some U-vertex outside ``Z``.

    Exhaustive over all vertex sets of size below ``k``.
    """
    N, k = G.n + G.m, G.k
    masks = _masks(G)
    full = (1 << N) - 1
    for size in range(k):
        for Z in combinations(range(N), size):
            zmask = 0
            for z in Z:
                zmask |= 1 << z
            if not _disconnected_after(masks, full & ~zmask):
                continue
            if not any(not (zmask >> i) & 1 and masks[i] & ~zmask == 0 for i in range(G.n)):
                return False
    return True


def check_connectivity_bounds(G: BipartiteGraph, *, require_kcb: bool = True) -> ConnectivityReport:
    """Connectivity numbers plus compliance with the k-CB lower bounds.

    Bounds are ``kappa_V >= k``, ``kappa_U >= min(delta_U, k)`` and
    ``kappa >= min(delta, k)``; ``separator`` records whether every small
    separator isolates a U-vertex (only evaluated when ``n + m`` is at most
    ``SEPARATOR_CHECK_LIMIT``, else None).  With ``require_kcb`` a graph that is
    not k-critical-bipartite raises :class:`NotKCB`; otherwise the bounds of
    such a graph are reported as None.
    """
    from kcbg.criticality import is_kcb_fast

    stats = degree_stats(G)
    kcb = is_kcb_fast(G).verdict if G.n > G.m else None
    if require_kcb and not kcb:
        raise NotKCB("graph is not k-critical-bipartite")
    report = ConnectivityReport(
        kappa=kappa(G), kappa_U=kappa_U(G), kappa_V=kappa_V(G),
        delta_U=stats.delta_U, Delta_U=stats.Delta_U,
        delta_V=stats.delta_V, Delta_V=stats.Delta_V,
        components=component_count(G).count, kcb=kcb,
    )
    if kcb:
        k = G.k
        report.bounds = {
            "kappa_V": None if report.kappa_V is None else report.kappa_V >= k,
            "kappa_U": None if report.kappa_U is None else report.kappa_U >= min(stats.delta_U, k),
            "kappa": report.kappa >= min(stats.delta, k),
            "separator": separator_property(G) if G.n + G.m <= SEPARATOR_CHECK_LIMIT else None,
        }
    else:
        report.bounds = {"kappa_V": None, "kappa_U": None, "kappa": None, "separator": None}
    return report
