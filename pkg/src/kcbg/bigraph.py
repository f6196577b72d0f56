"""Bipartite graph value type, degree statistics and serialization.

Vertices of the larger class ``U`` are indexed ``0..n-1`` and vertices of
``V`` are indexed ``0..m-1``.  Where a single vertex has to be named across
both classes it is written as a tuple ``("u", i)`` or ``("v", j)``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Literal, Mapping, NamedTuple

from kcbg.errors import (
    DuplicateEdge,
    IndexOutOfRange,
    NotSurplus,
    OrderMismatch,
    ParseError,
)

Edge = tuple[int, int]
Vertex = tuple[str, int]
Format = Literal["edgelist", "dot", "json"]

FORMATS: tuple[str, ...] = ("edgelist", "dot", "json")


def _check_edges(n: int, m: int, edges: Iterable[Edge], lenient: bool) -> tuple[Edge, ...]:
    seen: set[Edge] = set()
    for e in edges:
        i, j = int(e[0]), int(e[1])
        if not (0 <= i < n and 0 <= j < m):
            raise IndexOutOfRange(f"edge ({i}, {j}) outside order ({n}, {m})")
        if (i, j) in seen and not lenient:
            raise DuplicateEdge(f"edge ({i}, {j}) listed twice")
        seen.add((i, j))
    return tuple(sorted(seen))


@dataclass(frozen=True)
class BipartiteGraph:
    """Immutable bipartite graph ``G = (U, V; E)`` of order ``(n, m)``.

    Edges are stored in canonical (lexicographic) order; two graphs compare
    equal iff they have the same order and the same edge set.  ``labels`` is
    display metadata keyed by ``"u<i>"`` / ``"v<j>"`` and does not take part
    in equality.
    """

    n: int
    m: int
    edges: tuple[Edge, ...] = ()
    labels: Mapping[str, str] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise IndexOutOfRange(f"order ({self.n}, {self.m}) must have n >= 1 and m >= 1")
        object.__setattr__(self, "edges", _check_edges(self.n, self.m, self.edges, lenient=False))
        object.__setattr__(self, "labels", dict(self.labels))

    @property
    def k(self) -> int:
        return self.n - self.m

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def u_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def v_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.m)]
        for i, j in self.edges:
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def v_csr(self) -> tuple[list[int], list[int]]:
        """V-side adjacency in CSR form ``(ptr, idx)`` as consumed by the kernels."""
        ptr = [0]
        idx: list[int] = []
        for nbrs in self.v_adj:
            idx.extend(nbrs)
            ptr.append(len(idx))
        return ptr, idx

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edge_set

    def u_degrees(self) -> list[int]:
        return [len(a) for a in self.u_adj]

    def v_degrees(self) -> list[int]:
        return [len(a) for a in self.v_adj]

    def neighbors(self, vertex: Vertex) -> list[Vertex]:
        side, x = vertex
        if side == "u":
            return [("v", j) for j in self.u_adj[x]]
        return [("u", i) for i in self.v_adj[x]]

    def vertices(self) -> list[Vertex]:
        return [("u", i) for i in range(self.n)] + [("v", j) for j in range(self.m)]

    def vertex_id(self, vertex: Vertex) -> int:
        """Global index: ``u_i -> i`` and ``v_j -> n + j``."""
        side, x = vertex
        if side == "u" and 0 <= x < self.n:
            return x
        if side == "v" and 0 <= x < self.m:
            return self.n + x
        raise IndexOutOfRange(f"vertex {vertex!r} not in graph of order ({self.n}, {self.m})")

    def vertex_of(self, gid: int) -> Vertex:
        return ("u", gid) if gid < self.n else ("v", gid - self.n)

    def adjacent(self, a: Vertex, b: Vertex) -> bool:
        if a[0] == b[0]:
            return False
        i, j = (a[1], b[1]) if a[0] == "u" else (b[1], a[1])
        return self.has_edge(i, j)

    def without_edge(self, edge: Edge) -> BipartiteGraph:
        return BipartiteGraph(self.n, self.m, tuple(e for e in self.edges if e != edge))

    def __repr__(self) -> str:
        return f"BipartiteGraph(n={self.n}, m={self.m}, |E|={len(self.edges)})"


def new_graph(n: int, m: int, edges: Iterable[Edge], *, lenient: bool = False,
              labels: Mapping[str, str] | None = None) -> BipartiteGraph:
    """Validate and canonicalize an edge list into a graph.

    Duplicate edges raise :class:`DuplicateEdge` unless ``lenient`` is set,
    in which case they are silently merged.
    """
    if n < 1 or m < 1:
        raise IndexOutOfRange(f"order ({n}, {m}) must have n >= 1 and m >= 1")
    return BipartiteGraph(n, m, _check_edges(n, m, edges, lenient), labels or {})


def complete_bipartite(n: int, m: int) -> BipartiteGraph:
    return BipartiteGraph(n, m, tuple((i, j) for i in range(n) for j in range(m)))


class DegreeStats(NamedTuple):
    delta_U: int
    Delta_U: int
    delta_V: int
    Delta_V: int
    edge_count: int

    @property
    def delta(self) -> int:
        return min(self.delta_U, self.delta_V)


def degree_stats(G: BipartiteGraph) -> DegreeStats:
    du, dv = G.u_degrees(), G.v_degrees()
    return DegreeStats(min(du), max(du), min(dv), max(dv), G.edge_count)


def build_tilde(G: BipartiteGraph) -> BipartiteGraph:
    """Return the augmented graph with ``k`` new V-vertices joined to all of U.

    The new vertices get indices ``m .. m+k-1`` so the result has order
    ``(n, n)``.
    """
    if G.n <= G.m:
        raise NotSurplus(f"build_tilde needs n > m, got ({G.n}, {G.m})")
    extra = [(i, j) for j in range(G.m, G.n) for i in range(G.n)]
    return BipartiteGraph(G.n, G.n, G.edges + tuple(extra))


class Components(NamedTuple):
    count: int
    labels: dict[Vertex, int]


def component_count(G: BipartiteGraph) -> Components:
    """Count connected components.

    Components are numbered in order of their first vertex in the sequence
    ``u_0..u_{n-1}, v_0..v_{m-1}``.
    """
    labels: dict[Vertex, int] = {}
    count = 0
    for start in G.vertices():
        if start in labels:
            continue
        labels[start] = count
        stack = [start]
        while stack:
            x = stack.pop()
            for y in G.neighbors(x):
                if y not in labels:
                    labels[y] = count
                    stack.append(y)
        count += 1
    return Components(count, labels)


def is_connected(G: BipartiteGraph) -> bool:
    return component_count(G).count == 1


def is_subgraph(G1: BipartiteGraph, G2: BipartiteGraph) -> bool:
    if (G1.n, G1.m) != (G2.n, G2.m):
        raise OrderMismatch(f"orders differ: ({G1.n}, {G1.m}) vs ({G2.n}, {G2.m})")
    return G1.edge_set <= G2.edge_set


# --- serialization --------------------------------------------------------

def serialize(G: BipartiteGraph, fmt: Format = "edgelist") -> str:
    if fmt == "edgelist":
        lines = [f"{G.n} {G.m}"] + [f"{i} {j}" for i, j in G.edges]
        return "\n".join(lines) + "\n"
    if fmt == "dot":
        return _to_dot(G)
    if fmt == "json":
        obj: dict = {"n": G.n, "m": G.m, "edges": [[i, j] for i, j in G.edges]}
        if G.labels:
            obj["labels"] = dict(sorted(G.labels.items()))
        return json.dumps(obj) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def parse(text: str, fmt: Format = "edgelist", *, lenient: bool = False) -> BipartiteGraph:
    if fmt == "edgelist":
        return _parse_edgelist(text, lenient)
    if fmt == "dot":
        return _parse_dot(text, lenient)
    if fmt == "json":
        return _parse_json(text, lenient)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _parse_edgelist(text: str, lenient: bool) -> BipartiteGraph:
    order: tuple[int, int] | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {raw!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {raw!r}", lineno) from None
        if order is None:
            if a < 1 or b < 1:
                raise ParseError(f"order ({a}, {b}) must be positive", lineno)
            order = (a, b)
            continue
        n, m = order
        if not (0 <= a < n and 0 <= b < m):
            raise ParseError(f"edge ({a}, {b}) outside order ({n}, {m})", lineno)
        if (a, b) in seen:
            if not lenient:
                raise ParseError(f"duplicate edge ({a}, {b})", lineno)
            continue
        seen.add((a, b))
        edges.append((a, b))
    if order is None:
        raise ParseError("missing 'n m' header line")
    return BipartiteGraph(order[0], order[1], tuple(edges))


def _dot_id(side: str, x: int) -> str:
    return f"{side}{x}"


def _to_dot(G: BipartiteGraph) -> str:
    out = ["graph G {", "  rankdir=LR;"]
    for side, size in (("u", G.n), ("v", G.m)):
        nodes = []
        for x in range(size):
            name = _dot_id(side, x)
            label = G.labels.get(name)
            nodes.append(f"{name} [label={json.dumps(label)}];" if label is not None else f"{name};")
        out.append(f"  subgraph cluster_{side.upper()} {{ rank=same; {' '.join(nodes)} }}")
    out.extend(f"  u{i} -- v{j};" for i, j in G.edges)
    out.append("}")
    return "\n".join(out) + "\n"


_DOT_NODE = re.compile(r'\b([uv])(\d+)\b(?:\s*\[label=("(?:[^"\\]|\\.)*")\])?')
_DOT_EDGE = re.compile(r"^\s*([uv])(\d+)\s*--\s*([uv])(\d+)\s*;?\s*$")
_DOT_CLUSTER = re.compile(r"subgraph\s+cluster_([UV])\s*\{(.*)\}")


def _parse_dot(text: str, lenient: bool) -> BipartiteGraph:
    declared: dict[str, set[int]] = {"u": set(), "v": set()}
    labels: dict[str, str] = {}
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("//", 1)[0].strip()
        if not line or line in ("}", "rankdir=LR;") or line.startswith("graph "):
            continue
        cluster = _DOT_CLUSTER.search(line)
        if cluster:
            side = cluster.group(1).lower()
            body = cluster.group(2).replace("rank=same;", "")
            for match in _DOT_NODE.finditer(body):
                if match.group(1) != side:
                    raise ParseError(f"node {match.group(0)!r} in wrong class", lineno)
                declared[side].add(int(match.group(2)))
                if match.group(3) is not None:
                    labels[f"{side}{match.group(2)}"] = json.loads(match.group(3))
            continue
        edge = _DOT_EDGE.match(line)
        if not edge:
            raise ParseError(f"unrecognized DOT statement {raw.strip()!r}", lineno)
        s1, x1, s2, x2 = edge.group(1), int(edge.group(2)), edge.group(3), int(edge.group(4))
        if s1 == s2:
            raise ParseError("edge joins two vertices of the same class", lineno)
        e = (x1, x2) if s1 == "u" else (x2, x1)
        if e in seen:
            if not lenient:
                raise ParseError(f"duplicate edge {e}", lineno)
            continue
        seen.add(e)
        edges.append(e)
    n, m = len(declared["u"]), len(declared["v"])
    if declared["u"] != set(range(n)) or declared["v"] != set(range(m)):
        raise ParseError("node declarations must be contiguous u0..u<n-1>, v0..v<m-1>")
    try:
        return BipartiteGraph(n, m, tuple(edges), labels)
    except IndexOutOfRange as exc:
        raise ParseError(str(exc)) from exc


def _parse_json(text: str, lenient: bool) -> BipartiteGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from exc
    if not isinstance(obj, dict) or not {"n", "m", "edges"} <= obj.keys():
        raise ParseError("JSON graph needs fields n, m, edges")
    try:
        return new_graph(obj["n"], obj["m"], [tuple(e) for e in obj["edges"]],
                         lenient=lenient, labels=obj.get("labels"))
    except (IndexOutOfRange, DuplicateEdge, TypeError) as exc:
        raise ParseError(str(exc)) from exc


def format_for_path(path: str) -> Format:
    if path.endswith(".json"):
        return "json"
    if path.endswith(".dot") or path.endswith(".gv"):
        return "dot"
    return "edgelist"
