import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kcbg.bigraph import BipartiteGraph, build_tilde, complete_bipartite
from kcbg.connectivity import (
    Digraph,
    check_connectivity_bounds,
    contract_matching,
    kappa,
    kappa_set,
    kappa_U,
    kappa_V,
    local_connectivity,
    min_vertex_cut,
    reaching,
    separator_property,
    strongly_k_connected,
)
from kcbg.constructions import bar_g, check_g, ddot_g, kappa_tuned, star_g
from kcbg.errors import (
    AdjacentPair,
    AdjacentPairInS,
    Degenerate,
    NotKCB,
    NotPerfectMatching,
    SameVertex,
    TooFewVertices,
)
from kcbg.fixtures import small_delta
from kcbg.matching import Matching, max_matching

from conftest import random_bigraph


# --- oracles -----------------------------------------------------------------

def _undirected_adj(G):
    adj = {("u", i): {("v", j) for j in G.u_adj[i]} for i in range(G.n)}
    adj.update({("v", j): {("u", i) for i in G.v_adj[j]} for j in range(G.m)})
    return adj


def _reach(adj, start, gone):
    seen, stack = {start}, [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen and y not in gone:
                seen.add(y)
                stack.append(y)
    return seen


def oracle_local(G, x, y):
    """Smallest vertex set avoiding x, y whose removal separates them."""
    adj = _undirected_adj(G)
    others = [w for w in adj if w not in (x, y)]
    for size in range(len(others) + 1):
        for Z in combinations(others, size):
            if y not in _reach(adj, x, set(Z)):
                return size


def oracle_strong(D, k):
    """Delete every vertex set of size below k and test strong connectivity."""
    if D.size <= k:
        return False
    out = {x: set() for x in range(D.size)}
    inn = {x: set() for x in range(D.size)}
    for a, b in D.arcs:
        out[a].add(b)
        inn[b].add(a)
    for size in range(k):
        for X in combinations(range(D.size), size):
            alive = [x for x in range(D.size) if x not in X]
            gone = set(X)
            if len(_reach(out, alive[0], gone)) != len(alive):
                return False
            if len(_reach(inn, alive[0], gone)) != len(alive):
                return False
    return True


def random_digraph(rng, size, p):
    arcs = [(a, b) for a in range(size) for b in range(size) if a != b and rng.random() < p]
    return Digraph(size, tuple(arcs))


def directed_cycle(size):
    return Digraph(size, tuple((i, (i + 1) % size) for i in range(size)))


# --- examples ------------------------------------------------------------------

def test_local_connectivity_examples():
    assert local_connectivity(bar_g(6, 5), ("u", 0), ("u", 3)) == 1
    assert local_connectivity(complete_bipartite(3, 2), ("u", 0), ("u", 1)) == 2
    assert local_connectivity(ddot_g(6, 5, 2), ("u", 0), ("u", 2)) == 0


def test_local_connectivity_errors():
    G = bar_g(6, 5)
    with pytest.raises(SameVertex):
        local_connectivity(G, ("u", 1), ("u", 1))
    with pytest.raises(AdjacentPair):
        local_connectivity(G, ("u", 0), ("v", 0))


def test_kappa_examples():
    G = bar_g(6, 5)
    assert kappa_V(G) == kappa_U(G) == kappa(G) == 1
    assert kappa_V(complete_bipartite(5, 3)) == 5
    assert kappa_U(complete_bipartite(5, 3)) == 3
    assert kappa(complete_bipartite(5, 3)) == 3
    assert kappa(kappa_tuned(6, 4, 2)) == 2
    assert kappa(check_g(6, 4)) == 0
    with pytest.raises(Degenerate):
        kappa(complete_bipartite(1, 1))
    with pytest.raises(AdjacentPairInS):
        kappa_set(G, [("u", 0), ("v", 0)])
    with pytest.raises(TooFewVertices):
        kappa_set(G, [("u", 0)])
    assert kappa_V(BipartiteGraph(3, 1, ((0, 0),))) is None


def test_contract_examples():
    T = build_tilde(bar_g(6, 5))
    D = contract_matching(T, max_matching(T))
    assert D.size == 6 and strongly_k_connected(D, 1)
    K = complete_bipartite(2, 2)
    D = contract_matching(K, Matching(((0, 0), (1, 1))))
    assert D.arcs == ((0, 1), (1, 0))
    with pytest.raises(NotPerfectMatching):
        contract_matching(complete_bipartite(3, 2), max_matching(complete_bipartite(3, 2)))
    with pytest.raises(NotPerfectMatching):
        contract_matching(K, Matching(((0, 0),)))


def test_contract_has_no_loops_and_provenance():
    T = build_tilde(bar_g(9, 5))
    M = max_matching(T)
    D = contract_matching(T, M)
    assert all(a != b for a, b in D.arcs)
    assert D.provenance == M.pairs


def test_strong_examples():
    assert strongly_k_connected(directed_cycle(6), 1)
    assert not strongly_k_connected(directed_cycle(6), 2)
    with pytest.raises(TooFewVertices):
        strongly_k_connected(directed_cycle(3), 3)
    T = build_tilde(bar_g(8, 5))
    assert strongly_k_connected(contract_matching(T, max_matching(T)), 3)


def test_digraph_rejects_loops():
    with pytest.raises(ValueError):
        Digraph(3, ((1, 1),))


def test_bounds_reports():
    r = check_connectivity_bounds(bar_g(6, 5))
    assert (r.kappa, r.kappa_U, r.kappa_V) == (1, 1, 1)
    assert all(r.bounds.values())
    r = check_connectivity_bounds(star_g(6, 5))
    assert all(r.bounds.values())
    r = check_connectivity_bounds(small_delta())
    assert all(r.bounds.values())
    r = check_connectivity_bounds(complete_bipartite(6, 4))
    assert (r.kappa, r.kappa_U, r.kappa_V) == (4, 4, 6)
    with pytest.raises(NotKCB):
        check_connectivity_bounds(ddot_g(6, 5, 2))
    r = check_connectivity_bounds(ddot_g(6, 5, 2), require_kcb=False)
    assert r.kcb is False and r.components == 3


# --- oracle cross-checks -------------------------------------------------------

def test_local_connectivity_matches_exhaustive(backend):
    rng = random.Random(3)
    checked = 0
    for _ in range(60):
        n = rng.randint(2, 7)
        m = rng.randint(1, min(12 - n, 6))
        G = random_bigraph(rng, n, m, rng.choice((0.3, 0.5, 0.7)))
        verts = G.vertices()
        pairs = [(a, b) for a, b in combinations(verts, 2) if not G.adjacent(a, b)]
        for a, b in rng.sample(pairs, min(6, len(pairs))):
            assert local_connectivity(G, a, b) == oracle_local(G, a, b)
            checked += 1
    assert checked > 200


def test_strong_connectivity_matches_deletion(backend):
    rng = random.Random(4)
    for _ in range(150):
        size = rng.randint(2, 8)
        D = random_digraph(rng, size, rng.choice((0.3, 0.5, 0.8)))
        for k in range(1, size):
            assert strongly_k_connected(D, k) == oracle_strong(D, k), (D, k)


def test_min_vertex_cut_separates():
    rng = random.Random(6)
    for _ in range(100):
        D = random_digraph(rng, rng.randint(3, 8), 0.4)
        arcset = set(D.arcs)
        for s in range(D.size):
            for t in range(D.size):
                if s == t or (s, t) in arcset:
                    continue
                Z = min_vertex_cut(D, s, t)
                assert s not in Z and t not in Z
                assert s not in reaching(D, t, Z)
                others = [w for w in range(D.size) if w not in (s, t)]
                best = next(size for size in range(len(others) + 1)
                            if any(s not in reaching(D, t, X) for X in combinations(others, size)))
                assert len(Z) == best


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(1, 5), st.integers(0, 2**30 - 1))
def test_kappa_values_in_range(n, m, bits):
    edges = tuple((i, j) for i in range(n) for j in range(m) if bits >> (i * 5 + j) & 1)
    G = BipartiteGraph(n, m, edges)
    N = n + m
    if G.edge_count < n * m or n > 1 and m > 1:
        assert 0 <= kappa(G) <= N - 2
    ku = kappa_U(G)
    assert ku is None or 0 <= ku <= N - 2


def test_separator_property_on_examples():
    assert separator_property(bar_g(7, 4))
    assert separator_property(star_g(7, 4))
    assert separator_property(kappa_tuned(7, 5, 1))
