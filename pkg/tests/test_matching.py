import random
from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from kcbg.bigraph import BipartiteGraph, complete_bipartite
from kcbg.constructions import bar_g
from kcbg.matching import hall_violator, has_complete_matching, max_matching

from conftest import random_bigraph


def min_vertex_cover(G):
    """Exhaustive search for the smallest vertex set touching every edge."""
    vertices = [("u", i) for i in range(G.n)] + [("v", j) for j in range(G.m)]
    for size in range(len(vertices) + 1):
        for C in combinations(vertices, size):
            cs = set(C)
            if all(("u", i) in cs or ("v", j) in cs for i, j in G.edges):
                return size


def check_is_matching(G, M):
    us = [i for i, _ in M.pairs]
    vs = [j for _, j in M.pairs]
    assert len(set(us)) == len(us) and len(set(vs)) == len(vs)
    assert all(G.has_edge(i, j) for i, j in M.pairs)


def test_examples():
    assert max_matching(bar_g(6, 5)).size == 5
    assert max_matching(BipartiteGraph(4, 3)).size == 0
    assert max_matching(complete_bipartite(5, 3)).size == 3
    assert has_complete_matching(bar_g(6, 5), removed_u=[3])
    assert has_complete_matching(complete_bipartite(2, 2), removed_u=[1]) is False
    assert has_complete_matching(complete_bipartite(3, 2), removed_u=[1])
    assert not has_complete_matching(BipartiteGraph(3, 2, ((0, 0), (1, 0))))


def test_deterministic_matching(backend):
    # Hand trace: v0 takes u0; v1 pushes v0 to u1; v2 pushes v1 to u1 and v0 to u2.
    assert max_matching(complete_bipartite(3, 3)).pairs == ((0, 2), (1, 1), (2, 0))


def test_konig_exhaustive(backend):
    rng = random.Random(11)
    for _ in range(250):
        n = rng.randint(1, 7)
        m = rng.randint(1, 12 - n) if n < 11 else 1
        G = random_bigraph(rng, n, m, rng.choice((0.2, 0.4, 0.7)))
        M = max_matching(G)
        check_is_matching(G, M)
        assert M.size == min_vertex_cover(G)


@settings(max_examples=50)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2**36 - 1), st.integers(0, 5))
def test_monotone_under_deletion(n, m, bits, drop):
    edges = tuple((i, j) for i in range(n) for j in range(m) if bits >> (i * 6 + j) & 1)
    G = BipartiteGraph(n, m, edges)
    full = max_matching(G).size
    assert max_matching(G, removed_u=[drop % n]).size <= full
    assert max_matching(G, removed_v=[drop % m]).size <= full
    assert max_matching(G, removed_u=[drop % n]).size >= full - 1


def test_hall_violator_is_deficient():
    rng = random.Random(5)
    for _ in range(200):
        G = random_bigraph(rng, rng.randint(1, 7), rng.randint(1, 7), 0.3)
        M = max_matching(G)
        X = hall_violator(G, M)
        if M.size == G.m:
            assert X is None
        else:
            nbrs = {i for j in X for i in G.v_adj[j]}
            assert len(nbrs) < len(X)
