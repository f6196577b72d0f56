import os
import random
import subprocess
import sys

import pytest

from kcbg import _pykernels, kernels
from kcbg.bigraph import build_tilde
from kcbg.connectivity import _bipartite_csr

from conftest import random_bigraph, random_corpus

BACKENDS = kernels.backends()
needs_both = pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled extension not built")


def test_python_backend_always_available():
    assert BACKENDS["python"] is _pykernels
    assert kernels.BACKEND in BACKENDS


def test_env_var_forces_python():
    env = dict(os.environ, KCBG_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from kcbg import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@needs_both
def test_masked_matching_equal():
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    rng = random.Random(1)
    for _ in range(300):
        G = random_bigraph(rng, rng.randint(1, 12), rng.randint(1, 12), rng.random())
        ptr, idx = G.v_csr
        ua = [rng.random() < 0.8 for _ in range(G.n)]
        va = [rng.random() < 0.8 for _ in range(G.m)]
        assert list(py.masked_matching(G.n, G.m, ptr, idx, ua, va)) == \
            list(cy.masked_matching(G.n, G.m, ptr, idx, ua, va))


@needs_both
def test_enumeration_kernels_equal():
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    for G in random_corpus(200, seed=2, max_n=9):
        ptr, idx = G.v_csr
        a = py.first_failing_fault_set(G.n, G.m, G.k, ptr, idx)
        b = cy.first_failing_fault_set(G.n, G.m, G.k, ptr, idx)
        assert (None if a[0] is None else tuple(a[0]), a[1]) == \
            (None if b[0] is None else tuple(b[0]), b[1])
        a = py.min_hall_surplus(G.n, G.m, ptr, idx)
        b = cy.min_hall_surplus(G.n, G.m, ptr, idx)
        assert (a[0], tuple(a[1]), a[2]) == (b[0], tuple(b[1]), b[2])
        T = build_tilde(G)
        tp, ti = T.v_csr
        a = py.first_extension_failure(T.n, G.k, tp, ti)
        b = cy.first_extension_failure(T.n, G.k, tp, ti)
        norm = lambda r: (None if r[0] is None else tuple(map(tuple, r[0])), r[1])
        assert norm(a) == norm(b)


@needs_both
def test_flow_kernel_equal():
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    rng = random.Random(3)
    for _ in range(200):
        G = random_bigraph(rng, rng.randint(2, 9), rng.randint(2, 9), rng.random())
        N = G.n + G.m
        ptr, idx = _bipartite_csr(G)
        pairs = [(a, b) for a in range(N) for b in range(a + 1, N)
                 if not G.adjacent(G.vertex_of(a), G.vertex_of(b))]
        if not pairs:
            continue
        src, dst = [p[0] for p in pairs], [p[1] for p in pairs]
        for cap, stop in [(N, 1), (2, 2), (1, 1)]:
            assert tuple(py.min_local_connectivity(N, ptr, idx, src, dst, cap, stop)) == \
                tuple(cy.min_local_connectivity(N, ptr, idx, src, dst, cap, stop))


def test_hall_kernel_wide_bitsets():
    # more than 64 U-vertices exercises multi-word bitsets
    G = random_bigraph(random.Random(4), 70, 6, 0.05)
    ptr, idx = G.v_csr
    results = {name: mod.min_hall_surplus(G.n, G.m, ptr, idx)[:2] for name, mod in BACKENDS.items()}
    surplus, X = results["python"]
    nbrs = {i for j in X for i in G.v_adj[j]}
    assert surplus == len(nbrs) - len(X)
    assert len({(s, tuple(x)) for s, x in results.values()}) == 1
