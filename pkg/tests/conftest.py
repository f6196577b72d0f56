import random
from itertools import combinations

import pytest

from kcbg import kernels
from kcbg.bigraph import BipartiteGraph


def random_bigraph(rng: random.Random, n: int, m: int, p: float) -> BipartiteGraph:
    edges = [(i, j) for i in range(n) for j in range(m) if rng.random() < p]
    return BipartiteGraph(n, m, tuple(edges))


def random_corpus(count: int, seed: int, max_n: int = 10, probs=(0.3, 0.5, 0.8)):
    rng = random.Random(seed)
    out = []
    for t in range(count):
        n = rng.randint(2, max_n)
        m = rng.randint(1, n - 1)
        out.append(random_bigraph(rng, n, m, probs[t % len(probs)]))
    return out


def oracle_complete_matching(G: BipartiteGraph, removed=()) -> bool:
    """Exhaustive: try to assign distinct U-vertices to V in every possible way."""
    alive = [i for i in range(G.n) if i not in set(removed)]

    def place(j, used):
        if j == G.m:
            return True
        return any(i not in used and G.has_edge(i, j) and place(j + 1, used | {i})
                   for i in alive)

    return place(0, frozenset())


def oracle_kcb(G: BipartiteGraph) -> bool:
    return all(oracle_complete_matching(G, S) for S in combinations(range(G.n), G.k))


@pytest.fixture(params=sorted(kernels.backends()))
def backend(request, monkeypatch):
    """Run a test once per importable kernel backend."""
    mod = kernels.backends()[request.param]
    monkeypatch.setattr(kernels, "impl", mod)
    return request.param


# Acceptance criteria record their outcome here; the summary hook prints them.
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[num]
        line = f"criterion {num}: {'PASS' if ok else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
