"""Pure-Python hot kernels.

Reference implementation of the kernel API; ``_ckernels.pyx`` mirrors every
function here with identical results, including tie-breaking and the
``work`` counters.  Graphs arrive as CSR arrays: for the bipartite kernels
``ptr``/``idx`` list the U-neighbours of each V-vertex in increasing order;
for the flow kernel they list the out-neighbours of each vertex of a digraph.
"""
from __future__ import annotations

import sys
from itertools import combinations

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))


class _Kuhn:
    """Augmenting-path matcher over V, with alive masks on both classes."""

    __slots__ = ("ptr", "idx", "u_alive", "match_u", "match_v", "seen", "stamp")

    def __init__(self, n: int, m: int, ptr: list[int], idx: list[int]):
        self.ptr = ptr
        self.idx = idx
        self.u_alive = [True] * n
        self.match_u = [-1] * n
        self.match_v = [-1] * m
        self.seen = [0] * n
        self.stamp = 0

    def _augment(self, j: int) -> bool:
        idx, seen, stamp, match_u = self.idx, self.seen, self.stamp, self.match_u
        for p in range(self.ptr[j], self.ptr[j + 1]):
            i = idx[p]
            if not self.u_alive[i] or seen[i] == stamp:
                continue
            seen[i] = stamp
            if match_u[i] == -1 or self._augment(match_u[i]):
                match_u[i] = j
                self.match_v[j] = i
                return True
        return False

    def run(self, v_order) -> int:
        """Match the V-vertices of ``v_order`` in turn; return how many matched.

        Stops at the first V-vertex that cannot be matched and returns its
        position as a negative sentinel ``-(pos + 1)``.
        """
        for t in range(len(self.match_u)):
            self.match_u[t] = -1
        for t in range(len(self.match_v)):
            self.match_v[t] = -1
        for pos, j in enumerate(v_order):
            self.stamp += 1
            if not self._augment(j):
                return -(pos + 1)
        return len(v_order)


def masked_matching(n: int, m: int, ptr: list[int], idx: list[int],
                    u_alive: list[bool], v_alive: list[bool]) -> list[int]:
    """Maximum matching of ``G[alive]``; returns ``match_v`` (U index or -1)."""
    km = _Kuhn(n, m, ptr, idx)
    km.u_alive = [bool(a) for a in u_alive]
    for j in range(m):
        if v_alive[j]:
            km.stamp += 1
            km._augment(j)
    return km.match_v


def first_failing_fault_set(n: int, m: int, k: int, ptr: list[int], idx: list[int]):
    """Scan k-subsets S of U in lexicographic order.

    Returns ``(S, work)`` for the first S whose deletion leaves V without a
    complete matching, or ``(None, work)`` if there is none.
    """
    km = _Kuhn(n, m, ptr, idx)
    all_v = list(range(m))
    work = 0
    for S in combinations(range(n), k):
        work += 1
        for i in S:
            km.u_alive[i] = False
        ok = km.run(all_v) >= 0
        for i in S:
            km.u_alive[i] = True
        if not ok:
            return S, work
    return None, work


def min_hall_surplus(n: int, m: int, ptr: list[int], idx: list[int]):
    """Minimise ``|N(X)| - |X|`` over nonempty ``X`` subset of V.

    Ties go to the smaller ``|X|`` and then to the lexicographically smaller
    sorted tuple.  Returns ``(surplus, X, work)``.
    """
    nbr = []
    for j in range(m):
        mask = 0
        for p in range(ptr[j], ptr[j + 1]):
            mask |= 1 << idx[p]
        nbr.append(mask)
    best = [n + 1, m + 1, ()]
    chosen: list[int] = []
    work = 0

    def rec(start: int, union: int) -> None:
        nonlocal work
        for j in range(start, m):
            u2 = union | nbr[j]
            chosen.append(j)
            work += 1
            size = len(chosen)
            surplus = u2.bit_count() - size
            if surplus < best[0] or (surplus == best[0] and size < best[1]):
                best[0], best[1], best[2] = surplus, size, tuple(chosen)
            rec(j + 1, u2)
            chosen.pop()

    rec(0, 0)
    return best[0], best[2], work


def first_extension_failure(n: int, k: int, ptr: list[int], idx: list[int]):
    """For a balanced graph of order (n, n), scan pairs ``(U', V')`` of k-subsets.

    Pairs are visited with U' in the outer loop, both in lexicographic order.
    Returns ``((U', V'), work)`` for the first pair whose removal leaves no
    perfect matching, else ``(None, work)``.
    """
    km = _Kuhn(n, n, ptr, idx)
    work = 0
    for Up in combinations(range(n), k):
        for i in Up:
            km.u_alive[i] = False
        for Vp in combinations(range(n), k):
            work += 1
            removed = set(Vp)
            order = [j for j in range(n) if j not in removed]
            if km.run(order) < 0:
                return (Up, Vp), work
        for i in Up:
            km.u_alive[i] = True
    return None, work


def _disjoint_paths(N: int, ptr: list[int], idx: list[int], s: int, t: int, cap: int,
                    head: list[int], nxt_first: list[list[int]], res: list[int], base: list[int]) -> int:
    res[:] = base
    src, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        parent = [-1] * (2 * N)
        parent[src] = -2
        queue = [src]
        qi = 0
        found = False
        while qi < len(queue) and not found:
            x = queue[qi]
            qi += 1
            for e in nxt_first[x]:
                y = head[e]
                if res[e] > 0 and parent[y] == -1:
                    parent[y] = e
                    if y == sink:
                        found = True
                        break
                    queue.append(y)
        if not found:
            break
        y = sink
        while y != src:
            e = parent[y]
            res[e] -= 1
            res[e ^ 1] += 1
            y = head[e ^ 1]
        flow += 1
    return flow


def _split_network(N: int, ptr: list[int], idx: list[int]):
    head: list[int] = []
    base: list[int] = []
    out: list[list[int]] = [[] for _ in range(2 * N)]

    def add(a: int, b: int) -> None:
        out[a].append(len(head))
        head.append(b)
        base.append(1)
        out[b].append(len(head))
        head.append(a)
        base.append(0)

    for w in range(N):
        add(2 * w, 2 * w + 1)
    for a in range(N):
        for p in range(ptr[a], ptr[a + 1]):
            add(2 * a + 1, 2 * idx[p])
    return head, out, base


def min_local_connectivity(N: int, ptr: list[int], idx: list[int],
                           sources: list[int], targets: list[int], cap: int, stop_below: int):
    """Minimum number of internally vertex-disjoint ``s -> t`` paths over pairs.

    Each pair's count is truncated at ``cap``.  The scan stops early once a
    value below ``stop_below`` is seen.  Returns ``(value, pair_index, work)``
    with ``pair_index`` the first pair attaining the minimum (``-1`` and
    ``cap`` when no pairs are given); ``work`` counts pairs evaluated.
    """
    head, out, base = _split_network(N, ptr, idx)
    res = base[:]
    best, arg, work = cap, -1, 0
    for q, (s, t) in enumerate(zip(sources, targets)):
        work += 1
        val = _disjoint_paths(N, ptr, idx, s, t, cap, head, out, res, base)
        if arg == -1 or val < best:
            best, arg = val, q
        if best < stop_below:
            break
    return best, arg, work
