# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same API and results as ``kcbg._pykernels``."""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy, memset
from libc.stdint cimport uint64_t


cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long x) nogil


cdef int* _to_c(object seq) except NULL:
    cdef Py_ssize_t size = len(seq)
    cdef int* buf = <int*> malloc((size + 1) * sizeof(int))
    cdef Py_ssize_t t
    if buf == NULL:
        raise MemoryError()
    for t in range(size):
        buf[t] = seq[t]
    return buf


cdef struct Kuhn:
    int n
    int m
    int* ptr
    int* idx
    char* u_alive
    int* match_u
    int* match_v
    int* seen
    int stamp


cdef int kuhn_init(Kuhn* km, int n, int m, int* ptr, int* idx) except -1:
    km.n = n
    km.m = m
    km.ptr = ptr
    km.idx = idx
    km.u_alive = <char*> malloc(n + 1)
    km.match_u = <int*> malloc((n + 1) * sizeof(int))
    km.match_v = <int*> malloc((m + 1) * sizeof(int))
    km.seen = <int*> calloc(n + 1, sizeof(int))
    km.stamp = 0
    if km.u_alive == NULL or km.match_u == NULL or km.match_v == NULL or km.seen == NULL:
        kuhn_free(km)
        raise MemoryError()
    memset(km.u_alive, 1, n)
    return 0


cdef void kuhn_free(Kuhn* km) noexcept:
    free(km.u_alive)
    free(km.match_u)
    free(km.match_v)
    free(km.seen)


cdef bint kuhn_augment(Kuhn* km, int j) noexcept nogil:
    cdef int p, i
    for p in range(km.ptr[j], km.ptr[j + 1]):
        i = km.idx[p]
        if not km.u_alive[i] or km.seen[i] == km.stamp:
            continue
        km.seen[i] = km.stamp
        if km.match_u[i] == -1 or kuhn_augment(km, km.match_u[i]):
            km.match_u[i] = j
            km.match_v[j] = i
            return True
    return False


cdef bint kuhn_run(Kuhn* km, int* order, int count) noexcept nogil:
    """True iff every V-vertex listed in ``order`` gets matched."""
    cdef int t
    for t in range(km.n):
        km.match_u[t] = -1
    for t in range(km.m):
        km.match_v[t] = -1
    for t in range(count):
        km.stamp += 1
        if not kuhn_augment(km, order[t]):
            return False
    return True


def masked_matching(int n, int m, ptr, idx, u_alive, v_alive):
    cdef int* cptr = _to_c(ptr)
    cdef int* cidx = _to_c(idx)
    cdef Kuhn km
    cdef int i, j
    try:
        kuhn_init(&km, n, m, cptr, cidx)
        for i in range(n):
            km.u_alive[i] = 1 if u_alive[i] else 0
        for j in range(m):
            km.match_v[j] = -1
        for i in range(n):
            km.match_u[i] = -1
        for j in range(m):
            if v_alive[j]:
                km.stamp += 1
                kuhn_augment(&km, j)
        result = [km.match_v[j] for j in range(m)]
        kuhn_free(&km)
        return result
    finally:
        free(cptr)
        free(cidx)


cdef bint next_combination(int* c, int k, int n) noexcept nogil:
    """Advance ``c`` to the next k-combination of [n] in lexicographic order."""
    cdef int t = k - 1
    while t >= 0 and c[t] == n - k + t:
        t -= 1
    if t < 0:
        return False
    c[t] += 1
    t += 1
    while t < k:
        c[t] = c[t - 1] + 1
        t += 1
    return True


def first_failing_fault_set(int n, int m, int k, ptr, idx):
    cdef int* cptr = _to_c(ptr)
    cdef int* cidx = _to_c(idx)
    cdef int* comb = <int*> malloc((k + 1) * sizeof(int))
    cdef int* order = <int*> malloc((m + 1) * sizeof(int))
    cdef Kuhn km
    cdef long long work = 0
    cdef int t
    cdef bint ok = True, more = True
    witness = None
    try:
        kuhn_init(&km, n, m, cptr, cidx)
        for t in range(m):
            order[t] = t
        for t in range(k):
            comb[t] = t
        with nogil:
            while more:
                work += 1
                for t in range(k):
                    km.u_alive[comb[t]] = 0
                ok = kuhn_run(&km, order, m)
                for t in range(k):
                    km.u_alive[comb[t]] = 1
                if not ok:
                    break
                more = next_combination(comb, k, n)
        if not ok:
            witness = tuple(comb[t] for t in range(k))
        kuhn_free(&km)
        return witness, work
    finally:
        free(cptr)
        free(cidx)
        free(comb)
        free(order)


cdef struct HallState:
    int m
    int W
    uint64_t* nbr
    uint64_t* unions
    int* chosen
    int* best_set
    int best_surplus
    int best_size
    long long work


cdef void hall_rec(HallState* st, int start, int depth) noexcept nogil:
    cdef int j, w, cnt, surplus, t
    cdef uint64_t* prev = st.unions + depth * st.W
    cdef uint64_t* cur = st.unions + (depth + 1) * st.W
    for j in range(start, st.m):
        cnt = 0
        for w in range(st.W):
            cur[w] = prev[w] | st.nbr[j * st.W + w]
            cnt += popcount64(cur[w])
        st.chosen[depth] = j
        st.work += 1
        surplus = cnt - (depth + 1)
        if surplus < st.best_surplus or (surplus == st.best_surplus and depth + 1 < st.best_size):
            st.best_surplus = surplus
            st.best_size = depth + 1
            for t in range(depth + 1):
                st.best_set[t] = st.chosen[t]
        hall_rec(st, j + 1, depth + 1)


def min_hall_surplus(int n, int m, ptr, idx):
    cdef HallState st
    cdef int W = (n + 63) // 64
    cdef int j, p, i, t
    st.m = m
    st.W = W
    st.nbr = <uint64_t*> calloc(m * W + 1, sizeof(uint64_t))
    st.unions = <uint64_t*> calloc((m + 1) * W + 1, sizeof(uint64_t))
    st.chosen = <int*> malloc((m + 1) * sizeof(int))
    st.best_set = <int*> malloc((m + 1) * sizeof(int))
    st.best_surplus = n + 1
    st.best_size = m + 1
    st.work = 0
    try:
        if st.nbr == NULL or st.unions == NULL or st.chosen == NULL or st.best_set == NULL:
            raise MemoryError()
        for j in range(m):
            for p in range(ptr[j], ptr[j + 1]):
                i = idx[p]
                st.nbr[j * W + i // 64] |= (<uint64_t> 1) << (i % 64)
        with nogil:
            hall_rec(&st, 0, 0)
        best = tuple(st.best_set[t] for t in range(st.best_size)) if st.best_size <= m else ()
        return st.best_surplus, best, st.work
    finally:
        free(st.nbr)
        free(st.unions)
        free(st.chosen)
        free(st.best_set)


def first_extension_failure(int n, int k, ptr, idx):
    cdef int* cptr = _to_c(ptr)
    cdef int* cidx = _to_c(idx)
    cdef int* cu = <int*> malloc((k + 1) * sizeof(int))
    cdef int* cv = <int*> malloc((k + 1) * sizeof(int))
    cdef int* order = <int*> malloc((n + 1) * sizeof(int))
    cdef char* v_removed = <char*> calloc(n + 1, 1)
    cdef Kuhn km
    cdef long long work = 0
    cdef int t, cnt
    cdef bint ok = True, more_u = True, more_v
    witness = None
    try:
        kuhn_init(&km, n, n, cptr, cidx)
        for t in range(k):
            cu[t] = t
        with nogil:
            while more_u and ok:
                for t in range(k):
                    km.u_alive[cu[t]] = 0
                for t in range(k):
                    cv[t] = t
                more_v = True
                while more_v:
                    work += 1
                    for t in range(k):
                        v_removed[cv[t]] = 1
                    cnt = 0
                    for t in range(n):
                        if not v_removed[t]:
                            order[cnt] = t
                            cnt += 1
                    for t in range(k):
                        v_removed[cv[t]] = 0
                    ok = kuhn_run(&km, order, cnt)
                    if not ok:
                        break
                    more_v = next_combination(cv, k, n)
                if not ok:
                    break
                for t in range(k):
                    km.u_alive[cu[t]] = 1
                more_u = next_combination(cu, k, n)
        if not ok:
            witness = (tuple(cu[t] for t in range(k)), tuple(cv[t] for t in range(k)))
        kuhn_free(&km)
        return witness, work
    finally:
        free(cptr)
        free(cidx)
        free(cu)
        free(cv)
        free(order)
        free(v_removed)


cdef struct Net:
    int nodes
    int arcs
    int* head
    int* first
    int* nxt
    int* res
    int* base
    int* parent
    int* queue


cdef int disjoint_paths(Net* net, int s, int t, int cap) noexcept nogil:
    cdef int src = 2 * s + 1
    cdef int sink = 2 * t
    cdef int flow = 0
    cdef int qh, qt, x, y, e
    cdef bint found
    memcpy(net.res, net.base, net.arcs * sizeof(int))
    while flow < cap:
        for x in range(net.nodes):
            net.parent[x] = -1
        net.parent[src] = -2
        qh = 0
        qt = 0
        net.queue[qt] = src
        qt += 1
        found = False
        while qh < qt and not found:
            x = net.queue[qh]
            qh += 1
            e = net.first[x]
            while e != -1:
                y = net.head[e]
                if net.res[e] > 0 and net.parent[y] == -1:
                    net.parent[y] = e
                    if y == sink:
                        found = True
                        break
                    net.queue[qt] = y
                    qt += 1
                e = net.nxt[e]
        if not found:
            break
        y = sink
        while y != src:
            e = net.parent[y]
            net.res[e] -= 1
            net.res[e ^ 1] += 1
            y = net.head[e ^ 1]
        flow += 1
    return flow


cdef inline void _link(Net* net, int* last, int node, int e) noexcept nogil:
    # Append to the tail so arcs are scanned in insertion order, as in the
    # Python kernel.
    net.nxt[e] = -1
    if last[node] == -1:
        net.first[node] = e
    else:
        net.nxt[last[node]] = e
    last[node] = e


cdef inline void net_add(Net* net, int* last, int a, int b) noexcept nogil:
    net.head[net.arcs] = b
    net.base[net.arcs] = 1
    _link(net, last, a, net.arcs)
    net.arcs += 1
    net.head[net.arcs] = a
    net.base[net.arcs] = 0
    _link(net, last, b, net.arcs)
    net.arcs += 1


def min_local_connectivity(int N, ptr, idx, sources, targets, int cap, int stop_below):
    cdef int* cptr = _to_c(ptr)
    cdef int* cidx = _to_c(idx)
    cdef int n_arcs = len(idx)
    cdef int max_arcs = 2 * (N + n_arcs) + 2
    cdef Net net
    cdef int* last = <int*> malloc((2 * N + 1) * sizeof(int))
    cdef int a, p, q, val, best = cap, arg = -1, npairs = len(sources)
    cdef long long work = 0
    net.nodes = 2 * N
    net.arcs = 0
    net.head = <int*> malloc(max_arcs * sizeof(int))
    net.first = <int*> malloc((2 * N + 1) * sizeof(int))
    net.nxt = <int*> malloc(max_arcs * sizeof(int))
    net.res = <int*> malloc(max_arcs * sizeof(int))
    net.base = <int*> malloc(max_arcs * sizeof(int))
    net.parent = <int*> malloc((2 * N + 1) * sizeof(int))
    net.queue = <int*> malloc((2 * N + 1) * sizeof(int))
    cdef int* cs = _to_c(sources)
    cdef int* ct = _to_c(targets)
    try:
        for a in range(2 * N):
            net.first[a] = -1
            last[a] = -1
        for a in range(N):
            net_add(&net, last, 2 * a, 2 * a + 1)
        for a in range(N):
            for p in range(cptr[a], cptr[a + 1]):
                net_add(&net, last, 2 * a + 1, 2 * cidx[p])
        with nogil:
            for q in range(npairs):
                work += 1
                val = disjoint_paths(&net, cs[q], ct[q], cap)
                if arg == -1 or val < best:
                    best = val
                    arg = q
                if best < stop_below:
                    break
        return best, arg, work
    finally:
        free(cptr)
        free(cidx)
        free(cs)
        free(ct)
        free(last)
        free(net.head)
        free(net.first)
        free(net.nxt)
        free(net.res)
        free(net.base)
        free(net.parent)
        free(net.queue)
