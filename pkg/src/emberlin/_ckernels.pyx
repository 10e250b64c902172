# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: face counting, embedding census, bi-eulerian search."""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memset

BACKEND = "cython"


cdef int _count(int nd, int* nxt, int* prv, int* sigd, char* seen) noexcept nogil:
    cdef int st, h, s, a, cnt = 0
    memset(seen, 0, 2 * nd)
    for st in range(2 * nd):
        if seen[st]:
            continue
        cnt += 1
        h = st >> 1
        s = st & 1
        while not seen[2 * h + s]:
            seen[2 * h + s] = 1
            a = h ^ 1
            s ^= sigd[h]
            if s:
                h = prv[a]
            else:
                h = nxt[a]
    return cnt >> 1


cdef int _orbit0_euler(int m, int* nxt, int* prv, int* sigd, char* used) noexcept nogil:
    cdef int h = 0, s = 0, length = 0, a, e
    memset(used, 0, m)
    while True:
        e = h >> 1
        if used[e]:
            return 0
        used[e] = 1
        length += 1
        a = h ^ 1
        s ^= sigd[h]
        if s:
            h = prv[a]
        else:
            h = nxt[a]
        if h == 0 and s == 0:
            return length == m
        if length > m:
            return 0


cdef int _follows(int* nxt, int* prv, int* sigd, int* req, int k) noexcept nogil:
    cdef int s0, h, s, i, a, ok
    for s0 in range(2):
        h = req[0]
        s = s0
        ok = 1
        for i in range(k):
            if h != req[i]:
                ok = 0
                break
            a = h ^ 1
            s ^= sigd[h]
            if s:
                h = prv[a]
            else:
                h = nxt[a]
        if ok and h == req[0] and s == s0:
            return 1
    return 0


cdef int* _ints(object seq) except NULL:
    cdef Py_ssize_t i, L = len(seq)
    cdef int* p = <int*>malloc((L + 1) * sizeof(int))
    if p == NULL:
        raise MemoryError()
    for i in range(L):
        p[i] = seq[i]
    return p


def count_faces(nxt, prv, sigd):
    cdef int nd = len(nxt)
    cdef int* a = _ints(nxt)
    cdef int* b = _ints(prv)
    cdef int* c = _ints(sigd)
    cdef char* seen = <char*>malloc(2 * nd + 1)
    cdef int r
    try:
        r = _count(nd, a, b, c, seen)
    finally:
        free(a); free(b); free(c); free(seen)
    return r


cdef inline void _apply(int v, int* idx, int* cflat, int* cstart, int* deg, int* nxt, int* prv) noexcept nogil:
    cdef int o = cstart[v] + idx[v] * deg[v]
    cdef int d = deg[v], i, x, y
    for i in range(d):
        x = cflat[o + i]
        y = cflat[o + (i + 1) % d]
        nxt[x] = y
        prv[y] = x


def census(int nd, cand_flat, cand_start, cand_count, deg, free_edges, base_sig,
           required=(), int stop_bi=0, int saturate=0, int stop_at_least=0,
           int stop_nonorientable=0, long long limit=0):
    """See the pure-Python version for the contract."""
    cdef int n = len(deg), m = nd // 2, nf = len(free_edges), k_req = len(required)
    cdef int* cflat = _ints(cand_flat)
    cdef int* cst = _ints(cand_start)
    cdef int* ccnt = _ints(cand_count)
    cdef int* dg = _ints(deg)
    cdef int* fr = _ints(free_edges)
    cdef int* sigd = _ints(base_sig)
    cdef int* req = _ints(required)
    cdef int* nxt = <int*>calloc(nd + 1, sizeof(int))
    cdef int* prv = <int*>calloc(nd + 1, sizeof(int))
    cdef int* idx = <int*>calloc(n + 1, sizeof(int))
    cdef int* signs = <int*>calloc(nf + 1, sizeof(int))
    cdef long long* hist = <long long*>calloc(2 * (nd + 3), sizeof(long long))
    cdef char* seen = <char*>malloc(2 * nd + 1)
    cdef char* used = <char*>malloc(m + 1)
    cdef char* seen_non = <char*>calloc(nd + 3, 1)
    cdef int* wit_ori = <int*>malloc((n + nf + 1) * sizeof(int))
    cdef int* wit_non = <int*>malloc((n + nf + 1) * sizeof(int))
    cdef int* wit_stop = <int*>malloc((n + nf + 1) * sizeof(int))
    cdef int have_ori = 0, have_non = 0, have_stop = 0
    cdef long long bi_ori = 0, bi_non = 0, traced = 0
    cdef int stopped = 0, n_sat = 0, aborted = 0
    cdef int v, j, e2, f, ori, neg, i
    cdef long long kk, top
    try:
        with nogil:
            for v in range(n):
                _apply(v, idx, cflat, cst, dg, nxt, prv)
            top = (<long long>1) << nf
            while True:
                neg = 0
                kk = 0
                while True:
                    if kk > 0:
                        j = 0
                        while not ((kk >> j) & 1):
                            j += 1
                        signs[j] ^= 1
                        if signs[j]:
                            neg += 1
                        else:
                            neg -= 1
                        e2 = 2 * fr[j]
                        sigd[e2] ^= 1
                        sigd[e2 + 1] ^= 1
                    if limit and traced >= limit:
                        aborted = 1
                        stopped = 1
                        break
                    traced += 1
                    if k_req == 0 or _follows(nxt, prv, sigd, req, k_req):
                        f = _count(nd, nxt, prv, sigd, seen)
                        ori = neg == 0
                        hist[2 * f + ori] += 1
                        if f == 2 and _orbit0_euler(m, nxt, prv, sigd, used):
                            if ori:
                                bi_ori += 1
                                if not have_ori:
                                    have_ori = 1
                                    for i in range(n):
                                        wit_ori[i] = idx[i]
                                    for i in range(nf):
                                        wit_ori[n + i] = signs[i]
                            else:
                                bi_non += 1
                                if not have_non:
                                    have_non = 1
                                    for i in range(n):
                                        wit_non[i] = idx[i]
                                    for i in range(nf):
                                        wit_non[n + i] = signs[i]
                            if stop_bi == 2 or (stop_bi == 1 and ori):
                                stopped = 1
                        if (not ori) and saturate and 1 <= f <= saturate:
                            if not seen_non[f]:
                                seen_non[f] = 1
                                n_sat += 1
                                if n_sat == saturate:
                                    stopped = 1
                        if stop_at_least and f >= stop_at_least and not (stop_nonorientable and ori):
                            have_stop = 1
                            for i in range(n):
                                wit_stop[i] = idx[i]
                            for i in range(nf):
                                wit_stop[n + i] = signs[i]
                            stopped = 1
                    if stopped:
                        break
                    kk += 1
                    if kk >= top:
                        break
                if stopped:
                    break
                if nf:
                    j = nf - 1
                    signs[j] = 0
                    e2 = 2 * fr[j]
                    sigd[e2] ^= 1
                    sigd[e2 + 1] ^= 1
                v = 0
                while v < n:
                    if idx[v] + 1 < ccnt[v]:
                        idx[v] += 1
                        _apply(v, idx, cflat, cst, dg, nxt, prv)
                        break
                    idx[v] = 0
                    _apply(v, idx, cflat, cst, dg, nxt, prv)
                    v += 1
                if v == n:
                    break
        out = {}
        for f in range(nd + 3):
            for ori in range(2):
                if hist[2 * f + ori]:
                    out[(f, bool(ori))] = hist[2 * f + ori]
        wit = {"bi_orientable": None, "bi_nonorientable": None, "stop": None}
        if have_ori:
            wit["bi_orientable"] = (tuple([wit_ori[i] for i in range(n)]),
                                    tuple([wit_ori[n + i] for i in range(nf)]))
        if have_non:
            wit["bi_nonorientable"] = (tuple([wit_non[i] for i in range(n)]),
                                       tuple([wit_non[n + i] for i in range(nf)]))
        if have_stop:
            wit["stop"] = (tuple([wit_stop[i] for i in range(n)]),
                           tuple([wit_stop[n + i] for i in range(nf)]))
        return {"hist": out, "bi_orientable": bi_ori, "bi_nonorientable": bi_non,
                "witness": wit, "traced": traced, "stopped": bool(stopped),
                "aborted": bool(aborted)}
    finally:
        free(cflat); free(cst); free(ccnt); free(dg); free(fr); free(sigd); free(req)
        free(nxt); free(prv); free(idx); free(signs); free(hist); free(seen); free(used)
        free(seen_non); free(wit_ori); free(wit_non); free(wit_stop)


cdef struct Search:
    int m
    int* tail
    int* head
    int* outs      # out-arcs grouped by vertex
    int* ostart
    int* k
    int* beta
    int* alpha
    char* used
    char* used2
    int* cstart
    int* cend
    int* assigned
    long long nodes
    long long limit
    int aborted


cdef int _p2(Search* S, int a, int depth) noexcept nogil:
    cdef int v, x, b, i, start, end, old_e, old_s, last
    S.nodes += 1
    if S.limit and S.nodes > S.limit:
        S.aborted = 1
        return 1
    v = S.head[a]
    if depth == S.m:
        S.alpha[a] = 0
        return 1
    x = S.beta[a]
    last = S.assigned[v] == S.k[v] - 1
    for i in range(S.ostart[v], S.ostart[v + 1]):
        b = S.outs[i]
        if S.used2[b] or b == 0:
            continue
        start = S.cstart[x]
        if start == b and not last:
            continue
        end = S.cend[b]
        old_e = S.cend[start]
        old_s = S.cstart[end]
        S.cend[start] = end
        S.cstart[end] = start
        S.assigned[v] += 1
        S.used2[b] = 1
        S.alpha[a] = b
        if _p2(S, b, depth + 1):
            return 1
        S.used2[b] = 0
        S.assigned[v] -= 1
        S.cend[start] = old_e
        S.cstart[end] = old_s
    S.alpha[a] = -1
    return 0


cdef int _p1(Search* S, int a, int depth) noexcept nogil:
    cdef int i, b, v
    S.nodes += 1
    if S.limit and S.nodes > S.limit:
        S.aborted = 1
        return 1
    if depth == S.m:
        S.beta[a] = 0
        return _p2(S, 0, 1)
    v = S.head[a]
    for i in range(S.ostart[v], S.ostart[v + 1]):
        b = S.outs[i]
        if S.used[b]:
            continue
        S.used[b] = 1
        S.beta[a] = b
        if _p1(S, b, depth + 1):
            return 1
        S.used[b] = 0
    S.beta[a] = -1
    return 0


def directed_bieulerian(int n, tail, head, long long node_limit=0):
    """See the pure-Python version for the contract."""
    cdef int m = len(tail), a, found
    cdef Search S
    if m == 0:
        return None, None, 0, False
    groups = [[] for _ in range(n)]
    for a in range(m):
        groups[tail[a]].append(a)
    flat = []
    starts = [0]
    for grp in groups:
        flat.extend(grp)
        starts.append(len(flat))
    S.m = m
    S.tail = _ints(tail)
    S.head = _ints(head)
    S.outs = _ints(flat)
    S.ostart = _ints(starts)
    S.k = _ints([len(g) for g in groups])
    S.beta = <int*>malloc(m * sizeof(int))
    S.alpha = <int*>malloc(m * sizeof(int))
    S.used = <char*>calloc(m, 1)
    S.used2 = <char*>calloc(m, 1)
    S.cstart = _ints(list(range(m)))
    S.cend = _ints(list(range(m)))
    S.assigned = <int*>calloc(n + 1, sizeof(int))
    S.nodes = 0
    S.limit = node_limit
    S.aborted = 0
    try:
        for a in range(m):
            S.beta[a] = -1
            S.alpha[a] = -1
        S.used[0] = 1
        S.used2[0] = 1
        with nogil:
            found = _p1(&S, 0, 1)
        if S.aborted:
            return None, None, S.nodes, True
        if not found:
            return None, None, S.nodes, False
        return ([S.beta[a] for a in range(m)], [S.alpha[a] for a in range(m)],
                S.nodes, False)
    finally:
        free(S.tail); free(S.head); free(S.outs); free(S.ostart); free(S.k)
        free(S.beta); free(S.alpha); free(S.used); free(S.used2)
        free(S.cstart); free(S.cend); free(S.assigned)
