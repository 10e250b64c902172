"""Pure-Python hot loops.  Same API as the compiled module; used as a fallback."""

from __future__ import annotations

import sys

BACKEND = "python"


def count_faces(nxt, prv, sigd):
    """Number of faces of the embedding given by successor/predecessor arrays
    over half-edges and a 0/1 twist flag per half-edge."""
    nd = len(nxt)
    seen = bytearray(2 * nd)
    cnt = 0
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
            h = prv[a] if s else nxt[a]
    return cnt >> 1


def _orbit0_is_euler(nxt, prv, sigd, m):
    # orbit of state (0, +) has length m and meets every edge once
    used = bytearray(m)
    h, s, length = 0, 0, 0
    while True:
        e = h >> 1
        if used[e]:
            return False
        used[e] = 1
        length += 1
        a = h ^ 1
        s ^= sigd[h]
        h = prv[a] if s else nxt[a]
        if h == 0 and s == 0:
            return length == m
        if length > m:
            return False


def _follows(nxt, prv, sigd, req):
    k = len(req)
    for s0 in (0, 1):
        h, s = req[0], s0
        ok = True
        for i in range(k):
            if h != req[i]:
                ok = False
                break
            a = h ^ 1
            s ^= sigd[h]
            h = prv[a] if s else nxt[a]
        if ok and h == req[0] and s == s0:
            return True
    return False


def census(nd, cand_flat, cand_start, cand_count, deg, free, base_sig,
           required=(), stop_bi=0, saturate=0, stop_at_least=0, stop_nonorientable=0, limit=0):
    """Enumerate rotation choices times signature vectors on the ``free`` edges.

    Returns a dict with ``hist`` (``{(faces, orientable): count}``), the
    bi-eulerian counts, witnesses as ``(candidate indices, free-edge signs)``,
    the number of traced embeddings and whether the search stopped early.
    Orientable means every free edge is untwisted.  ``stop_at_least`` stops at
    the first embedding with that many faces (nonorientable only, with
    ``stop_nonorientable``).  A nonzero ``limit`` caps the number of traced
    embeddings; reaching it sets ``aborted``.
    """
    n = len(deg)
    m = nd // 2
    nxt = [0] * nd
    prv = [0] * nd
    sigd = list(base_sig)
    idx = [0] * n

    def apply(v):
        o = cand_start[v] + idx[v] * deg[v]
        d = deg[v]
        for i in range(d):
            x = cand_flat[o + i]
            y = cand_flat[o + (i + 1) % d]
            nxt[x] = y
            prv[y] = x

    for v in range(n):
        apply(v)
    nf = len(free)
    signs = [0] * nf
    hist: dict = {}
    bi = [0, 0]
    wit = {"bi_orientable": None, "bi_nonorientable": None, "stop": None}
    seen_non = set()
    traced = 0
    stopped = False
    aborted = False
    req = tuple(required)

    def visit(neg):
        nonlocal traced, stopped, aborted
        if limit and traced >= limit:
            aborted = stopped = True
            return
        traced += 1
        if req and not _follows(nxt, prv, sigd, req):
            return
        f = count_faces(nxt, prv, sigd)
        ori = neg == 0
        key = (f, ori)
        hist[key] = hist.get(key, 0) + 1
        if f == 2 and _orbit0_is_euler(nxt, prv, sigd, m):
            slot = "bi_orientable" if ori else "bi_nonorientable"
            bi[0 if ori else 1] += 1
            if wit[slot] is None:
                wit[slot] = (tuple(idx), tuple(signs))
            if stop_bi == 2 or (stop_bi == 1 and ori):
                stopped = True
        if not ori and saturate:
            if 1 <= f <= saturate:
                seen_non.add(f)
                if len(seen_non) == saturate:
                    stopped = True
        if stop_at_least and f >= stop_at_least and not (stop_nonorientable and ori):
            wit["stop"] = (tuple(idx), tuple(signs))
            stopped = True

    while True:
        neg = 0
        visit(neg)
        if stopped:
            break
        for k in range(1, 1 << nf):
            j = (k & -k).bit_length() - 1
            signs[j] ^= 1
            neg += 1 if signs[j] else -1
            e2 = 2 * free[j]
            sigd[e2] ^= 1
            sigd[e2 + 1] ^= 1
            visit(neg)
            if stopped:
                break
        if stopped:
            break
        if nf:
            # gray sequence ends with only the top bit set
            j = nf - 1
            signs[j] = 0
            e2 = 2 * free[j]
            sigd[e2] ^= 1
            sigd[e2 + 1] ^= 1
        v = 0
        while v < n:
            if idx[v] + 1 < cand_count[v]:
                idx[v] += 1
                apply(v)
                break
            idx[v] = 0
            apply(v)
            v += 1
        if v == n:
            break
    return {"hist": hist, "bi_orientable": bi[0], "bi_nonorientable": bi[1],
            "witness": wit, "traced": traced, "stopped": stopped, "aborted": aborted}


def directed_bieulerian(n, tail, head, node_limit=0):
    """Search for two directed euler circuits whose transitions form one
    alternating rotation at every vertex.

    Returns ``(beta, alpha, nodes, aborted)``; ``beta[a]``/``alpha[a]`` is the
    arc following ``a`` in the first/second circuit, or ``None`` for both when
    no pair exists.
    """
    m = len(tail)
    outs = [[] for _ in range(n)]
    for a in range(m):
        outs[tail[a]].append(a)
    k = [len(o) for o in outs]
    beta = [-1] * m
    alpha = [-1] * m
    used = [False] * m
    used2 = [False] * m
    cstart = list(range(m))
    cend = list(range(m))
    assigned = [0] * n
    nodes = 0
    aborted = False
    limit = node_limit

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * m + 100))

    def p2(a, depth):
        nonlocal nodes, aborted
        nodes += 1
        if limit and nodes > limit:
            aborted = True
            return True
        v = head[a]
        if depth == m:
            alpha[a] = 0
            return True
        x = beta[a]
        last = assigned[v] == k[v] - 1
        for b in outs[v]:
            if used2[b] or b == 0:
                continue
            start = cstart[x]
            if start == b and not last:
                continue
            end = cend[b]
            old_e, old_s = cend[start], cstart[end]
            cend[start] = end
            cstart[end] = start
            assigned[v] += 1
            used2[b] = True
            alpha[a] = b
            if p2(b, depth + 1):
                return True
            used2[b] = False
            assigned[v] -= 1
            cend[start] = old_e
            cstart[end] = old_s
        alpha[a] = -1
        return False

    def p1(a, depth):
        nonlocal nodes, aborted
        nodes += 1
        if limit and nodes > limit:
            aborted = True
            return True
        if depth == m:
            beta[a] = 0
            return p2(0, 1)
        for b in outs[head[a]]:
            if used[b]:
                continue
            used[b] = True
            beta[a] = b
            if p1(b, depth + 1):
                return True
            used[b] = False
        beta[a] = -1
        return False

    if m == 0:
        return None, None, 0, False
    used[0] = True
    used2[0] = True
    found = p1(0, 1)
    if aborted or not found:
        return None, None, nodes, aborted
    return list(beta), list(alpha), nodes, False
