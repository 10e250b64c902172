"""Exhaustive families of small eulerian graphs, digraphs and circuit
decompositions, one representative per isomorphism class.

Every connected eulerian (di)graph with ``m`` edges is read off some closed
vertex sequence of length ``m`` (an euler circuit), so it is enough to run
over restricted-growth sequences and keep one graph per canonical form.
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations, product

from .graph import ClosedWalk, Digraph, Graph, build_digraph, build_graph, make_walk


def restricted_growth(m: int, max_blocks: int | None = None):
    """Sequences ``s`` of length ``m`` with ``s[0] = 0`` and every entry at
    most one more than the maximum before it."""
    cap = m if max_blocks is None else max_blocks
    seq = [0] * m

    def rec(i, top):
        if i == m:
            yield tuple(seq)
            return
        for x in range(min(top + 2, cap)):
            seq[i] = x
            yield from rec(i + 1, max(top, x))

    if m:
        yield from rec(1, 0)


def _edge_list(seq, directed):
    m = len(seq)
    out = []
    for i in range(m):
        u, w = seq[i], seq[(i + 1) % m]
        out.append((u, w) if directed or u <= w else (w, u))
    return out


def canonical_form(n: int, edges, directed: bool) -> tuple:
    """Least sorted edge list over vertex relabellings that keep the degree
    profile sorted; equal for isomorphic multigraphs."""
    deg: Counter = Counter()
    for u, w in edges:
        deg[(u, "o")] += 1
        deg[(w, "i")] += 1
    key = [(deg[(v, "o")] + deg[(v, "i")], deg[(v, "o")] if directed else 0) for v in range(n)]
    classes: dict = {}
    for v in range(n):
        classes.setdefault(key[v], []).append(v)
    order = sorted(classes)
    slots, base = [], 0
    for k in order:
        slots.append((classes[k], list(range(base, base + len(classes[k])))))
        base += len(classes[k])
    best = None
    for choice in product(*(permutations(vs) for vs, _ in slots)):
        perm = [0] * n
        for (vs, targets), pv in zip(slots, choice):
            for v, t in zip(pv, targets):
                perm[v] = t
        if directed:
            cand = tuple(sorted((perm[u], perm[w]) for u, w in edges))
        else:
            cand = tuple(sorted((min(perm[u], perm[w]), max(perm[u], perm[w])) for u, w in edges))
        if best is None or cand < best:
            best = cand
    return (n, directed, best)


def _build(n, edges, directed):
    verts = [f"x{i}" for i in range(n)]
    recs = [(f"e{j}", f"x{u}", f"x{w}") for j, (u, w) in enumerate(edges)]
    return (build_digraph if directed else build_graph)(recs, verts)


def eulerian_family(max_m: int, directed: bool = False, max_n: int | None = None, min_m: int = 1):
    """One connected eulerian (di)graph per isomorphism class with
    ``min_m <= m <= max_m`` edges and at most ``max_n`` vertices."""
    seen = set()
    for m in range(min_m, max_m + 1):
        for seq in restricted_growth(m, max_n):
            n = max(seq) + 1
            edges = sorted(_edge_list(seq, directed))
            cf = canonical_form(n, edges, directed)
            if cf in seen:
                continue
            seen.add(cf)
            yield _build(n, list(cf[2]), directed)


def eulerian_multigraphs(max_n: int, max_m: int):
    return eulerian_family(max_m, False, max_n)


def eulerian_digraphs(max_m: int, max_n: int | None = None):
    return eulerian_family(max_m, True, max_n)


# -- circuit decompositions ----------------------------------------------------------------


def _cyc_key(seq) -> tuple:
    k = len(seq)
    rots = [tuple(seq[i:] + seq[:i]) for i in range(k)]
    back = list(reversed(seq))
    rots += [tuple(back[i:] + back[:i]) for i in range(k)]
    return min(rots)


def circuit_decompositions(G: Graph) -> list[list[ClosedWalk]]:
    """All decompositions of ``G`` into closed trails, up to permuting
    parallel edges (which gives isomorphic pairs).

    Each decomposition is recorded by the multiset of cyclic vertex sequences
    of its circuits and then realised on concrete edges.
    """
    pool: dict = {}
    for e in G.edges:
        u, w = G.incv[e], G.incv[e + 1]
        pool.setdefault((min(u, w), max(u, w)), []).append(e)
    left = Counter({k: len(v) for k, v in pool.items()})
    found = set()

    def start_vertex():
        vs = [u for (u, w), c in left.items() if c for u in (u, w)]
        return min(vs) if vs else None

    def rec(done, cur_seq):
        s = cur_seq[0]
        cur = cur_seq[-1]
        if len(cur_seq) > 1 and cur == s:
            circ = tuple(cur_seq[:-1])
            nd = done + (_cyc_key(list(circ)),)
            nxt = start_vertex()
            if nxt is None:
                found.add(tuple(sorted(nd)))
            else:
                rec(nd, [nxt])
        for (u, w), c in list(left.items()):
            if not c or cur not in (u, w):
                continue
            other = w if cur == u else u
            left[(u, w)] -= 1
            rec(done, cur_seq + [other])
            left[(u, w)] += 1

    s0 = start_vertex()
    if s0 is None:
        return []
    rec((), [s0])
    out = []
    for dec in sorted(found):
        avail = {k: list(v) for k, v in pool.items()}
        walks = []
        for circ in dec:
            darts = []
            k = len(circ)
            for i in range(k):
                u, w = circ[i], circ[(i + 1) % k]
                e = avail[(min(u, w), max(u, w))].pop(0)
                darts.append(e if G.incv[e] == u else e + 1)
            walks.append(make_walk(G, darts, directed=False))
        out.append(walks)
    return out


def decomposed_eulerian_graphs(max_m: int):
    """Pairs ``(G, decomposition)`` over every connected eulerian graph with
    at most ``max_m`` edges and each of its circuit decompositions."""
    for G in eulerian_family(max_m, False):
        for dec in circuit_decompositions(G):
            yield G, dec
