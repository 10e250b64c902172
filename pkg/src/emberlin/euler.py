"""Euler circuits, circuits through prescribed vertices, arc-disjoint path pairs
and interlacing circuits."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .graph import ClosedWalk, Digraph, Graph, GraphError, WalkError, edge_of, make_walk


class CutConditionError(GraphError):
    """An edge cut separating two vertices is too small; ``cut`` holds the
    vertex side containing the source and ``size`` its edge count."""

    def __init__(self, msg, cut=None, size=None):
        super().__init__(msg)
        self.cut = cut
        self.size = size


def _leaving(G: Graph, v: int, used) -> list[int]:
    if G.directed:
        return [h for h in G.out_darts(v) if not used[h >> 1]]
    return [h for h in G.darts_at(v) if not used[h >> 1]]


def _closed_trail_from(G, v, used, choose=min):
    trail = []
    cur = v
    while True:
        opts = _leaving(G, cur, used)
        if not opts:
            break
        h = choose(opts)
        used[h >> 1] = True
        trail.append(h)
        cur = G.incv[h ^ 1]
    if cur != v:
        raise GraphError("graph is not eulerian")
    return trail


def _splice_all(G: Graph, circuit: list[int], used, choose=min) -> list[int]:
    """Splice closed trails of unused edges into ``circuit`` at its earliest
    vertex that still has unused edges, until none remain reachable."""
    while True:
        pos = None
        for i, h in enumerate(circuit):
            if _leaving(G, G.incv[h], used):
                pos = i
                break
        if pos is None:
            return circuit
        sub = _closed_trail_from(G, G.incv[circuit[pos]], used, choose)
        circuit[pos:pos] = sub


def _check_eulerian(G: Graph):
    if G.m == 0:
        raise GraphError("graph has no edges")
    ok = G.is_balanced() if G.directed else all(G.degree(v) % 2 == 0 for v in range(G.n))
    if not ok:
        raise GraphError("graph is not eulerian: unbalanced vertex" if G.directed
                         else "graph is not eulerian: odd-degree vertex")
    comps = [c for c in G.components() if any(G.degree(v) for v in c)]
    if len(comps) != 1:
        raise GraphError("graph is not eulerian: edges lie in several components")


def euler_circuit(G: Graph, start=None) -> ClosedWalk:
    """Hierholzer's algorithm, always taking the least available half-edge and
    splicing at the earliest vertex of the current circuit."""
    _check_eulerian(G)
    if start is None:
        v = G.incv[0]
    else:
        v = G.index(start)
        if G.degree(v) == 0:
            raise GraphError("start vertex has no edges")
    used = [False] * G.m
    circ = _closed_trail_from(G, v, used)
    circ = _splice_all(G, circ, used)
    return make_walk(G, circ, directed=G.directed)


def random_euler_circuit(G: Graph, rng: random.Random) -> ClosedWalk:
    """Euler circuit with random choices (for test drivers)."""
    _check_eulerian(G)
    starts = [v for v in range(G.n) if G.degree(v)]
    v = rng.choice(starts)
    used = [False] * G.m
    pick = rng.choice
    circ = _closed_trail_from(G, v, used, pick)
    while True:
        cands = [i for i, h in enumerate(circ) if _leaving(G, G.incv[h], used)]
        if not cands:
            break
        pos = rng.choice(cands)
        sub = _closed_trail_from(G, G.incv[circ[pos]], used, pick)
        circ[pos:pos] = sub
    k = rng.randrange(len(circ))
    return make_walk(G, circ[k:] + circ[:k], directed=G.directed)


def all_euler_circuits(G: Graph, limit: int = 10 ** 6) -> list[ClosedWalk]:
    """Every euler circuit, each once, as the rotation starting with half-edge
    0 (and for undirected graphs the traversal leaving on 0 or 1, whichever
    comes first).  Exhaustive; for small test graphs only."""
    _check_eulerian(G)
    m = G.m
    used = [False] * m
    out: list[ClosedWalk] = []
    seen: set = set()
    trail: list[int] = []

    def rec(cur):
        if len(out) >= limit:
            return
        if len(trail) == m:
            if cur == G.incv[trail[0]]:
                W = ClosedWalk(tuple(trail), G.directed)
                key = W.canonical()
                if key not in seen:
                    seen.add(key)
                    out.append(W)
            return
        for h in _leaving(G, cur, used):
            used[h >> 1] = True
            trail.append(h)
            rec(G.incv[h ^ 1])
            trail.pop()
            used[h >> 1] = False

    used[0] = True
    trail.append(0)
    rec(G.incv[1])
    return out


def _vertex_seq(G, darts):
    return [G.incv[h] for h in darts]


def contains_in_order(seq, targets) -> bool:
    """``targets`` occurs as a subsequence (distinct positions) of ``seq``."""
    i = 0
    for x in seq:
        if i < len(targets) and x == targets[i]:
            i += 1
    return i == len(targets)


def _bfs_path(G: Digraph, s: int, t: int, used) -> list[int] | None:
    """Shortest directed path of unused arcs from s to t (empty if s == t)."""
    if s == t:
        return []
    prev = {s: None}
    q = deque([s])
    while q:
        v = q.popleft()
        for h in G.out_darts(v):
            if used[h >> 1]:
                continue
            w = G.incv[h ^ 1]
            if w not in prev:
                prev[w] = h
                if w == t:
                    path = []
                    while w != s:
                        g = prev[w]
                        path.append(g)
                        w = G.incv[g]
                    return path[::-1]
                q.append(w)
    return None


def _discover_trail(D: Digraph, seq: list[int], node_limit: int = 200000) -> list[int] | None:
    """Directed trail whose vertex sequence contains ``seq`` in order.

    First tries successive shortest paths; then a bounded depth-first search
    over trails with greedy subsequence matching."""
    used = [False] * D.m
    trail: list[int] = []
    ok = True
    for a, b in zip(seq, seq[1:]):
        if a == b:
            p = None
            for h in D.out_darts(a):
                if not used[h >> 1]:
                    used[h >> 1] = True
                    back = _bfs_path(D, D.incv[h ^ 1], a, used)
                    used[h >> 1] = False
                    if back is not None:
                        p = [h] + back
                        break
        else:
            p = _bfs_path(D, a, b, used)
        if p is None:
            ok = False
            break
        for h in p:
            used[h >> 1] = True
        trail.extend(p)
    if ok:
        return trail
    used = [False] * D.m
    trail = []
    count = 0

    def rec(cur, idx):
        nonlocal count
        count += 1
        if count > node_limit:
            return False
        if idx == len(seq):
            return True
        for h in D.out_darts(cur):
            if used[h >> 1]:
                continue
            w = D.incv[h ^ 1]
            used[h >> 1] = True
            trail.append(h)
            if rec(w, idx + (1 if w == seq[idx] else 0)):
                return True
            trail.pop()
            used[h >> 1] = False
        return False

    if rec(seq[0], 1):
        return trail
    return None


def euler_circuit_through(D: Digraph, seq, trail=None) -> ClosedWalk:
    """Directed euler circuit visiting the vertices ``seq`` in the given order.

    ``trail`` may supply a directed trail (list of outgoing half-arcs, open or
    closed) that already visits them in order; otherwise one is searched for.
    The trail is closed by a path of unused arcs and the remaining arcs are
    spliced in, which keeps the order of the existing visits.
    """
    if not D.directed:
        raise GraphError("euler_circuit_through needs a digraph")
    _check_eulerian(D)
    seq = [D.index(x) for x in seq]
    if not seq:
        raise GraphError("empty vertex sequence")
    if trail is None:
        if len(seq) == 1:
            return euler_circuit(D, D.labels[seq[0]])
        trail = _discover_trail(D, seq)
        if trail is None:
            raise WalkError("no directed trail visits the vertices in the given order")
    trail = list(trail)
    used = [False] * D.m
    for i, h in enumerate(trail):
        if h & 1:
            raise WalkError(f"trail step {i} is not an outgoing half-arc")
        if used[h >> 1]:
            raise WalkError("trail repeats an arc")
        used[h >> 1] = True
        if i and D.incv[trail[i - 1] ^ 1] != D.incv[h]:
            raise WalkError(f"trail is broken at step {i}")
    if trail:
        vs = _vertex_seq(D, trail) + [D.incv[trail[-1] ^ 1]]
        if not contains_in_order(vs, seq):
            raise WalkError("supplied trail does not visit the vertices in order")
        a, b = D.incv[trail[0]], D.incv[trail[-1] ^ 1]
        if a != b:
            back = _bfs_path(D, b, a, used)
            if back is None:
                raise WalkError("cannot close the trail with unused arcs")
            for h in back:
                used[h >> 1] = True
            trail += back
    else:
        trail = _closed_trail_from(D, seq[0], used)
    circ = _splice_all(D, trail, used)
    if len(circ) != D.m:
        raise GraphError("digraph is not connected")
    W = make_walk(D, circ, directed=True)
    return W


# -- flows -----------------------------------------------------------------------


def _max_flow(D: Digraph, s: int, t: int, limit: int):
    """Unit-capacity Edmonds-Karp on the arcs of ``D``; stops at value ``limit``.

    Returns ``(value, flow)`` with ``flow[i]`` in {0, 1} per arc, plus the set
    of vertices reachable from ``s`` in the final residual graph."""
    flow = [0] * D.m
    value = 0
    while value < limit:
        prev = {s: None}
        q = deque([s])
        while q and t not in prev:
            v = q.popleft()
            for h in D.darts_at(v):
                i = h >> 1
                if h & 1 == 0 and flow[i] == 0:
                    w = D.incv[h ^ 1]
                elif h & 1 and flow[i] == 1:
                    w = D.incv[h ^ 1]
                else:
                    continue
                if w not in prev:
                    prev[w] = h
                    q.append(w)
        if t not in prev:
            return value, flow, set(prev)
        w = t
        while w != s:
            h = prev[w]
            flow[h >> 1] ^= 1
            w = D.incv[h]
        value += 1
    return value, flow, None


def _paths_from_flow(D: Digraph, s: int, t: int, arcs: set[int], k: int) -> list[list[int]]:
    """Decompose a unit flow of value ``k`` on ``arcs`` into ``k`` s-t paths,
    discarding cycles met along the way."""
    pool = set(arcs)
    paths = []
    for _ in range(k):
        stack: list[int] = []
        where = {s: 0}
        cur = s
        while cur != t:
            h = next(h for h in D.out_darts(cur) if (h >> 1) in pool)
            pool.discard(h >> 1)
            w = D.incv[h ^ 1]
            if w in where:
                # drop the cycle closed at w
                cut = where[w]
                for g in stack[cut:]:
                    del where[D.incv[g ^ 1]]
                del stack[cut:]
                where[w] = cut
            else:
                stack.append(h)
                where[w] = len(stack)
            cur = w
        paths.append(stack)
    return paths


@dataclass(frozen=True)
class PathPairFamily:
    s: int
    t: int
    forward: tuple[tuple[int, ...], ...]
    backward: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.forward)

    def arcs(self) -> list[int]:
        return [h >> 1 for p in self.forward + self.backward for h in p]


def arc_disjoint_path_pairs(D: Digraph, s, t, k: int) -> PathPairFamily:
    """``k`` arc-disjoint s-t paths and ``k`` t-s paths, all pairwise arc-disjoint.

    The forward paths come from an integral max flow; the backward ones from
    decomposing the arcs left over (a t-s flow of value ``k`` because every
    vertex is balanced) into paths and cycles."""
    if not D.directed:
        raise GraphError("arc_disjoint_path_pairs needs a digraph")
    _check_eulerian(D)
    s, t = D.index(s), D.index(t)
    if s == t:
        raise GraphError("s and t must differ")
    if k < 1:
        raise GraphError("k must be positive")
    value, flow, side = _max_flow(D, s, t, k)
    if value < k:
        size = sum(1 for e in D.edges if (D.incv[e] in side) != (D.incv[e + 1] in side))
        names = sorted(str(D.labels[v]) for v in side)
        raise CutConditionError(f"edge cut of size {size} < {2 * k} separates "
                                f"{{{', '.join(names)}}} from the rest", sorted(side), size)
    fwd_arcs = {i for i in range(D.m) if flow[i]}
    forward = _paths_from_flow(D, s, t, fwd_arcs, k)
    rest = set(range(D.m)) - {h >> 1 for p in forward for h in p}
    backward = _paths_from_flow(D, t, s, rest, k)
    return PathPairFamily(s, t, tuple(map(tuple, forward)), tuple(map(tuple, backward)))


def interlaces(G: Graph, W: ClosedWalk, x: int, y: int) -> bool:
    """The cyclic vertex sequence of ``W`` restricted to {x, y} contains x,y,x,y."""
    seq = [v for v in W.vertices(G) if v in (x, y)]
    if not seq:
        return False
    # reduce to runs
    runs = [seq[0]]
    for v in seq[1:]:
        if v != runs[-1]:
            runs.append(v)
    if len(runs) > 1 and runs[0] == runs[-1]:
        runs.pop()
    return len(runs) >= 4


def interlacing_euler_circuit(D: Digraph, s, t) -> ClosedWalk:
    """Directed euler circuit whose vertex sequence contains s, t, s, t."""
    fam = arc_disjoint_path_pairs(D, s, t, 2)
    (P1, P2), (Q1, Q2) = fam.forward, fam.backward
    trail = list(P1) + list(Q1) + list(P2) + list(Q2)
    W = euler_circuit_through(D, [D.labels[fam.s], D.labels[fam.t], D.labels[fam.s], D.labels[fam.t]], trail)
    W = W.starting_at(trail[0])
    if not interlaces(D, W, fam.s, fam.t):
        raise AssertionError("splicing lost the interlacement")
    return W


__all__ = [
    "euler_circuit", "random_euler_circuit", "all_euler_circuits", "euler_circuit_through",
    "arc_disjoint_path_pairs", "interlacing_euler_circuit", "interlaces", "PathPairFamily",
    "CutConditionError", "contains_in_order", "edge_of",
]
