"""Exhaustive enumeration of embeddings of small graphs and digraphs.

These searches are the ground truth the constructive builders are checked
against; they share no code with the builders beyond the graph types.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial, prod

from . import kernels
from .embedding import Embedding
from .graph import ClosedWalk, Digraph, Graph, GraphError

DEFAULT_BUDGET = 10 ** 8


class BudgetExceeded(RuntimeError):
    pass


def budget_limit(budget: int | None = None) -> int:
    if budget is not None:
        return int(budget)
    env = os.environ.get("EMBERLIN_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


# -- candidate rotations ------------------------------------------------------------


def undirected_rotations(G: Graph, v: int) -> list[tuple[int, ...]]:
    """All cyclic orders of the half-edges at ``v``, first half-edge fixed."""
    d = G.darts_at(v)
    if not d:
        return [()]
    return [(d[0],) + p for p in permutations(d[1:])]


def directed_rotations(D: Digraph, v: int) -> list[tuple[int, ...]]:
    """All alternating cyclic orders at ``v``: the first outgoing half-arc is
    fixed, the other outgoing ones and all incoming ones are permuted."""
    outs, ins = D.out_darts(v), D.in_darts(v)
    if len(outs) != len(ins):
        raise GraphError("digraph is not balanced")
    if not outs:
        return [()]
    res = []
    for po in permutations(outs[1:]):
        o = (outs[0],) + po
        for pi in permutations(ins):
            r = []
            for g, h in zip(o, pi):
                r.extend((g, h))
            res.append(tuple(r))
    return res


def _increasing_in_classes(seq, cls) -> bool:
    last: dict = {}
    for g in seq:
        c = cls[g]
        if c in last and last[c] > g:
            return False
        last[c] = g
    return True


def reduced_directed_rotations(D: Digraph, v: int) -> list[tuple[int, ...]]:
    """Alternating rotations at ``v`` with the outgoing half-arcs of every
    class of parallel arcs in increasing order after the fixed first one.

    Permuting parallel arcs is an automorphism and can bring any rotation
    system into this form, so this keeps at least one member of every
    isomorphism class of directed embeddings (used where only face counts
    matter).
    """
    outs, ins = D.out_darts(v), D.in_darts(v)
    if len(outs) != len(ins):
        raise GraphError("digraph is not balanced")
    if not outs:
        return [()]
    cls = {g: (D.incv[g], D.incv[g ^ 1]) for g in outs}
    res = []
    for po in permutations(outs[1:]):
        o = (outs[0],) + po
        if not _increasing_in_classes(o, cls):
            continue
        for pi in permutations(ins):
            r = []
            for g, h in zip(o, pi):
                r.extend((g, h))
            res.append(tuple(r))
    return res


def count_directed_rotations(D: Digraph) -> int:
    return prod(factorial(k) * factorial(k - 1) if k else 1
                for k in (len(D.out_darts(v)) for v in range(D.n)))


def count_undirected_rotations(G: Graph) -> int:
    return prod(factorial(G.degree(v) - 1) if G.degree(v) else 1 for v in range(G.n))


def spanning_tree_edges(G: Graph) -> set[int]:
    """Edge ids of a BFS spanning forest (least half-edges first)."""
    seen = [False] * G.n
    tree = set()
    for r in range(G.n):
        if seen[r]:
            continue
        seen[r] = True
        q = deque([r])
        while q:
            v = q.popleft()
            for h in G.darts_at(v):
                w = G.incv[h ^ 1]
                if not seen[w]:
                    seen[w] = True
                    tree.add(h & ~1)
                    q.append(w)
    return tree


# -- census -----------------------------------------------------------------------------


@dataclass
class EmbeddingCensus:
    host: Graph
    mode: str
    hist: dict = field(default_factory=dict)
    bi_orientable: int = 0
    bi_nonorientable: int = 0
    witnesses: dict = field(default_factory=dict)
    traced: int = 0
    complete: bool = True

    @property
    def total(self) -> int:
        return sum(self.hist.values())

    def face_counts(self, orientable: bool | None = None) -> list[int]:
        return sorted({f for (f, o) in self.hist if orientable is None or o == orientable})

    def min_faces(self, orientable: bool | None = None):
        fc = self.face_counts(orientable)
        return fc[0] if fc else None

    def max_faces(self, orientable: bool | None = None):
        fc = self.face_counts(orientable)
        return fc[-1] if fc else None

    @property
    def has_bieulerian(self) -> bool:
        return self.bi_orientable + self.bi_nonorientable > 0


def _run_census(G: Graph, cands, free, mode, required=(), stop_bi=0, saturate=0,
                stop_at_least=0, budget=None, stop_nonorientable=False) -> EmbeddingCensus:
    total = prod(len(c) for c in cands) * (1 << len(free))
    limit = budget_limit(budget)
    early = bool(saturate or stop_at_least or stop_bi)
    if total > limit and not early:
        raise BudgetExceeded(f"{total} embeddings exceed the budget of {limit}")
    flat, start, count, deg = [], [], [], []
    for c in cands:
        start.append(len(flat))
        count.append(len(c))
        deg.append(len(c[0]))
        for r in c:
            flat.extend(r)
    nd = 2 * G.m
    res = kernels.census(nd, flat, start, count, deg, list(free), [0] * nd,
                         tuple(required), stop_bi, saturate, stop_at_least, int(stop_nonorientable),
                         limit if total > limit else 0)
    if res["aborted"]:
        raise BudgetExceeded(f"search traced {limit} of {total} embeddings without stopping")
    out = EmbeddingCensus(G, mode, dict(res["hist"]), int(res["bi_orientable"]),
                          int(res["bi_nonorientable"]), {}, int(res["traced"]),
                          not res["stopped"])
    for key, w in res["witness"].items():
        if w is None:
            continue
        idx, signs = w
        rot = tuple(cands[v][i] for v, i in enumerate(idx))
        sig = [1] * G.m
        for e, s in zip(free, signs):
            if s:
                sig[e] = -1
        out.witnesses[key] = Embedding(G, rot, tuple(sig))
    return out


def enumerate_directed_embeddings(D: Digraph, signatures: str = "positive", required: ClosedWalk | None = None,
                                  stop_bi: int = 0, saturate: bool = False, stop_at_least: int = 0,
                                  stop_nonorientable: bool = False, budget: int | None = None,
                                  reduced: bool = False) -> EmbeddingCensus:
    """Census of directed embeddings (alternating rotations).

    ``signatures="all"`` also runs over every signature vector with the
    spanning-tree edges fixed positive.  ``required`` restricts the tally to
    embeddings having that walk as a face.  With ``saturate`` the search stops
    once nonorientable embeddings with every face count in ``[1, m-n+1]`` have
    been seen (that interval is the most such embeddings can realise).
    ``stop_at_least`` stops at the first embedding with at least that many
    faces, recorded as the ``"stop"`` witness.
    """
    if not D.directed:
        raise GraphError("directed census needs a digraph")
    if not D.is_eulerian():
        raise GraphError("digraph is not eulerian")
    rot = reduced_directed_rotations if reduced else directed_rotations
    cands = [rot(D, v) for v in range(D.n)]
    free = []
    if signatures == "all":
        tree = spanning_tree_edges(D)
        free = [e >> 1 for e in D.edges if e not in tree]
    elif signatures != "positive":
        raise ValueError("signatures must be 'positive' or 'all'")
    req = tuple(required.darts) if required is not None else ()
    sat = max(D.m - D.n + 1, 0) if saturate else 0
    return _run_census(D, cands, free, "directed-" + signatures, req, stop_bi, sat, stop_at_least, budget,
                       stop_nonorientable)


def enumerate_embeddings(G: Graph, orientable_only: bool = True, stop_bi: int = 0,
                         budget: int | None = None) -> EmbeddingCensus:
    """Census of all embeddings of ``G`` (rotation systems, and unless
    ``orientable_only`` every signature class)."""
    if not G.is_connected():
        raise GraphError("graph is not connected")
    cands = [undirected_rotations(G, v) for v in range(G.n)]
    free = []
    if not orientable_only:
        tree = spanning_tree_edges(G)
        free = [e >> 1 for e in G.edges if e not in tree]
    mode = "orientable" if orientable_only else "all"
    return _run_census(G, cands, free, mode, (), stop_bi, 0, 0, budget)


def exists_one_face_orientable(G: Graph, budget: int | None = None) -> bool:
    if G.m == 0:
        return True
    c = enumerate_embeddings(G, orientable_only=True, budget=budget)
    return c.hist.get((1, True), 0) > 0


# -- bi-eulerian search ----------------------------------------------------------------


def _rotation_from_circuits(D: Digraph, beta, alpha) -> Embedding:
    nd = 2 * D.m
    nxt = [0] * nd
    for h, g in enumerate(beta):
        nxt[2 * g] = 2 * h + 1          # proface: leaving g follows arriving h
        nxt[2 * h + 1] = 2 * alpha[h]   # antiface: arriving h then leaving alpha(h)
    return Embedding.from_successors(D, nxt)


def directed_bieulerian(D: Digraph, node_limit: int = 0):
    """Whether ``D`` has a bi-eulerian directed embedding; returns
    ``(exists, witness embedding or None)``.  Raises ``BudgetExceeded`` when a
    node limit is given and reached."""
    if not D.is_eulerian():
        raise GraphError("digraph is not eulerian")
    tail = [D.incv[2 * a] for a in range(D.m)]
    head = [D.incv[2 * a + 1] for a in range(D.m)]
    beta, alpha, nodes, aborted = kernels.directed_bieulerian(D.n, tail, head, node_limit)
    if aborted:
        raise BudgetExceeded(f"bi-eulerian search exceeded {node_limit} nodes")
    if beta is None:
        return False, None
    E = _rotation_from_circuits(D, beta, alpha)
    if not E.is_bieulerian():
        raise AssertionError("search returned a non bi-eulerian rotation")
    return True, E


def eulerian_orientations(G: Graph):
    """Eulerian orientations up to permuting parallel edges and reversing every
    edge.  Yields ``(Digraph, flipped)`` where ``flipped[e]`` says whether edge
    ``e`` runs from its half 1 to its half 0."""
    classes: dict = {}
    for e in G.edges:
        u, w = G.incv[e], G.incv[e + 1]
        if u != w:
            classes.setdefault((min(u, w), max(u, w)), []).append(e)
    keys = sorted(classes)
    bal = [0] * G.n
    choice = [0] * len(keys)

    def emit():
        flipped = [False] * G.m
        incv = list(G.incv)
        for (u, w), j in zip(keys, choice):
            es = classes[(u, w)]
            for i, e in enumerate(es):
                src = u if i < j else w
                if G.incv[e] != src:
                    flipped[e >> 1] = True
                    incv[e], incv[e + 1] = incv[e + 1], incv[e]
        return Digraph(G.labels, tuple(incv), G.edge_names), flipped

    # remaining capacity per vertex for pruning
    rest = [[0] * G.n for _ in range(len(keys) + 1)]
    for i in range(len(keys) - 1, -1, -1):
        rest[i] = list(rest[i + 1])
        u, w = keys[i]
        k = len(classes[keys[i]])
        rest[i][u] += k
        rest[i][w] += k

    def rec(i):
        if i == len(keys):
            if all(b == 0 for b in bal):
                rev = [len(classes[k]) - j for k, j in zip(keys, choice)]
                if choice <= rev:
                    yield emit()
            return
        u, w = keys[i]
        k = len(classes[keys[i]])
        for j in range(k + 1):
            choice[i] = j
            bal[u] += j - (k - j)
            bal[w] -= j - (k - j)
            if all(abs(bal[x]) <= rest[i + 1][x] for x in (u, w)):
                yield from rec(i + 1)
            bal[u] -= j - (k - j)
            bal[w] += j - (k - j)

    yield from rec(0)


def orientable_bieulerian(G: Graph, node_limit: int = 0):
    """Whether the undirected graph ``G`` has an orientable bi-eulerian
    embedding, via its eulerian orientations: orienting every edge along one
    face turns such an embedding into a bi-eulerian directed embedding and
    back.  Returns ``(exists, witness embedding of G or None)``."""
    if not G.is_eulerian():
        raise GraphError("graph is not eulerian")
    for D, flipped in eulerian_orientations(G):
        ok, E = directed_bieulerian(D, node_limit)
        if not ok:
            continue
        def back(h):
            return h ^ 1 if flipped[h >> 1] else h
        rot = tuple(tuple(back(h) for h in r) for r in E.rotation)
        W = Embedding(G, rot, (1,) * G.m)
        if not (W.orientable and W.is_bieulerian()):
            raise AssertionError("orientation witness does not transfer")
        return True, W
    return False, None


def nonorientable_directed_face_counts(D: Digraph, budget: int | None = None):
    """Face counts of nonorientable directed embeddings; returns
    ``(counts, complete)`` where ``complete`` is False when the search stopped
    early because every count in ``[1, m-n+1]`` had already been seen."""
    c = enumerate_directed_embeddings(D, signatures="all", saturate=True, budget=budget, reduced=True)
    return c.face_counts(False), c.complete
