"""Necessary conditions for orientable bi-eulerian embeddings.

Degree census modulo 4, 2-edge cuts and their reductions, chains of digons and
the two-chain configurations ``F_{s,t}``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Digraph, Graph, GraphError, edge_of


def degree_census(G: Graph) -> tuple[int, bool]:
    """``(ell, ell is even)`` where ``ell`` counts vertices of degree 0 mod 4."""
    ell = len(G.zero_mod4_vertices())
    return ell, ell % 2 == 0


# -- 2-edge cuts ----------------------------------------------------------------


@dataclass(frozen=True)
class TwoEdgeCut:
    e: int
    f: int
    side1: tuple[int, ...]
    side2: tuple[int, ...]


def _cut_sides(G: Graph, e: int, f: int):
    comps = G.components(removed=(e, f))
    if len(comps) != 2:
        return None
    where = {}
    for i, c in enumerate(comps):
        for v in c:
            where[v] = i
    for x in (e, f):
        if where[G.incv[x]] == where[G.incv[x + 1]]:
            return None
    first = where[G.incv[e]]
    return tuple(comps[first]), tuple(comps[1 - first])


def enumerate_2edge_cuts(G: Graph) -> list[TwoEdgeCut]:
    """Every pair of edges whose removal leaves exactly two components with
    both edges crossing (naive pair removal)."""
    if not G.is_connected():
        raise GraphError("graph is not connected")
    out = []
    for e, f in combinations(G.edges, 2):
        sides = _cut_sides(G, e, f)
        if sides:
            out.append(TwoEdgeCut(e, f, *sides))
    return out


@dataclass(frozen=True, eq=False)
class Reduction:
    G1: Graph
    G2: Graph
    g1: int
    g2: int
    map1: dict  # half-edge of G1 -> half-edge of the original graph
    map2: dict


def _side_graph(G: Graph, side, h_a, h_b, name):
    """Induced subgraph on ``side`` plus a new edge joining halves ``h_a``, ``h_b``."""
    vs = list(side)
    pos = {v: i for i, v in enumerate(vs)}
    incv, names, hmap = [], [], {}
    for e in G.edges:
        u, w = G.incv[e], G.incv[e + 1]
        if u in pos and w in pos:
            hmap[len(incv)] = e
            hmap[len(incv) + 1] = e + 1
            incv.extend((pos[u], pos[w]))
            names.append(G.edge_names[e >> 1])
    if G.directed and h_a & 1:
        h_a, h_b = h_b, h_a
    g = len(incv)
    hmap[g], hmap[g + 1] = h_a, h_b
    incv.extend((pos[G.incv[h_a]], pos[G.incv[h_b]]))
    base = name
    while name in names:
        name += "'"
    names.append(name if name else base)
    cls = Digraph if G.directed else Graph
    return cls(tuple(G.labels[v] for v in vs), tuple(incv), tuple(names)), g, hmap


def reduce_2edge_cut(G: Graph, cut) -> Reduction:
    """Replace the cut edges ``e = e1 e2`` and ``f = f1 f2`` by ``{e1, f1}`` on
    one side and ``{e2, f2}`` on the other."""
    if isinstance(cut, TwoEdgeCut):
        e, f = cut.e, cut.f
    else:
        e, f = (edge_of(x) for x in cut)
    if e == f:
        raise GraphError("a 2-edge cut needs two distinct edges")
    sides = _cut_sides(G, e, f)
    if not sides:
        raise GraphError("edge pair is not a 2-edge cut")
    side1, side2 = sides
    s1 = set(side1)
    e1 = e if G.incv[e] in s1 else e + 1
    f1 = f if G.incv[f] in s1 else f + 1
    nm = f"{G.edge_names[e >> 1]}+{G.edge_names[f >> 1]}"
    G1, g1, m1 = _side_graph(G, side1, e1, f1, nm)
    G2, g2, m2 = _side_graph(G, side2, e1 ^ 1, f1 ^ 1, nm)
    return Reduction(G1, G2, g1, g2, m1, m2)


def two_edge_join(G1: Graph, g1: int, G2: Graph, g2: int, swap: bool = False):
    """Inverse of the reduction: delete ``g1`` and ``g2`` and reconnect their
    halves across.  Returns ``(G, map1, map2)`` mapping half-edges of the parts
    to half-edges of the join (the halves of ``g1``/``g2`` map to the halves of
    the two new edges)."""
    if G1.directed != G2.directed:
        raise GraphError("cannot join a graph with a digraph")
    g1, g2 = edge_of(g1), edge_of(g2)
    directed = G1.directed
    clash = set(G1.labels) & set(G2.labels)
    lab1 = [(1, x) if clash else x for x in G1.labels]
    lab2 = [(2, x) if clash else x for x in G2.labels]
    labels = lab1 + lab2
    off = G1.n
    incv, names = [], []
    map1, map2 = {}, {}
    taken = set()

    def fresh(nm):
        while nm in taken:
            nm += "'"
        taken.add(nm)
        return nm

    for e in G1.edges:
        if e == g1:
            continue
        map1[e], map1[e + 1] = len(incv), len(incv) + 1
        incv.extend((G1.incv[e], G1.incv[e + 1]))
        names.append(fresh(G1.edge_names[e >> 1]))
    for e in G2.edges:
        if e == g2:
            continue
        map2[e], map2[e + 1] = len(incv), len(incv) + 1
        incv.extend((G2.incv[e] + off, G2.incv[e + 1] + off))
        names.append(fresh(G2.edge_names[e >> 1]))
    if directed:
        pairs = [((1, g1), (2, g2 + 1)), ((2, g2), (1, g1 + 1))]
    elif swap:
        pairs = [((1, g1), (2, g2 + 1)), ((1, g1 + 1), (2, g2))]
    else:
        pairs = [((1, g1), (2, g2)), ((1, g1 + 1), (2, g2 + 1))]
    nm = fresh(f"{G1.edge_names[g1 >> 1]}|{G2.edge_names[g2 >> 1]}")
    for k, (a, b) in enumerate(pairs):
        h0 = len(incv)
        for j, (side, h) in enumerate((a, b)):
            if side == 1:
                map1[h] = h0 + j
                incv.append(G1.incv[h])
            else:
                map2[h] = h0 + j
                incv.append(G2.incv[h] + off)
        names.append(nm if k == 0 else fresh(nm + "'"))
    cls = Digraph if directed else Graph
    return cls(tuple(labels), tuple(incv), tuple(names)), map1, map2


@dataclass(frozen=True)
class BadCut:
    cut: TwoEdgeCut
    ell1: int
    ell2: int


def bad_cut_scan(G: Graph) -> list[BadCut]:
    """2-edge cuts whose reduction leaves an odd number of 0-mod-4 vertices on a side."""
    out = []
    for cut in enumerate_2edge_cuts(G):
        red = reduce_2edge_cut(G, cut)
        l1 = len(red.G1.zero_mod4_vertices())
        l2 = len(red.G2.zero_mod4_vertices())
        if l1 % 2 or l2 % 2:
            out.append(BadCut(cut, l1, l2))
    return out


# -- chains of digons -----------------------------------------------------------------


@dataclass(frozen=True)
class DigonChain:
    vertices: tuple[int, ...]          # rear to front
    digons: tuple[tuple[int, int], ...]  # edge pair joining consecutive vertices

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def rear(self) -> int:
        return self.vertices[0]

    @property
    def front(self) -> int:
        return self.vertices[-1]


def _parallel_classes(G: Graph):
    cls = defaultdict(list)
    for e in G.edges:
        u, w = G.incv[e], G.incv[e + 1]
        if u != w:
            cls[(min(u, w), max(u, w))].append(e)
    return cls


def digon_graph(G: Graph) -> dict[int, dict[int, tuple[int, int]]]:
    """Adjacency between degree-4 vertices joined by exactly two parallel edges."""
    adj: dict[int, dict[int, tuple[int, int]]] = {v: {} for v in range(G.n) if G.degree(v) == 4}
    for (u, w), es in _parallel_classes(G).items():
        if len(es) == 2 and u in adj and w in adj:
            adj[u][w] = adj[w][u] = (es[0], es[1])
    return adj


def _chain(adj, vs):
    return DigonChain(tuple(vs), tuple(adj[a][b] for a, b in zip(vs, vs[1:])))


def find_digon_chains(G: Graph) -> list[DigonChain]:
    """All maximal chains: whole path components of the digon graph, and for a
    cycle component every path that omits exactly one of its digons."""
    adj = digon_graph(G)
    seen = set()
    out = []
    for r in sorted(adj):
        if r in seen or not adj[r]:
            continue
        comp, stack = [], [r]
        seen.add(r)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        ends = [v for v in comp if len(adj[v]) == 1]
        if ends:
            a = min(ends)
            path = [a]
            prev = None
            while True:
                nxts = [w for w in adj[path[-1]] if w != prev]
                if not nxts:
                    break
                prev = path[-1]
                path.append(nxts[0])
            if path[0] > path[-1]:
                path.reverse()
            out.append(_chain(adj, path))
        else:
            # cycle component: walk it once in a fixed direction
            start = min(comp)
            order = [start, min(adj[start])]
            while len(order) < len(comp):
                order.append(next(w for w in adj[order[-1]] if w != order[-2]))
            c = len(order)
            for i in range(c):
                path = [order[(i + 1 + j) % c] for j in range(c)]
                if path[0] > path[-1]:
                    path.reverse()
                out.append(_chain(adj, path))
    return out


@dataclass(frozen=True)
class FstWitness:
    chain: DigonChain        # C, front vertex joined to both ends of the other chain
    other: DigonChain        # C-bar
    f1: int                  # edge front(C) -- rear(C-bar)
    f2: int                  # edge front(C) -- front(C-bar)

    @property
    def s(self) -> int:
        return self.chain.length

    @property
    def t(self) -> int:
        return self.other.length

    @property
    def forbidden(self) -> bool:
        return fst_forbidden(self.s, self.t)


def fst_forbidden(s: int, t: int) -> bool:
    """The configuration blocks orientable bi-eulerian embeddings unless
    ``t == 1`` or (``s == 1`` and ``t`` odd)."""
    return not (t == 1 or (s == 1 and t % 2 == 1))


def find_forbidden_configurations(G: Graph) -> list[FstWitness]:
    """Every ``F_{s,t}`` (``s, t >= 1``) present in ``G`` (sub-chains included),
    deduplicated by ``(s, t, f1, f2)``."""
    H = G.underlying()
    adj = digon_graph(H)
    out = {}
    for x in sorted(adj):
        if len(adj[x]) != 1:
            continue
        (y, pair), = adj[x].items()
        others = [h for h in H.darts_at(x) if edge_of(h) not in pair]
        if len(others) != 2 or any(H.is_loop(h) for h in others):
            continue
        ends = [H.incv[h ^ 1] for h in others]
        a, b = ends
        if a == b or a not in adj or b not in adj or x in (a, b):
            continue
        # C-bar: the digon path from a to b
        path = [a]
        prev = None
        ok = True
        while path[-1] != b:
            nxts = [w for w in adj[path[-1]] if w != prev]
            if not nxts or len(nxts) > 1 and prev is None:
                ok = False
                break
            prev = path[-1]
            path.append(nxts[0])
            if len(path) > len(adj):
                ok = False
                break
        if not ok or x in path:
            continue
        f_a, f_b = (edge_of(h) for h in others)
        if f_a > f_b:
            path.reverse()
            f_a, f_b = f_b, f_a
        cbar = _chain(adj, path)
        # C: every chain ending at x that runs back through y
        back = [x, y]
        prev = x
        while True:
            if any(v in path for v in back):
                break
            ch = _chain(adj, list(reversed(back)))
            w = FstWitness(ch, cbar, f_a, f_b)
            out[(w.s, w.t, f_a, f_b)] = w
            nxts = [w2 for w2 in adj[back[-1]] if w2 != prev]
            if not nxts or nxts[0] in back:
                break
            prev = back[-1]
            back.append(nxts[0])
    return [out[k] for k in sorted(out)]


# -- composite report ----------------------------------------------------------------


@dataclass
class AdmissibilityReport:
    ell: int
    parity_ok: bool
    bad_cuts: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)

    @property
    def forbidden_configs(self) -> list:
        return [w for w in self.witnesses if w.forbidden]

    @property
    def admissible(self) -> bool:
        return self.parity_ok and not self.bad_cuts

    @property
    def verdict(self) -> str:
        if not self.parity_ok:
            return "inadmissible(parity)"
        if self.bad_cuts:
            return "inadmissible(bad-cut)"
        if self.forbidden_configs:
            return "admissible_but_obstructed"
        return "admissible"

    def obstructed(self) -> bool:
        """Some necessary condition for an orientable bi-eulerian embedding fails."""
        return self.verdict != "admissible"


def admissibility(G: Graph) -> AdmissibilityReport:
    if not G.is_eulerian():
        raise GraphError("admissibility needs an eulerian (di)graph")
    ell, ok = degree_census(G)
    return AdmissibilityReport(ell, ok, bad_cut_scan(G), find_forbidden_configurations(G))


def edge_multiplicities(G: Graph) -> Counter:
    c = Counter()
    for e in G.edges:
        u, w = G.incv[e], G.incv[e + 1]
        c[(min(u, w), max(u, w))] += 1
    return c
