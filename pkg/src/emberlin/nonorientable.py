"""Embeddings relative to circuit decompositions, nonorientable bi-eulerian
embeddings, and nonorientable directed embeddings with few faces."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Sequence

from .embedding import (Embedding, EmbeddingError, canonical_directed_embedding,
                        embedding_from_walks, is_directed_embedding)
from .graph import ClosedWalk, Digraph, Graph, GraphError, transition_graph

SEARCH_CAP = 10 ** 6


# -- blocks -----------------------------------------------------------------------------


def blocks(G: Graph) -> list[list[int]]:
    """Edge ids of every block (2-connected piece, bridge or loop)."""
    n = G.n
    disc = [-1] * n
    low = [0] * n
    out = []
    estack: list[int] = []
    time = 0
    for e in G.edges:
        if G.is_loop(e):
            out.append([e])
    for r in range(n):
        if disc[r] != -1:
            continue
        disc[r] = low[r] = time
        time += 1
        stack = [(r, -1, iter(G.darts_at(r)))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for h in it:
                e = h & ~1
                if e == pe or G.is_loop(e):
                    continue
                w = G.incv[h ^ 1]
                if disc[w] == -1:
                    estack.append(e)
                    disc[w] = low[w] = time
                    time += 1
                    stack.append((w, e, iter(G.darts_at(w))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append(e)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    blk = []
                    while True:
                        e = estack.pop()
                        blk.append(e)
                        if e == pe:
                            break
                    out.append(sorted(blk))
    return sorted(out)


def _is_cycle_block(G: Graph, blk) -> bool:
    verts: dict[int, int] = {}
    for e in blk:
        for h in (e, e + 1):
            verts[G.incv[h]] = verts.get(G.incv[h], 0) + 1
    return len(verts) == len(blk) and all(d == 2 for d in verts.values())


def is_tree_of_cycles(G: Graph) -> tuple[bool, list[list[int]]]:
    """Whether the connected graph ``G`` has only cycles (loops and digons
    included) as blocks; also returns the blocks."""
    if not G.is_connected():
        raise GraphError("graph is not connected")
    bl = blocks(G)
    return G.m > 0 and all(_is_cycle_block(G, b) for b in bl), bl


# -- realizability ----------------------------------------------------------------------


class _Parity:
    """Union-find with parities for x_a ^ x_b = c constraints."""

    def __init__(self, k):
        self.p = list(range(k))
        self.par = [0] * k

    def find(self, a):
        path = []
        while self.p[a] != a:
            path.append(a)
            a = self.p[a]
        acc = 0
        for x in reversed(path):
            acc ^= self.par[x]
            self.par[x] = acc
            self.p[x] = a
        return a

    def parity(self, a):
        self.find(a)
        return self.par[a] if self.p[a] != a else 0

    def join(self, a, b, c) -> bool:
        ra, rb = self.find(a), self.find(b)
        pa, pb = self.parity(a), self.parity(b)
        if ra == rb:
            return pa ^ pb == c
        self.p[ra] = rb
        self.par[ra] = pa ^ pb ^ c
        return True


def _orientable_walks(G: Graph, walks) -> bool:
    """Walks can be oriented so every doubly used edge is used once each way."""
    uses: dict[int, list[tuple[int, int]]] = {}
    for i, W in enumerate(walks):
        for g in W.darts:
            uses.setdefault(g >> 1, []).append((i, g & 1))
    uf = _Parity(len(walks))
    for lst in uses.values():
        if len(lst) == 2:
            (a, da), (b, db) = lst
            if not uf.join(a, b, 1 ^ da ^ db):
                return False
    return True


@dataclass(frozen=True)
class Realizability:
    realizable: bool
    orientable: bool
    nonorientable: bool
    reason: str = ""

    @property
    def verdict(self) -> str:
        if not self.realizable:
            return "not realizable"
        kinds = [k for k, ok in (("orientably", self.orientable), ("nonorientably", self.nonorientable)) if ok]
        return " and ".join(kinds) + " realizable"


def realizability_check(walks: Sequence[ClosedWalk], G: Graph) -> Realizability:
    """Whether ``G`` has an embedding with every walk as a face, and with
    which orientability."""
    walks = list(walks)
    count = [0] * G.m
    for W in walks:
        for g in W.darts:
            count[g >> 1] += 1
    if any(c > 2 for c in count):
        e = next(i for i, c in enumerate(count) if c > 2)
        return Realizability(False, False, False, f"edge {G.edge_names[e]!r} is used more than twice")
    trs = []
    for v in range(G.n):
        tr = transition_graph(G, walks, v)
        if not tr.is_subgraph_of_cycle():
            return Realizability(False, False, False,
                                 f"transitions at {G.labels[v]!r} are not a subgraph of a cycle")
        trs.append(tr)
    ori = _orientable_walks(G, walks)
    if not ori:
        return Realizability(True, False, True, "no consistent orientation of the walks")
    block_of = {}
    for i, b in enumerate(blocks(G)):
        for e in b:
            block_of[e] = i
    for v, tr in enumerate(trs):
        comp = {}
        for i, c in enumerate(tr.components()):
            for h in c:
                comp[h] = i
        hs = G.darts_at(v)
        for x in hs:
            for y in hs:
                if x < y and block_of[x & ~1] == block_of[y & ~1] and comp.get(x, -1 - x) != comp.get(y, -1 - y):
                    return Realizability(True, True, True)
    return Realizability(True, True, False, "every block meets each vertex inside one transition component")


# -- completing a circuit decomposition --------------------------------------------------


@dataclass(frozen=True, eq=False)
class RelativeEmbedding:
    """Embedding whose faces are the given inner walks plus the outer walks."""

    host: Graph
    inner: tuple[ClosedWalk, ...]
    outer: tuple[ClosedWalk, ...]
    embedding: Embedding
    exceptional: bool = False

    @property
    def t(self) -> int:
        return len(self.outer)

    @property
    def orientable(self) -> bool:
        return self.embedding.orientable

    @property
    def euler_genus(self) -> int:
        return self.embedding.euler_genus


def _check_decomposition(G: Graph, C):
    if G.m == 0:
        raise GraphError("graph is trivial")
    if not G.is_connected():
        raise GraphError("graph is not connected")
    used = [0] * G.m
    for W in C:
        if not W.darts:
            raise GraphError("empty walk in decomposition")
        for i, g in enumerate(W.darts):
            if G.incv[g] != G.incv[W.darts[i - 1] ^ 1]:
                raise GraphError("decomposition element is not a closed walk")
            used[g >> 1] += 1
    if any(u != 1 for u in used):
        raise GraphError("walks do not use every edge exactly once")


class _Completion:
    def __init__(self, G: Graph, C):
        self.G = G
        self.C = list(C)
        nd = 2 * G.m
        self.M = [0] * nd
        for W in self.C:
            d = W.darts
            for i in range(len(d)):
                a, g = d[i - 1] ^ 1, d[i]
                self.M[a], self.M[g] = g, a
        self.N = [0] * nd
        self.pairs = []
        for v in range(G.n):
            ps = sorted({tuple(sorted((h, self.M[h]))) for h in G.darts_at(v)})
            self.pairs.append(ps)
            k = len(ps)
            for i in range(k):
                q, p = ps[i][1], ps[(i + 1) % k][0]
                self.N[q], self.N[p] = p, q

    def hamiltonian_at(self, v) -> bool:
        hs = self.G.darts_at(v)
        x = hs[0]
        seen = 0
        while True:
            x = self.N[self.M[x]]
            seen += 2
            if x == hs[0]:
                break
            if seen > len(hs):
                return False
        return seen == len(hs)

    def orbits(self):
        nd = len(self.N)
        orb = [-1] * nd
        k = 0
        for g0 in range(nd):
            if orb[g0] != -1:
                continue
            g = g0
            while orb[g] == -1:
                orb[g] = k
                g = self.N[g ^ 1]
            k += 1
        return orb, k

    def walk_ids(self):
        orb, k = self.orbits()
        return [min(orb[g], orb[g ^ 1]) for g in range(len(orb))], k // 2

    def outer_walks(self) -> list[ClosedWalk]:
        nd = len(self.N)
        done = [False] * nd
        out = []
        for g0 in range(nd):
            if done[g0]:
                continue
            walk = []
            g = g0
            while not done[g]:
                done[g] = True
                walk.append(g)
                g = self.N[g ^ 1]
            for g in walk:
                done[g ^ 1] = True
            out.append(ClosedWalk(tuple(walk), False))
        return out

    def merge_all(self):
        while True:
            wid, t = self.walk_ids()
            if t <= 1:
                return
            step = None
            for v in range(self.G.n):
                seen = {}
                for h in self.G.darts_at(v):
                    a, b = min(h, self.N[h]), max(h, self.N[h])
                    w = wid[b]
                    if w not in seen:
                        seen[w] = (a, b)
                if len(seen) > 1:
                    (a, b), (c, d) = list(seen.values())[:2]
                    step = (v, a, b, c, d)
                    break
            if step is None:
                raise AssertionError("no vertex meets two outer walks in a connected graph")
            v, a, b, c, d = step
            for x, y, z, w in ((a, c, b, d), (a, d, b, c)):
                self.N[x], self.N[y], self.N[z], self.N[w] = y, x, w, z
                if self.hamiltonian_at(v):
                    break
            else:
                raise AssertionError("neither reconnection keeps the rotation a single cycle")

    def orientable(self) -> bool:
        return _orientable_walks(self.G, self.C + self.outer_walks())

    def options(self, v):
        """Every transition set at ``v`` completing the fixed ones to one cycle."""
        ps = self.pairs[v]
        first, rest = ps[0], ps[1:]
        out = []
        for perm in permutations(rest):
            for flips in product((0, 1), repeat=len(rest)):
                seq = [first] + [(p[1], p[0]) if f else p for p, f in zip(perm, flips)]
                opt = []
                for i in range(len(seq)):
                    opt.append((seq[i][1], seq[(i + 1) % len(seq)][0]))
                out.append(opt)
        return out

    def set_option(self, opt):
        for x, y in opt:
            self.N[x], self.N[y] = y, x

    def current(self, v):
        return [(h, self.N[h]) for h in self.G.darts_at(v) if h < self.N[h]]

    def good(self) -> bool:
        return self.walk_ids()[1] == 1 and not self.orientable()

    def search_nonorientable(self) -> bool:
        G = self.G
        verts = [v for v in range(G.n) if len(self.pairs[v]) > 1]
        opts = {v: self.options(v) for v in verts}
        saved = {v: self.current(v) for v in verts}

        def restore():
            for v in verts:
                self.set_option(saved[v])

        for v in verts:
            for o in opts[v]:
                self.set_option(o)
                if self.good():
                    return True
            restore()
        for i, v in enumerate(verts):
            for w in verts[i + 1:]:
                for o1 in opts[v]:
                    self.set_option(o1)
                    for o2 in opts[w]:
                        self.set_option(o2)
                        if self.good():
                            return True
                restore()
        total = 1
        for v in verts:
            total *= len(opts[v])
        if total > SEARCH_CAP:
            raise RuntimeError(f"nonorientable completion search needs {total} candidates")
        for combo in product(*(opts[v] for v in verts)):
            for o in combo:
                self.set_option(o)
            if self.good():
                return True
        restore()
        return False


def is_cycle_exception(G: Graph, C: Sequence[ClosedWalk]) -> bool:
    """``G`` is a tree of cycles and ``C`` is exactly its set of cycles."""
    ok, bl = is_tree_of_cycles(G)
    if not ok:
        return False
    block_of = {e: i for i, b in enumerate(bl) for e in b}
    size = {i: len(b) for i, b in enumerate(bl)}
    for W in C:
        ids = {block_of[g & ~1] for g in W.darts}
        if len(ids) != 1 or size[ids.pop()] != len(W.darts):
            return False
    return True


def complete_relative_one_outer(G: Graph, C: Sequence[ClosedWalk], require_nonorientable: bool = True) -> RelativeEmbedding:
    """Embed ``G`` with every walk of the circuit decomposition ``C`` as a
    face and exactly one further face, which is then an euler circuit.

    With ``require_nonorientable`` the embedding is nonorientable, except when
    ``G`` is a tree of cycles and ``C`` its cycles: there every such embedding
    is planar, and that one is returned with ``exceptional`` set.
    """
    if G.directed:
        G = G.underlying()
    C = [ClosedWalk(W.darts, False) for W in C]
    _check_decomposition(G, C)
    comp = _Completion(G, C)
    for v in range(G.n):
        if not comp.hamiltonian_at(v):
            raise AssertionError("initial transitions do not form a cycle")
    comp.merge_all()
    exceptional = is_cycle_exception(G, C)
    if require_nonorientable and not exceptional and comp.orientable():
        if not comp.search_nonorientable():
            raise AssertionError("no nonorientable completion found")
    outer = comp.outer_walks()
    if len(outer) != 1 or not outer[0].is_euler_circuit(G):
        raise AssertionError("outer face is not a single euler circuit")
    E = embedding_from_walks(G, C + outer)
    if require_nonorientable and not exceptional and E.orientable:
        raise AssertionError("completion is orientable")
    if E.euler_genus != 2 - G.n + G.m - (len(C) + 1):
        raise AssertionError("Euler genus does not match the face count")
    return RelativeEmbedding(G, tuple(C), tuple(outer), E, exceptional)


def bieulerian_nonorientable(G: Graph, T: ClosedWalk) -> Embedding:
    """Bi-eulerian embedding with ``T`` as a face and Euler genus ``m - n``;
    nonorientable unless ``G`` is a cycle."""
    if G.directed:
        G = G.underlying()
    if G.m == 0:
        raise GraphError("graph is trivial")
    R = complete_relative_one_outer(G, [T], require_nonorientable=True)
    E = R.embedding
    if not E.is_bieulerian() or E.euler_genus != G.m - G.n:
        raise AssertionError("expected a bi-eulerian embedding of Euler genus m - n")
    return E


# -- directed embeddings with few faces ------------------------------------------------------


def twist_arc(E: Embedding, a: int) -> Embedding:
    """Flip the signature of arc ``a`` (either half)."""
    F = E.twisted(a)
    if E.graph.directed and not is_directed_embedding(F):
        raise AssertionError("twisting broke the directed embedding")
    return F


def _twist_down(E: Embedding, s: int) -> Embedding:
    while E.num_faces > s:
        for e in E.graph.edges:
            x, y = E.edge_sides(e)
            if x != y:
                before = E.num_faces
                E = twist_arc(E, e)
                if E.num_faces != before - 1:
                    raise AssertionError("twist did not merge two faces")
                break
        else:
            raise AssertionError("no arc separates two faces")
    return E


def one_face_directed(D: Digraph) -> Embedding:
    """Directed embedding with a single face: start from the alternating
    all-positive embedding and twist arcs between distinct faces."""
    if not D.is_eulerian():
        raise GraphError("digraph is not eulerian")
    return _twist_down(canonical_directed_embedding(D), 1)


def interpolate_faces(D: Digraph, s: int, budget: int | None = None) -> Embedding:
    """Nonorientable directed embedding with exactly ``s`` faces."""
    from .oracle import enumerate_directed_embeddings

    if not D.is_eulerian():
        raise GraphError("digraph is not eulerian")
    if s < 1:
        raise ValueError("face count must be at least 1")
    if D.m == 0:
        if s == 1:
            return canonical_directed_embedding(D)
        raise ValueError("the trivial digraph has only a 1-face embedding")
    E = canonical_directed_embedding(D)
    if E.num_faces <= s:
        E = None
        for sigs in ("positive", "all"):
            c = enumerate_directed_embeddings(D, signatures=sigs, stop_at_least=s + 1, budget=budget)
            if "stop" in c.witnesses:
                E = c.witnesses["stop"]
                break
        if E is None:
            c = enumerate_directed_embeddings(D, signatures="all", stop_at_least=s,
                                              stop_nonorientable=True, budget=budget)
            W = c.witnesses.get("stop")
            if W is None or W.num_faces != s:
                raise ValueError(f"no nonorientable directed embedding with {s} faces")
            return W
    F = _twist_down(E, s)
    if F.orientable:
        raise AssertionError("twisted embedding is orientable")
    return F
