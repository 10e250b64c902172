"""Orientable directed embeddings built by vertex identification.

Start from a directed cycle whose single face on each side is the target
euler circuit, then merge vertices two or three at a time.  Every merge only
changes the successor of a few incoming half-arcs, so faces other than the
tracked antifaces survive untouched; each step is re-traced and compared with
the predicted face set.

Conventions: an antiface arrives on an incoming half-arc ``h`` and leaves on
``nxt[h]``; a proface leaves on ``g`` where ``nxt[g]`` is the half-arc it
arrived on.  Faces are tuples of leaving (even) half-arcs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .embedding import Embedding, EmbeddingError
from .graph import ClosedWalk, Digraph, GraphError


class SurgeryError(ValueError):
    """Precondition of a vertex identification is violated."""


class PatternError(ValueError):
    """No occurrence selection matches any available pattern."""


# -- vertex identifications --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class VertexIdentification:
    """Surjection ``f`` from the vertices of ``source`` onto those of
    ``target``; both digraphs have the same half-arcs."""

    source: Digraph
    target: Digraph
    f: tuple[int, ...]

    def __post_init__(self):
        S, T = self.source, self.target
        if len(self.f) != S.n or S.m != T.m:
            raise GraphError("identification does not match the digraphs")
        if set(self.f) != set(range(T.n)):
            raise GraphError("identification is not surjective")
        for h in S.half_edges:
            if T.incv[h] != self.f[S.incv[h]]:
                raise GraphError(f"half-arc {h} is not carried by the identification")

    @classmethod
    def collapse(cls, D: Digraph, f: Sequence[int], labels: Sequence | None = None) -> "VertexIdentification":
        """Build ``D/f``; unless given, a target vertex takes the label of its
        least source vertex."""
        k = max(f) + 1 if len(f) else 0
        if labels is None:
            first = {}
            for v, w in enumerate(f):
                first.setdefault(w, D.labels[v])
            labels = [first[w] for w in range(k)]
        F = Digraph(tuple(labels), tuple(f[v] for v in D.incv), D.edge_names)
        return cls(D, F, tuple(f))

    def fiber(self, w: int) -> list[int]:
        return [v for v, x in enumerate(self.f) if x == w]

    def fibers(self) -> list[list[int]]:
        out = [[] for _ in range(self.target.n)]
        for v, w in enumerate(self.f):
            out[w].append(v)
        return out

    @property
    def exceptional(self) -> list[int]:
        """Target vertices with a fiber of even size."""
        return [w for w, fb in enumerate(self.fibers()) if len(fb) % 2 == 0]

    def compose(self, other: "VertexIdentification") -> "VertexIdentification":
        """``other`` after ``self``."""
        if other.source is not self.target:
            raise GraphError("identifications do not chain")
        return VertexIdentification(self.source, other.target, tuple(other.f[w] for w in self.f))


# -- face tracing on raw successor arrays --------------------------------------------------


def _inverse(nxt):
    prv = [0] * len(nxt)
    for h, g in enumerate(nxt):
        prv[g] = h
    return prv


def _trace(nxt, step):
    seen = [False] * len(nxt)
    faces = []
    for g0 in range(0, len(nxt), 2):
        if seen[g0]:
            continue
        walk = []
        g = g0
        while not seen[g]:
            seen[g] = True
            walk.append(g)
            g = step[g ^ 1]
        faces.append(tuple(walk))
    return faces


def _canon(walk) -> tuple:
    """Rotation starting at the least half-arc (half-arcs on a directed face
    are distinct)."""
    i = walk.index(min(walk))
    return tuple(walk[i:]) + tuple(walk[:i])


def antifaces_of(nxt) -> list[tuple]:
    return [_canon(w) for w in _trace(nxt, nxt)]


def profaces_of(nxt) -> list[tuple]:
    return [_canon(w) for w in _trace(nxt, _inverse(nxt))]


def _check_alternating(D: Digraph, nxt):
    if sorted(nxt) != list(range(2 * D.m)):
        raise EmbeddingError("successor array is not a permutation")
    for h, g in enumerate(nxt):
        if D.incv[h] != D.incv[g]:
            raise EmbeddingError(f"successor of {h} lies at another vertex")
        if (h & 1) == (g & 1):
            raise EmbeddingError("rotation does not alternate in and out")


# -- oriented directed embeddings ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class OrientedDirectedEmbedding:
    """All-positive directed embedding given by rotation successors, with a
    distinguished set of tracked antifaces."""

    digraph: Digraph
    nxt: tuple[int, ...]
    tracked: tuple[ClosedWalk, ...] = ()

    def __post_init__(self):
        _check_alternating(self.digraph, self.nxt)
        anti = set(antifaces_of(self.nxt))
        for A in self.tracked:
            if _canon(A.darts) not in anti:
                raise EmbeddingError("tracked walk is not an antiface")

    @cached_property
    def embedding(self) -> Embedding:
        return Embedding.from_successors(self.digraph, self.nxt)

    def antifaces(self) -> list[ClosedWalk]:
        return [ClosedWalk(w, True) for w in antifaces_of(self.nxt)]

    def profaces(self) -> list[ClosedWalk]:
        return [ClosedWalk(w, True) for w in profaces_of(self.nxt)]

    @property
    def num_faces(self) -> int:
        if self.digraph.m == 0:
            return 1
        return len(antifaces_of(self.nxt)) + len(profaces_of(self.nxt))

    def has_proface(self, T: ClosedWalk) -> bool:
        return _canon(T.darts) in set(profaces_of(self.nxt))

    def is_bieulerian(self) -> bool:
        return self.num_faces == 2 and all(len(w) == self.digraph.m
                                          for w in antifaces_of(self.nxt) + profaces_of(self.nxt))

    def mirrored(self) -> "OrientedDirectedEmbedding":
        """Reverse every rotation; profaces and antifaces swap roles, so the
        tracked set is dropped."""
        return OrientedDirectedEmbedding(self.digraph, tuple(_inverse(self.nxt)), ())

    def __repr__(self):
        return (f"OrientedDirectedEmbedding(n={self.digraph.n}, m={self.digraph.m}, "
                f"faces={self.num_faces}, tracked={len(self.tracked)})")


# -- surgery core -----------------------------------------------------------------------------


class _Work:
    """Mutable state for a run of identifications: vertex of every half-arc,
    rotation successors and tracked antifaces."""

    def __init__(self, incv, nxt, tracked):
        self.incv = list(incv)
        self.nxt = list(nxt)
        self.tracked = [_canon(t) for t in tracked]

    def passage(self, walk, v):
        """First passage of ``walk`` through ``v``: (position, arriving h, leaving g)."""
        for j, g in enumerate(walk):
            if self.incv[g] == v:
                return j, walk[j - 1] ^ 1, g
        raise SurgeryError(f"face does not pass through vertex {v}")

    def merge(self, keep, others):
        others = set(others)
        for h, v in enumerate(self.incv):
            if v in others:
                self.incv[h] = keep

    def _apply(self, vs, walks, cyc_h, cyc_g, predicted):
        """Merge ``vs`` into ``vs[0]``, set ``nxt[cyc_h[i]] = cyc_g[i]``, replace
        ``walks`` by ``predicted`` and check the re-traced faces."""
        anti0 = antifaces_of(self.nxt)
        pro0 = sorted(profaces_of(self.nxt))
        self.merge(vs[0], vs[1:])
        for h, g in zip(cyc_h, cyc_g):
            self.nxt[h] = g
        removed = {_canon(w) for w in walks}
        predicted = [_canon(p) for p in predicted]
        expect = sorted([a for a in anti0 if a not in removed] + predicted)
        if sorted(antifaces_of(self.nxt)) != expect or sorted(profaces_of(self.nxt)) != pro0:
            raise AssertionError("identification produced unexpected faces")
        self.tracked = [t for t in self.tracked if t not in removed] + predicted
        return predicted

    def identify_two(self, v1, v2, A1, A2):
        if v1 == v2:
            raise SurgeryError("vertices to identify must be distinct")
        A1, A2 = _canon(A1), _canon(A2)
        _, h1, g1 = self.passage(A1, v1)
        _, h2, g2 = self.passage(A2, v2)
        if A1 != A2:
            p = _rot(A1, g1) + _rot(A2, g2)
            pred = [p]
        else:
            A = _rot(A1, g1)
            k = A.index(g2)
            pred = [A[:k], A[k:]]
        return self._apply((v1, v2), {A1, A2}, (h1, h2), (g2, g1), pred)

    def identify_three(self, vs, As):
        if len(set(vs)) != 3:
            raise SurgeryError("vertices to identify must be distinct")
        As = [_canon(a) for a in As]
        distinct = len(set(As))
        order = [0, 1, 2]
        if distinct == 2:
            odd = next(i for i in range(3) if As.count(As[i]) == 1)
            order = [odd] + [i for i in range(3) if i != odd]
        elif distinct == 1:
            pos = [self.passage(As[0], vs[i])[0] for i in range(3)]
            order = sorted(range(3), key=lambda i: pos[i])
        keep = vs[0]
        vs = [vs[i] for i in order]
        As = [As[i] for i in order]
        pas = [self.passage(As[i], vs[i]) for i in range(3)]
        h = [p[1] for p in pas]
        g = [p[2] for p in pas]
        if distinct == 3:
            pred = [_rot(As[0], g[0]) + _rot(As[1], g[1]) + _rot(As[2], g[2])]
        elif distinct == 2:
            A = _rot(As[1], g[1])
            k = A.index(g[2])
            pred = [_rot(As[0], g[0]) + A[:k], A[k:]]
        else:
            A = _rot(As[0], g[0])
            k2, k3 = A.index(g[1]), A.index(g[2])
            pred = [A[:k2] + A[k3:] + A[k2:k3]]
        merged = [keep] + [v for v in vs if v != keep]
        return self._apply(merged, set(As), h, (g[1], g[2], g[0]), pred)


def _rot(walk, g):
    i = walk.index(g)
    return tuple(walk[i:]) + tuple(walk[:i])


def _retarget(Phi: OrientedDirectedEmbedding, W: _Work, keep, gone) -> OrientedDirectedEmbedding:
    D = Phi.digraph
    f, k = [], 0
    ids = {}
    for v in range(D.n):
        if v in gone:
            f.append(None)
        else:
            ids[v] = k
            f.append(k)
            k += 1
    f = [ids[keep] if x is None else x for x in f]
    VI = VertexIdentification.collapse(D, f)
    return OrientedDirectedEmbedding(VI.target, tuple(W.nxt), tuple(ClosedWalk(t, True) for t in W.tracked))


def _check_antiface_at(Phi, v, A):
    if _canon(A.darts) not in set(antifaces_of(Phi.nxt)):
        raise SurgeryError("chosen face is not an antiface")
    if not any(Phi.digraph.incv[g] == v for g in A.darts):
        raise SurgeryError(f"antiface is not incident with vertex {v}")


def _start(Phi, As):
    tracked = list(Phi.tracked)
    for A in As:
        if all(_canon(A.darts) != _canon(t.darts) for t in tracked):
            tracked.append(A)
    return _Work(Phi.digraph.incv, Phi.nxt, [t.darts for t in tracked])


def identify_two(Phi: OrientedDirectedEmbedding, v1: int, v2: int, A1: ClosedWalk, A2: ClosedWalk) -> OrientedDirectedEmbedding:
    """Merge ``v1`` and ``v2`` (the merged vertex keeps the label of ``v1``).
    Distinct antifaces ``A1, A2`` become one antiface; equal ones split in two."""
    for v, A in ((v1, A1), (v2, A2)):
        _check_antiface_at(Phi, v, A)
    W = _start(Phi, (A1, A2))
    W.identify_two(v1, v2, A1.darts, A2.darts)
    return _retarget(Phi, W, v1, {v2})


def identify_three(Phi: OrientedDirectedEmbedding, v1: int, v2: int, v3: int,
                   A1: ClosedWalk, A2: ClosedWalk, A3: ClosedWalk) -> OrientedDirectedEmbedding:
    """Merge three vertices without increasing the number of antifaces built
    from ``A1, A2, A3``."""
    for v, A in ((v1, A1), (v2, A2), (v3, A3)):
        _check_antiface_at(Phi, v, A)
    W = _start(Phi, (A1, A2, A3))
    W.identify_three((v1, v2, v3), (A1.darts, A2.darts, A3.darts))
    return _retarget(Phi, W, v1, {v2, v3})


def _odd_identification(W: _Work, fibers):
    """Collapse every fiber in turn (targets in increasing order).  Within a
    fiber vertices are taken by first occurrence along the tracked antifaces,
    three at a time, with the pair step (even fibers) last."""
    for fb in fibers:
        if len(fb) < 2:
            continue
        members = set(fb)
        order = []
        walks = sorted(W.tracked)
        for t in walks:
            for g in t:
                v = W.incv[g]
                if v in members and v not in order:
                    order.append(v)
        if len(order) != len(members):
            missing = sorted(members - set(order))
            raise SurgeryError(f"vertices {missing} are not incident with a tracked antiface")

        def face_at(v):
            return min(t for t in W.tracked if any(W.incv[g] == v for g in t))

        cur, rest = order[0], order[1:]
        while len(rest) >= 2:
            a, b = rest[0], rest[1]
            rest = rest[2:]
            W.identify_three((cur, a, b), (face_at(cur), face_at(a), face_at(b)))
        if rest:
            W.identify_two(cur, rest[0], face_at(cur), face_at(rest[0]))


def apply_odd_identification(Phi: OrientedDirectedEmbedding, f: VertexIdentification,
                             tracked: Sequence[ClosedWalk] | None = None) -> OrientedDirectedEmbedding:
    """Embedding of ``f.target`` obtained by collapsing every fiber of ``f``.
    With ``l`` exceptional vertices the tracked antifaces grow by at most ``l``;
    every other face survives with the same half-arcs."""
    if f.source is not Phi.digraph and f.source.incv != Phi.digraph.incv:
        raise SurgeryError("identification does not start at this digraph")
    tracked = Phi.tracked if tracked is None else tuple(tracked)
    anti = set(antifaces_of(Phi.nxt))
    for A in tracked:
        if _canon(A.darts) not in anti:
            raise SurgeryError("tracked walk is not an antiface")
    W = _Work(Phi.digraph.incv, Phi.nxt, [A.darts for A in tracked])
    before = len(W.tracked)
    fibers = [sorted(fb) for fb in f.fibers()]
    _odd_identification(W, fibers)
    if len(W.tracked) > before + len(f.exceptional):
        raise AssertionError("antiface budget exceeded")
    return OrientedDirectedEmbedding(f.target, tuple(W.nxt), tuple(ClosedWalk(t, True) for t in W.tracked))


# -- lifting an euler circuit to a cycle -----------------------------------------------------


def lift_to_cycle(D: Digraph, T: ClosedWalk):
    """Directed cycle ``C`` on the half-arcs of ``D`` with ``C/f = D`` and
    cycle walk ``Z`` mapping to ``T``.  Vertex ``i`` of ``C`` is where ``T``
    leaves on ``T[i]``; it is labelled ``(label, j)`` for the ``j``-th visit."""
    if not D.directed:
        raise GraphError("need a digraph")
    if not T.directed or not T.is_euler_circuit(D) or any(g & 1 for g in T.darts):
        raise GraphError("T is not a directed euler circuit")
    m = D.m
    incv = [0] * (2 * m)
    f, labels, seen = [], [], {}
    for i, g in enumerate(T.darts):
        v = D.incv[g]
        j = seen.get(v, 0)
        seen[v] = j + 1
        labels.append((D.labels[v], j))
        f.append(v)
        incv[g] = i
        incv[T.darts[i - 1] ^ 1] = i
    C = Digraph(tuple(labels), tuple(incv), D.edge_names)
    return C, VertexIdentification(C, D, tuple(f)), ClosedWalk(T.darts, True)


def cycle_embedding(C: Digraph, Z: ClosedWalk) -> OrientedDirectedEmbedding:
    """Planar embedding of a directed cycle; ``Z`` bounds both faces and the
    antiface is tracked."""
    nxt = [0] * (2 * C.m)
    for i, g in enumerate(Z.darts):
        h = Z.darts[i - 1] ^ 1
        nxt[g], nxt[h] = h, g
    return OrientedDirectedEmbedding(C, tuple(nxt), (Z,))


# -- drivers -------------------------------------------------------------------------------


def _finish(E: OrientedDirectedEmbedding, T: ClosedWalk) -> OrientedDirectedEmbedding:
    if not E.has_proface(T):
        raise AssertionError("the prescribed circuit is not a proface")
    from .embedding import directed_orientability_via_2coloring
    ok, _ = directed_orientability_via_2coloring(E.embedding, E.digraph)
    if not ok:
        raise AssertionError("result is not 2-face-colorable")
    return E


def embed_max_genus(D: Digraph, T: ClosedWalk) -> OrientedDirectedEmbedding:
    """Orientable directed embedding with ``T`` as a proface and at most
    ``l + 1`` antifaces, ``l`` the number of vertices of degree 0 mod 4."""
    C, f, Z = lift_to_cycle(D, T)
    E = apply_odd_identification(cycle_embedding(C, Z), f)
    ell = len(D.zero_mod4_vertices())
    if E.num_faces > ell + 2:
        raise AssertionError("face bound violated")
    return _finish(E, T)


def embed_bieulerian_2mod4(D: Digraph, T: ClosedWalk) -> OrientedDirectedEmbedding:
    """Bi-eulerian directed embedding with ``T`` as a face, for digraphs with
    every degree 2 mod 4."""
    bad = [D.labels[v] for v in range(D.n) if D.degree(v) % 4 != 2]
    if bad:
        raise GraphError(f"vertices {bad} do not have degree 2 mod 4")
    E = embed_max_genus(D, T)
    if not E.is_bieulerian():
        raise AssertionError("expected two euler-circuit faces")
    return E


# -- patterns ---------------------------------------------------------------------------------


def _rg(seq) -> tuple:
    """Restricted growth form: symbols renamed by first appearance."""
    names = {}
    return tuple(names.setdefault(x, len(names)) for x in seq)


@dataclass(frozen=True)
class PatternMatch:
    """Positions along ``T`` (increasing) and, for each, the index into the
    pattern it realizes; ``assignment`` sends pattern symbols to vertices."""

    positions: tuple[int, ...]
    pattern_index: tuple[int, ...]
    assignment: dict = field(hash=False)


def pattern_match(D: Digraph, T: ClosedWalk, S: Sequence[int], xi: Sequence) -> PatternMatch | None:
    """Pick two visits of every vertex of ``S`` along ``T`` so that, read
    cyclically, they follow the cyclic pattern ``xi`` up to renaming symbols.

    Returns the lexicographically least choice of positions, or None."""
    S = set(S)
    L = len(xi)
    if L != 2 * len(S):
        return None
    if L == 0:
        return PatternMatch((), (), {})
    if any(_rg(xi).count(k) != 2 for k in set(_rg(xi))):
        return None
    rots = {}
    for r in range(L):
        rots.setdefault(_rg(tuple(xi[r:]) + tuple(xi[:r])), r)
    prefixes = {key[:i] for key in rots for i in range(L + 1)}
    seq = T.vertices(D)
    cand = [i for i, v in enumerate(seq) if v in S]
    count = dict.fromkeys(S, 0)
    chosen = []

    def rec(start):
        if len(chosen) == L:
            return True
        need = L - len(chosen)
        for idx in range(start, len(cand) - need + 1):
            p = cand[idx]
            v = seq[p]
            if count[v] == 2:
                continue
            chosen.append(p)
            if _rg(seq[q] for q in chosen) in prefixes:
                count[v] += 1
                if rec(idx + 1):
                    return True
                count[v] -= 1
            chosen.pop()
        return False

    if not rec(0):
        return None
    r = rots[_rg(seq[p] for p in chosen)]
    idx = tuple((j + r) % L for j in range(L))
    assignment = {xi[idx[j]]: seq[p] for j, p in enumerate(chosen)}
    return PatternMatch(tuple(chosen), idx, assignment)


def _reverse_digraph(H: Digraph) -> Digraph:
    incv = list(H.incv)
    for a in range(0, len(incv), 2):
        incv[a], incv[a + 1] = incv[a + 1], incv[a]
    return Digraph(H.labels, tuple(incv), H.edge_names)


def host_patterns(H: Digraph, EH: Embedding):
    """The four candidate patterns of a bi-eulerian directed embedding of the
    4-regular digraph ``H``: each face and its reverse.  Yields ``(host
    digraph, successor array, face walk, vertex sequence)``, the host being
    ``H`` reversed for the reversed faces."""
    if not EH.is_bieulerian():
        raise EmbeddingError("host embedding is not bi-eulerian")
    if any(H.degree(v) != 4 for v in range(H.n)):
        raise GraphError("host digraph must be 4-regular")
    nxt = list(EH.nxt)
    _check_alternating(H, nxt)
    faces = profaces_of(nxt) + antifaces_of(nxt)
    Hr = _reverse_digraph(H)
    nxt_r = [0] * len(nxt)
    for h, g in enumerate(nxt):
        nxt_r[h ^ 1] = g ^ 1
    for F in faces:
        yield H, nxt, F, tuple(H.incv[g] for g in F)
    for F in faces:
        # the head half of arc g in H is the tail half of g in the reverse
        Fr = tuple(reversed(F))
        yield Hr, nxt_r, Fr, tuple(Hr.incv[g] for g in Fr)


def _seeded(C: Digraph, Z: ClosedWalk, match: PatternMatch, Hd: Digraph, nxt_h, W) -> tuple[OrientedDirectedEmbedding, VertexIdentification]:
    """Merge the matched visits of ``C`` pairwise (same pattern symbol) and
    give the merged vertices the rotation of the host, transported along the
    correspondence between segments of ``Z`` and arcs of the host face ``W``."""
    T = Z.darts
    P = match.positions
    L = len(P)
    phi = {}
    for j in range(L):
        k = match.pattern_index[j]
        w = W[k]
        phi[w] = T[P[j]]
        nxt_pos = P[(j + 1) % L]
        phi[w ^ 1] = T[nxt_pos - 1] ^ 1
    nxt = [0] * (2 * C.m)
    for i, g in enumerate(T):
        h = T[i - 1] ^ 1
        nxt[g], nxt[h] = h, g
    for a, b in phi.items():
        nxt[b] = phi[nxt_h[a]]
    # merge visits carrying the same host vertex
    group = {}
    for j in range(L):
        hv = Hd.incv[W[match.pattern_index[j]]]
        group.setdefault(hv, []).append(P[j])
    f = list(range(C.n))
    for ps in group.values():
        for p in ps[1:]:
            f[p] = ps[0]
    keep = sorted(set(f))
    ren = {v: i for i, v in enumerate(keep)}
    f = [ren[x] for x in f]
    VI = VertexIdentification.collapse(C, f)
    E = OrientedDirectedEmbedding(VI.target, tuple(nxt))
    if not E.is_bieulerian():
        raise AssertionError("seeded embedding is not bi-eulerian")
    if not E.has_proface(Z):
        E = E.mirrored()
    if not E.has_proface(Z):
        raise AssertionError("cycle walk is not a face of the seeded embedding")
    other = [A for A in E.antifaces()]
    return OrientedDirectedEmbedding(E.digraph, E.nxt, tuple(other)), VI


def _finish_pattern(D, T, C, Z, f, match, Hd, nxt_h, W):
    E1, f1 = _seeded(C, Z, match, Hd, nxt_h, W)
    # f factors through f1
    g = [None] * f1.target.n
    for v, w in enumerate(f1.f):
        g[w] = f.f[v]
    f2 = VertexIdentification(f1.target, D, tuple(g))
    if f2.exceptional:
        raise AssertionError("remaining identification is not odd")
    E = apply_odd_identification(E1, f2)
    if not E.is_bieulerian():
        raise AssertionError("expected two euler-circuit faces")
    return _finish(E, T)


def dip4_host():
    """The digraph with arcs ``a1, a2: u -> v`` and ``b1, b2: v -> u`` and its
    bi-eulerian embedding with faces ``(u a1 v b1 u a2 v b2)`` (pro) and
    ``(u a1 v b2 u a2 v b1)`` (anti)."""
    from .generators import gen_dip4
    H = gen_dip4()
    a1, b1, a2, b2 = (H.edge_by_name(x) for x in ("a1", "b1", "a2", "b2"))
    nxt = [0] * 8
    # u: a1 out, b2 in, a2 out, b1 in ; antiface arrives on b1 leaves a1, arrives b2 leaves a2
    # v: arriving a1 leaves b2, arriving a2 leaves b1
    for h, g in ((b1 + 1, a1), (b2 + 1, a2), (a1 + 1, b2), (a2 + 1, b1)):
        nxt[h] = g
    for g, h in ((a1, b2 + 1), (a2, b1 + 1), (b1, a1 + 1), (b2, a2 + 1)):
        nxt[g] = h
    E = OrientedDirectedEmbedding(H, tuple(nxt))
    X1 = ClosedWalk((a1, b1, a2, b2), True)
    X2 = ClosedWalk((a1, b2, a2, b1), True)
    if not (E.has_proface(X1) and _canon(X2.darts) in antifaces_of(nxt)):
        raise AssertionError("dip4 seed is inconsistent")
    return H, E.embedding


def embed_bieulerian_two0mod4(D: Digraph, T: ClosedWalk) -> OrientedDirectedEmbedding:
    """Bi-eulerian directed embedding with ``T`` as a face when exactly two
    vertices have degree 0 mod 4 and ``T`` interlaces them."""
    S = D.zero_mod4_vertices()
    if len(S) != 2:
        raise GraphError(f"need exactly two vertices of degree 0 mod 4, found {len(S)}")
    bad = [D.labels[v] for v in range(D.n) if D.degree(v) % 4 not in (0, 2)]
    if bad:
        raise GraphError(f"vertices {bad} have odd degree")
    C, f, Z = lift_to_cycle(D, T)
    H, EH = dip4_host()
    Hd, nxt_h, W, xi = next(host_patterns(H, EH))
    match = pattern_match(D, T, S, xi)
    if match is None:
        raise PatternError("T does not interlace the two vertices of degree 0 mod 4")
    return _finish_pattern(D, T, C, Z, f, match, Hd, nxt_h, W)


def embed_bieulerian_pattern(D: Digraph, T: ClosedWalk, H: Digraph, EH: Embedding) -> OrientedDirectedEmbedding:
    """Bi-eulerian directed embedding with ``T`` as a face, using the faces
    of a bi-eulerian embedding of a 4-regular host ``H`` as patterns for the
    order in which ``T`` visits the vertices of degree 0 mod 4."""
    S = D.zero_mod4_vertices()
    if len(S) != H.n:
        raise PatternError(f"host has {H.n} vertices but {len(S)} vertices have degree 0 mod 4")
    C, f, Z = lift_to_cycle(D, T)
    for Hd, nxt_h, W, xi in host_patterns(H, EH):
        match = pattern_match(D, T, S, xi)
        if match is not None:
            return _finish_pattern(D, T, C, Z, f, match, Hd, nxt_h, W)
    raise PatternError("no pattern of the host matches T")
