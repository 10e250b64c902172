"""Rotation-system embeddings with edge signatures.

An embedding stores, per vertex, the cyclic (clockwise) order of its
half-edges, and per edge a sign in ``{+1, -1}``.  Faces are traced over states
``(h, s)`` meaning "leaving along half-edge ``h`` with local orientation ``s``":
crossing the edge flips ``s`` when the edge is twisted, and the next half-edge
is the rotation successor of the arriving half (or its predecessor when
``s = 1``).  Every face is met twice, once in each direction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels
from .graph import (ClosedWalk, Digraph, Graph, GraphError, WalkError, edge_of,
                    is_cyclically_compatible, make_walk, transition_graph)


class EmbeddingError(ValueError):
    """Malformed rotation system or signature."""


def euler_genus(n: int, m: int, f: int) -> int:
    g = 2 - n + m - f
    if g < 0:
        raise EmbeddingError(f"negative Euler genus for n={n}, m={m}, f={f}")
    return g


def face_parity_check(n: int, m: int, ell: int, f: int) -> bool:
    """Orientable embeddings of eulerian (di)graphs have ``f = m - n + 2 - 2g``,
    which has the parity of ``ell``."""
    return (f - ell) % 2 == 0 and (f - (m - n)) % 2 == 0


@dataclass(frozen=True, eq=False)
class Embedding:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    signature: tuple[int, ...]

    def __post_init__(self):
        G = self.graph
        rot = tuple(tuple(r) for r in self.rotation)
        sig = tuple(int(s) for s in self.signature)
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "signature", sig)
        if len(rot) != G.n:
            raise EmbeddingError(f"rotation lists {len(rot)} vertices, graph has {G.n}")
        if len(sig) != G.m:
            raise EmbeddingError(f"signature lists {len(sig)} edges, graph has {G.m}")
        for s in sig:
            if s not in (1, -1):
                raise EmbeddingError(f"signature entries must be +1 or -1, got {s}")
        nd = 2 * G.m
        nxt = [-1] * nd
        prv = [-1] * nd
        for v, r in enumerate(rot):
            if sorted(r) != list(G.darts_at(v)):
                raise EmbeddingError(f"rotation at vertex {G.labels[v]!r} is not a cyclic "
                                     f"order of its half-edges")
            d = len(r)
            for i, h in enumerate(r):
                nxt[h] = r[(i + 1) % d]
                prv[r[(i + 1) % d]] = h
        object.__setattr__(self, "nxt", tuple(nxt))
        object.__setattr__(self, "prv", tuple(prv))
        object.__setattr__(self, "sigd", tuple(0 if sig[h >> 1] == 1 else 1 for h in range(nd)))

    # -- construction helpers ---------------------------------------------------

    @classmethod
    def from_successors(cls, G: Graph, nxt: Sequence[int], sig: Sequence[int] | None = None) -> "Embedding":
        rot = []
        for v in range(G.n):
            darts = G.darts_at(v)
            if not darts:
                rot.append(())
                continue
            r = [darts[0]]
            while len(r) < len(darts):
                r.append(nxt[r[-1]])
            rot.append(tuple(r))
        return cls(G, tuple(rot), tuple(sig) if sig is not None else (1,) * G.m)

    def with_signature(self, sig: Sequence[int]) -> "Embedding":
        return Embedding(self.graph, self.rotation, tuple(sig))

    def twisted(self, e: int) -> "Embedding":
        """Flip the sign of edge ``e`` (given by either half)."""
        sig = list(self.signature)
        sig[e >> 1] = -sig[e >> 1]
        return Embedding(self.graph, self.rotation, tuple(sig))

    def mirrored(self) -> "Embedding":
        return Embedding(self.graph, tuple(tuple(reversed(r)) for r in self.rotation), self.signature)

    # -- tracing -----------------------------------------------------------------

    def step(self, h: int, s: int) -> tuple[int, int]:
        a = h ^ 1
        s ^= self.sigd[h]
        return (self.prv[a] if s else self.nxt[a]), s

    def _orbits(self):
        nd = 2 * self.graph.m
        seen = bytearray(2 * nd)
        out = []
        for st in range(2 * nd):
            if seen[st]:
                continue
            h, s = st >> 1, st & 1
            orbit = []
            while not seen[2 * h + s]:
                seen[2 * h + s] = 1
                orbit.append((h, s))
                h, s = self.step(h, s)
            # mark the reverse orbit so every face is reported once
            for g, t in orbit:
                a = g ^ 1
                rs = t ^ self.sigd[g] ^ 1
                seen[2 * a + rs] = 1
            out.append(orbit)
        return out

    @cached_property
    def _face_data(self):
        G = self.graph
        orbits = self._orbits()
        faces = []
        side = {}
        for i, orbit in enumerate(orbits):
            darts = tuple(h for h, _ in orbit)
            for h, s in orbit:
                side[(h, s)] = i
                a = h ^ 1
                side[(a, s ^ self.sigd[h] ^ 1)] = i
            if G.directed and all(h & 1 == 0 for h in darts):
                faces.append(ClosedWalk(darts, True))
            elif G.directed and all(h & 1 for h in darts):
                faces.append(ClosedWalk(tuple(h ^ 1 for h in reversed(darts)), True))
            else:
                faces.append(ClosedWalk(darts, False))
        return tuple(faces), side

    @property
    def faces(self) -> tuple[ClosedWalk, ...]:
        """Facial walks; for a directed embedding each is a directed walk."""
        return self._face_data[0]

    def trace_faces(self) -> tuple[ClosedWalk, ...]:
        return self.faces

    def edge_sides(self, e: int) -> tuple[int, int]:
        """Indices (into ``faces``) of the faces on the two sides of edge ``e``."""
        side = self._face_data[1]
        e = edge_of(e)
        return side[(e, 0)], side[(e, 1)]

    @cached_property
    def num_faces(self) -> int:
        if self.graph.m == 0:
            return 1
        return kernels.count_faces(self.nxt, self.prv, self.sigd)

    @property
    def euler_genus(self) -> int:
        G = self.graph
        return euler_genus(G.n, G.m, self.num_faces)

    @cached_property
    def orientable(self) -> bool:
        return is_orientable(self)

    @property
    def genus(self) -> int:
        """Orientable genus or crosscap number, as appropriate."""
        g = self.euler_genus
        return g // 2 if self.orientable else g

    def is_bieulerian(self) -> bool:
        return self.num_faces == 2 and all(f.is_euler_circuit(self.graph) for f in self.faces)

    def has_face(self, W: ClosedWalk) -> bool:
        key = ClosedWalk(W.darts).canonical()
        return any(ClosedWalk(F.darts).canonical() == key for F in self.faces)

    def face_multiset(self) -> list:
        return sorted(ClosedWalk(F.darts).canonical() for F in self.faces)

    def normalized(self) -> "Embedding":
        """Equivalent embedding (vertex flips) with every spanning-tree edge positive."""
        G = self.graph
        flip = [0] * G.n
        seen = [False] * G.n
        sig = list(self.signature)
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
                        flip[w] = flip[v] ^ (sig[h >> 1] == -1)
                        q.append(w)
        rot = tuple(tuple(reversed(r)) if flip[v] else r for v, r in enumerate(self.rotation))
        new = []
        for e in range(G.m):
            u, w = G.incv[2 * e], G.incv[2 * e + 1]
            s = sig[e] * (-1 if flip[u] ^ flip[w] else 1)
            new.append(s)
        return Embedding(G, rot, tuple(new))

    def __repr__(self):
        return f"Embedding(n={self.graph.n}, m={self.graph.m}, faces={self.num_faces})"


# -- predicates ------------------------------------------------------------------


def is_orientable(E: Embedding) -> bool:
    """Vertex flips can make every signature positive: spanning-tree propagation
    of flip bits, then a check on the remaining edges."""
    G = E.graph
    flip = [-1] * G.n
    for r in range(G.n):
        if flip[r] != -1:
            continue
        flip[r] = 0
        q = deque([r])
        while q:
            v = q.popleft()
            for h in G.darts_at(v):
                w = G.incv[h ^ 1]
                want = flip[v] ^ (E.signature[h >> 1] == -1)
                if flip[w] == -1:
                    flip[w] = want
                    q.append(w)
    for e in range(G.m):
        u, w = G.incv[2 * e], G.incv[2 * e + 1]
        if flip[u] ^ flip[w] ^ (E.signature[e] == -1):
            return False
    return True


def trace_faces(E: Embedding) -> tuple[ClosedWalk, ...]:
    return E.faces


def is_directed_embedding(E: Embedding, D: Digraph | None = None) -> bool:
    """Every rotation alternates between incoming and outgoing half-arcs."""
    D = D or E.graph
    if not D.directed:
        raise GraphError("directed embedding check needs a digraph")
    for r in E.rotation:
        if len(r) % 2:
            return False
        for i, h in enumerate(r):
            if (h & 1) == (r[(i + 1) % len(r)] & 1):
                return False
    return True


def directed_orientability_via_2coloring(E: Embedding, D: Digraph | None = None):
    """Try to 2-colour the faces so the two sides of every arc differ.

    Returns ``(ok, colouring)`` where ``colouring`` maps face index to 0/1, or
    ``(False, None)``.
    """
    D = D or E.graph
    if not is_directed_embedding(E, D):
        raise EmbeddingError("not a directed embedding")
    k = len(E.faces)
    adj: list[list[int]] = [[] for _ in range(k)]
    for e in D.edges:
        x, y = E.edge_sides(e)
        if x == y:
            return False, None
        adj[x].append(y)
        adj[y].append(x)
    col = [-1] * k
    for r in range(k):
        if col[r] != -1:
            continue
        col[r] = 0
        q = deque([r])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if col[y] == -1:
                    col[y] = col[x] ^ 1
                    q.append(y)
                elif col[y] == col[x]:
                    return False, None
    return True, dict(enumerate(col))


def face_kinds(E: Embedding) -> list[str]:
    """For an all-positive directed embedding: ``'pro'`` or ``'anti'`` per face.

    An antiface arrives on an incoming half ``h`` and leaves on the rotation
    successor of ``h``; a proface leaves on ``g`` with ``h`` the successor of ``g``.
    """
    kinds = []
    for F in E.faces:
        g0, g1 = F.darts[-1], F.darts[0]
        h = g0 ^ 1
        if E.nxt[h] == g1 and E.prv[h] != g1:
            kinds.append("anti")
        elif E.prv[h] == g1 and E.nxt[h] != g1:
            kinds.append("pro")
        else:
            # degree-2 ambiguity: decide on another passage
            kind = None
            for i, g in enumerate(F.darts):
                h = F.darts[i - 1] ^ 1
                if E.nxt[h] == g and E.prv[h] != g:
                    kind = "anti"
                    break
                if E.prv[h] == g and E.nxt[h] != g:
                    kind = "pro"
                    break
            kinds.append(kind or "both")
    return kinds


# -- from walks --------------------------------------------------------------------


def embedding_from_walks(G: Graph, walks: Iterable[ClosedWalk]) -> Embedding:
    """Embedding whose faces are exactly the given cyclically compatible walks.

    The rotation at ``v`` is read off the single cycle ``Tr(W, v)``; signatures
    follow from the direction in which each walk turns at the two ends of each
    edge.  The result is re-traced and compared with the input.
    """
    walks = [make_walk(G, W.darts, directed=False) if W.darts else W for W in walks]
    if G.m == 0:
        if G.n != 1:
            raise EmbeddingError("edgeless graphs must be a single vertex")
        return Embedding(G, ((),), ())
    ok, bad = is_cyclically_compatible(G, walks)
    if not ok:
        raise EmbeddingError(f"walks are not cyclically compatible at vertex {G.labels[bad]!r}")
    rot = []
    for v in range(G.n):
        tr = transition_graph(G, walks, v)
        adj: dict[int, list[int]] = {h: [] for h in tr.nodes}
        for a, b in tr.transitions:
            adj[a].append(b)
            if a != b:
                adj[b].append(a)
        start = tr.nodes[0]
        order = [start]
        prev, cur = None, start
        while len(order) < len(tr.nodes):
            nbrs = adj[cur]
            nxt = min(nbrs) if prev is None else (nbrs[0] if nbrs[0] != prev or nbrs[1] == prev else nbrs[1])
            order.append(nxt)
            prev, cur = cur, nxt
        rot.append(tuple(order))
    nd = 2 * G.m
    nxt = [0] * nd
    prv = [0] * nd
    for r in rot:
        for i, h in enumerate(r):
            nxt[h] = r[(i + 1) % len(r)]
            prv[r[(i + 1) % len(r)]] = h
    # direction of each passage: 0 when the leaving half follows the arriving
    # half in the rotation, 1 when it precedes it
    first_arrival: dict[int, int] = {}
    sig: list[int | None] = [None] * G.m
    for W in walks:
        d = W.darts
        k = len(d)
        dirs = []
        for i in range(k):
            a, g = d[i - 1] ^ 1, d[i]
            v = G.incv[g]
            if nxt[a] == g and prv[a] != g:
                dirs.append(0)
            elif prv[a] == g and nxt[a] != g:
                dirs.append(1)
            else:
                # degree at most 2: the two passages must turn oppositely
                # unless they arrive on the same half
                if v not in first_arrival:
                    first_arrival[v] = a
                    dirs.append(0)
                else:
                    dirs.append(0 if a != first_arrival[v] else 1)
        for i in range(k):
            g = d[i]
            s = dirs[i] ^ dirs[(i + 1) % k]
            val = -1 if s else 1
            e = g >> 1
            if sig[e] is None:
                sig[e] = val
            elif sig[e] != val:
                raise EmbeddingError(f"inconsistent signature on edge {G.edge_names[e]!r}")
    E = Embedding(G, tuple(rot), tuple(s if s is not None else 1 for s in sig))
    want = sorted(ClosedWalk(W.darts).canonical() for W in walks)
    if E.face_multiset() != want:
        raise EmbeddingError("synthesized embedding does not reproduce the walks")
    return E


def canonical_directed_embedding(D: Digraph) -> Embedding:
    """All-positive embedding whose rotation interleaves the sorted outgoing
    half-arcs with the sorted incoming ones; every eulerian digraph has one."""
    if not D.is_balanced():
        raise GraphError("digraph is not balanced")
    rot = []
    for v in range(D.n):
        outs, ins = D.out_darts(v), D.in_darts(v)
        r = []
        for g, h in zip(outs, ins):
            r.extend((g, h))
        rot.append(tuple(r))
    return Embedding(D, tuple(rot), (1,) * D.m)


def faces_as_walks(E: Embedding) -> list[ClosedWalk]:
    return list(E.faces)


def check_embedding(E: Embedding) -> None:
    """Raise unless face lengths sum to 2m and Euler's formula is consistent."""
    G = E.graph
    total = sum(len(F) for F in E.faces)
    if total != 2 * G.m:
        raise EmbeddingError("facial walks do not use every edge twice")
    if len(E.faces) != E.num_faces:
        raise EmbeddingError("face count mismatch between tracers")
    if E.orientable and E.euler_genus % 2:
        raise EmbeddingError("orientable embedding with odd Euler genus")


__all__ = [
    "Embedding", "EmbeddingError", "euler_genus", "face_parity_check", "is_orientable",
    "trace_faces", "is_directed_embedding", "directed_orientability_via_2coloring",
    "embedding_from_walks", "canonical_directed_embedding", "face_kinds", "check_embedding",
    "WalkError",
]
