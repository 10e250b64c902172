"""Independent checker for embedding files.

Works from the raw rotation and signature data and traces faces with its own
code, so a bug in the tracing used by the builders cannot hide itself here.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field

from .formats import EmbeddingRecord, parse_embedding_file, parse_embedding_text, parse_graph_file, \
    parse_walks_file, write_embedding_text


@dataclass
class VerifyReport:
    compatible: bool = False
    bad_vertex: object = None
    directed: bool | None = None
    orientable: bool | None = None
    faces: list = field(default_factory=list)
    euler_genus: int | None = None
    bieulerian: bool = False
    circuit_face: bool | None = None
    failures: list = field(default_factory=list)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [
            f"cyclically compatible: {'yes' if self.compatible else 'no'}"
            + ("" if self.bad_vertex is None else f" (fails at vertex {self.bad_vertex})"),
            f"faces: {self.num_faces} (lengths {sorted(len(F) for F in self.faces)})",
            f"euler genus: {self.euler_genus}",
            f"orientable: {self.orientable}",
            f"bi-eulerian: {self.bieulerian}",
        ]
        if self.directed is not None:
            out.append(f"directed: {self.directed}")
        if self.circuit_face is not None:
            out.append(f"euler circuit is a face: {self.circuit_face}")
        out += [f"FAIL: {msg}" for msg in self.failures]
        out.append("verdict: " + ("ok" if self.ok else "failed"))
        return out


def _cyclic_key(darts) -> tuple:
    k = len(darts)
    return min(tuple(darts[i:] + darts[:i]) for i in range(k))


def _walk_key(darts) -> tuple:
    """Key of a closed walk up to cyclic shift and reversal."""
    darts = list(darts)
    back = [g ^ 1 for g in reversed(darts)]
    return min(_cyclic_key(darts), _cyclic_key(back))


def _single_cycle(nodes, pairs) -> bool:
    """Whether the multigraph on ``nodes`` with edge list ``pairs`` is one
    cycle through every node."""
    if not nodes:
        return not pairs
    if len(pairs) != len(nodes):
        return False
    deg = Counter()
    adj: dict = {x: [] for x in nodes}
    for a, b in pairs:
        if a not in adj or b not in adj:
            return False
        deg[a] += 1
        deg[b] += 1
        adj[a].append(b)
        adj[b].append(a)
    if any(deg[x] != 2 for x in nodes):
        return False
    start = next(iter(nodes))
    seen = {start}
    q = deque([start])
    while q:
        x = q.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                q.append(y)
    return len(seen) == len(nodes)


def _compatibility(G, walks):
    """First vertex whose transition graph under ``walks`` is not a single
    cycle on all its half-edges, or None."""
    trans: dict = {v: [] for v in range(G.n)}
    for W in walks:
        k = len(W)
        for i in range(k):
            a, g = W[i - 1] ^ 1, W[i]
            trans[G.incv[g]].append((a, g))
    for v in range(G.n):
        nodes = set(h for h in range(2 * G.m) if G.incv[h] == v)
        if not _single_cycle(nodes, trans[v]):
            return v
    return None


def _trace(G, nxt, prv, neg):
    """Faces as lists of leaving half-edges; each face is traced once, its
    reverse traversal is marked used."""
    nd = 2 * G.m
    used = set()
    faces = []
    for g0 in range(nd):
        for s0 in (0, 1):
            if (g0, s0) in used:
                continue
            darts = []
            g, s = g0, s0
            while True:
                if (g, s) in used:
                    raise ValueError("face orbits overlap")
                used.add((g, s))
                darts.append(g)
                a = g ^ 1
                s ^= neg[g >> 1]
                g = prv[a] if s else nxt[a]
                if (g, s) == (g0, s0):
                    break
            # states of the reverse traversal
            g, s = g0, s0
            for h in darts:
                back = (h ^ 1, s ^ neg[h >> 1] ^ 1)
                if back in used:
                    raise ValueError("face orbit meets its own reversal")
                used.add(back)
                s ^= neg[h >> 1]
            faces.append(darts)
    return faces


def _flip_orientable(G, neg) -> bool:
    flip = [None] * G.n
    for r in range(G.n):
        if flip[r] is not None:
            continue
        flip[r] = 0
        stack = [r]
        while stack:
            v = stack.pop()
            for h in range(2 * G.m):
                if G.incv[h] != v:
                    continue
                w = G.incv[h ^ 1]
                want = flip[v] ^ neg[h >> 1]
                if flip[w] is None:
                    flip[w] = want
                    stack.append(w)
                elif flip[w] != want:
                    return False
    return True


def verify_record(rec: EmbeddingRecord, circuit=None) -> VerifyReport:
    G = rec.graph
    rep = VerifyReport()
    nd = 2 * G.m
    name = G.labels

    # rotation must be a cyclic order of exactly the half-edges at each vertex
    nxt, prv = [-1] * nd, [-1] * nd
    for v in range(G.n):
        have = rec.rotation.get(v, [])
        want = sorted(h for h in range(nd) if G.incv[h] == v)
        if sorted(have) != want:
            rep.bad_vertex = name[v]
            rep.failures.append(f"rotation at vertex {name[v]!r} is not a cyclic order of its half-edges")
            return rep
        for i, h in enumerate(have):
            nxt[h] = have[(i + 1) % len(have)]
            prv[have[(i + 1) % len(have)]] = h
    neg = [0 if s == 1 else 1 for s in rec.signature]

    try:
        faces = _trace(G, nxt, prv, neg)
    except ValueError as exc:
        rep.failures.append(f"face tracing failed: {exc}")
        return rep
    rep.faces = faces
    uses = Counter(h >> 1 for F in faces for h in F)
    bad = [G.edge_names[e] for e in range(G.m) if uses[e] != 2]
    if bad:
        rep.failures.append(f"edge {bad[0]!r} does not occur exactly twice on the faces")

    bv = _compatibility(G, faces)
    rep.compatible = bv is None
    if bv is not None:
        rep.bad_vertex = name[bv]
        rep.failures.append(f"traced faces are not cyclically compatible at vertex {name[bv]!r}")

    if rec.faces:
        for i, W in enumerate(rec.faces):
            for j, g in enumerate(W):
                if G.incv[W[j - 1] ^ 1] != G.incv[g]:
                    rep.failures.append(f"stored face {i + 1} is not a closed walk")
                    break
        sv = _compatibility(G, rec.faces)
        if sv is not None:
            rep.compatible = False
            rep.bad_vertex = name[sv]
            rep.failures.append(f"stored faces are not cyclically compatible at vertex {name[sv]!r}")
        # follow each stored face with the rotation; where it first leaves
        # the face names the vertex whose rotation disagrees
        for W in rec.faces:
            if sv is not None or not W:
                break
            best = None
            for s0 in (0, 1):
                g, s, k, miss = W[0], s0, 0, None
                while k < len(W):
                    a = g ^ 1
                    s ^= neg[g >> 1]
                    g = prv[a] if s else nxt[a]
                    k += 1
                    if g != W[k % len(W)]:
                        miss = G.incv[g]
                        break
                if miss is None:
                    best = (k, None)
                    break
                if best is None or k > best[0]:
                    best = (k, miss)
            if best[1] is not None:
                v = name[best[1]]
                rep.compatible = False
                if rep.bad_vertex is None:
                    rep.bad_vertex = v
                rep.failures.append(f"stored face leaves the rotation at vertex {v!r}")
                break
        if Counter(map(_walk_key, rec.faces)) != Counter(map(_walk_key, faces)):
            rep.failures.append("stored faces differ from the traced faces")

    rep.orientable = _flip_orientable(G, neg)
    if G.n:
        rep.euler_genus = 2 - G.n + G.m - len(faces)
        if rep.euler_genus < 0:
            rep.failures.append("negative euler genus; the graph is not connected")
    if rec.genus is not None:
        gg, go = rec.genus
        if gg != rep.euler_genus:
            rep.failures.append(f"stored genus {gg} differs from the computed {rep.euler_genus}")
        if go != rep.orientable:
            rep.failures.append("stored orientability differs from the computed one")

    if G.directed:
        alt = all(
            all((r[i] & 1) != (r[(i + 1) % len(r)] & 1) for i in range(len(r)))
            for r in (rec.rotation.get(v, []) for v in range(G.n))
        )
        walks = all(len({h & 1 for h in F}) == 1 for F in faces)
        rep.directed = alt and walks
        if not rep.directed:
            rep.failures.append("not a directed embedding")

    rep.bieulerian = len(faces) == 2 and all(
        len(F) == G.m and len({h >> 1 for h in F}) == G.m for F in faces)

    if circuit is not None:
        key = _walk_key(list(circuit))
        rep.circuit_face = any(_walk_key(F) == key for F in faces)
        if not rep.circuit_face:
            rep.failures.append("the supplied euler circuit is not a face")
    return rep


def verify_text(text: str, G, circuit=None) -> VerifyReport:
    return verify_record(parse_embedding_text(text, G), circuit)


def verify_embedding(E, circuit=None) -> VerifyReport:
    """Serialize ``E`` and check the serialized form."""
    darts = None if circuit is None else getattr(circuit, "darts", circuit)
    E = getattr(E, "embedding", E)
    return verify_text(write_embedding_text(E), E.graph, darts)


def verify_files(embedding_path, graph_path, circuit_path=None) -> VerifyReport:
    G = parse_graph_file(graph_path)
    rec = parse_embedding_file(embedding_path, G)
    circuit = None
    if circuit_path is not None:
        walks = parse_walks_file(circuit_path, G)
        if len(walks) != 1:
            raise ValueError("circuit file must hold exactly one walk")
        circuit = walks[0].darts
    return verify_record(rec, circuit)
