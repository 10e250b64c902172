"""Plain-text formats for graphs, embeddings and walks.

Graph files::

    # comment
    v u
    v w
    e x u w        (undirected edge x between u and w)
    a y u w        (arc y from u to w)

A file holds either ``e`` lines or ``a`` lines.  Vertices used by an edge
must be declared first.

Embedding files name half-edges as ``<edge>.0`` / ``<edge>.1`` (for an arc
``.0`` is the tail end)::

    rot u : x.0 y.0 z.1
    sig x -
    face : x.0 y.1 ...
    genus 2 orientable

Edges without a ``sig`` line are positive.  ``face`` and ``genus`` lines are
optional on input and always written on output; verification compares them
with a fresh trace.

Walk files hold one ``walk : ...`` line per closed walk, listing the leaving
half-edges in order.  For digraphs a bare arc name stands for its tail end.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .embedding import Embedding
from .graph import ClosedWalk, Graph, GraphError, WalkError, build_digraph, build_graph, make_walk


class ParseError(GraphError):
    def __init__(self, lineno: int | None, msg: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}" if lineno else msg)


def _lines(text: str):
    for i, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line.split()


# -- graphs ------------------------------------------------------------------------


def parse_graph_text(text: str) -> Graph:
    verts: list[str] = []
    seen_v: set = set()
    records = []
    names: set = set()
    kind = None
    for ln, tok in _lines(text):
        key = tok[0]
        if key == "v":
            if len(tok) != 2:
                raise ParseError(ln, "vertex line needs exactly one id")
            if tok[1] in seen_v:
                raise ParseError(ln, f"vertex {tok[1]!r} declared twice")
            seen_v.add(tok[1])
            verts.append(tok[1])
        elif key in ("e", "a"):
            if len(tok) != 4:
                raise ParseError(ln, f"'{key}' line needs an id and two endpoints")
            if kind is not None and key != kind:
                raise ParseError(ln, "cannot mix undirected edges and arcs")
            kind = key
            name, u, w = tok[1:]
            if name in names:
                raise ParseError(ln, f"edge {name!r} declared twice")
            if "." in name:
                raise ParseError(ln, f"edge id {name!r} may not contain '.'")
            for x in (u, w):
                if x not in seen_v:
                    raise ParseError(ln, f"endpoint {x!r} is not a declared vertex")
            names.add(name)
            records.append((name, u, w))
        else:
            raise ParseError(ln, f"unknown record type {key!r}")
    if not verts:
        raise ParseError(None, "graph has no vertices")
    builder = build_digraph if kind == "a" else build_graph
    return builder(records, verts)


def write_graph_text(G: Graph) -> str:
    out = [f"v {x}" for x in G.labels]
    key = "a" if G.directed else "e"
    for e in G.edges:
        out.append(f"{key} {G.edge_names[e >> 1]} {G.labels[G.incv[e]]} {G.labels[G.incv[e + 1]]}")
    return "\n".join(out) + "\n"


def parse_graph_file(path) -> Graph:
    return parse_graph_text(Path(path).read_text())


def write_graph_file(G: Graph, path) -> None:
    Path(path).write_text(write_graph_text(G))


# -- embeddings -----------------------------------------------------------------------


@dataclass
class EmbeddingRecord:
    """Raw contents of an embedding file, resolved against a graph but not
    yet checked for consistency."""

    graph: Graph
    rotation: dict = field(default_factory=dict)   # vertex index -> list of darts
    rot_lines: dict = field(default_factory=dict)
    signature: list = field(default_factory=list)
    faces: list = field(default_factory=list)
    genus: tuple | None = None

    def to_embedding(self) -> Embedding:
        G = self.graph
        missing = [G.labels[v] for v in range(G.n) if v not in self.rotation and G.degree(v)]
        if missing:
            raise ParseError(None, f"no rotation given for vertex {missing[0]!r}")
        rot = tuple(tuple(self.rotation.get(v, ())) for v in range(G.n))
        return Embedding(G, rot, tuple(self.signature))


def _half(G: Graph, ln: int, name: str) -> int:
    try:
        if "." not in name and G.directed:
            return G.edge_by_name(name)
        return G.half_by_name(name)
    except GraphError as exc:
        raise ParseError(ln, str(exc)) from None


def parse_embedding_text(text: str, G: Graph) -> EmbeddingRecord:
    rec = EmbeddingRecord(G, signature=[1] * G.m)
    sig_seen: set = set()
    # labels are written with str(); resolve them the same way
    vid: dict = {}
    for i, lab in enumerate(G.labels):
        vid.setdefault(str(lab), i)
    for ln, tok in _lines(text):
        key = tok[0]
        if key == "rot":
            if len(tok) < 3 or tok[2] != ":":
                raise ParseError(ln, "expected 'rot <vertex> : <half-edges>'")
            if tok[1] not in vid:
                raise ParseError(ln, f"unknown vertex {tok[1]!r}")
            v = vid[tok[1]]
            if v in rec.rotation:
                raise ParseError(ln, f"second rotation for vertex {tok[1]!r}")
            rec.rotation[v] = [_half(G, ln, t) for t in tok[3:]]
            rec.rot_lines[v] = ln
        elif key == "sig":
            if len(tok) != 3 or tok[2] not in ("+", "-"):
                raise ParseError(ln, "expected 'sig <edge> +|-'")
            try:
                e = G.edge_by_name(tok[1]) >> 1
            except GraphError as exc:
                raise ParseError(ln, str(exc)) from None
            if e in sig_seen:
                raise ParseError(ln, f"second signature for edge {tok[1]!r}")
            sig_seen.add(e)
            rec.signature[e] = 1 if tok[2] == "+" else -1
        elif key == "face":
            if len(tok) < 3 or tok[1] != ":":
                raise ParseError(ln, "expected 'face : <half-edges>'")
            rec.faces.append(tuple(_half(G, ln, t) for t in tok[2:]))
        elif key == "genus":
            if len(tok) != 3 or tok[2] not in ("orientable", "nonorientable") or not tok[1].isdigit():
                raise ParseError(ln, "expected 'genus <n> orientable|nonorientable'")
            rec.genus = (int(tok[1]), tok[2] == "orientable")
        else:
            raise ParseError(ln, f"unknown record type {key!r}")
    return rec


def write_embedding_text(E: Embedding) -> str:
    E = getattr(E, "embedding", E)   # accept oriented wrappers
    G = E.graph
    out = []
    for v in range(G.n):
        out.append(f"rot {G.labels[v]} : " + " ".join(G.half_name(h) for h in E.rotation[v]))
    for e in range(G.m):
        if E.signature[e] == -1:
            out.append(f"sig {G.edge_names[e]} -")
    for F in E.faces:
        out.append("face : " + " ".join(G.half_name(h) for h in F.darts))
    out.append(f"genus {E.euler_genus} {'orientable' if E.orientable else 'nonorientable'}")
    return "\n".join(out) + "\n"


def parse_embedding_file(path, G: Graph) -> EmbeddingRecord:
    return parse_embedding_text(Path(path).read_text(), G)


def write_embedding_file(E: Embedding, path) -> None:
    Path(path).write_text(write_embedding_text(E))


# -- walks ------------------------------------------------------------------------------


def parse_walks_text(text: str, G: Graph) -> list[ClosedWalk]:
    walks = []
    for ln, tok in _lines(text):
        if tok[0] != "walk" or len(tok) < 3 or tok[1] != ":":
            raise ParseError(ln, "expected 'walk : <half-edges>'")
        darts = [_half(G, ln, t) for t in tok[2:]]
        try:
            walks.append(make_walk(G, darts, directed=G.directed))
        except WalkError as exc:
            raise ParseError(ln, str(exc)) from None
    return walks


def write_walks_text(G: Graph, walks) -> str:
    return "".join("walk : " + " ".join(G.half_name(h) for h in W.darts) + "\n" for W in walks)


def parse_walks_file(path, G: Graph) -> list[ClosedWalk]:
    return parse_walks_text(Path(path).read_text(), G)
