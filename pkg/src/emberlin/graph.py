"""Half-edge graphs and digraphs, closed walks and transition graphs.

Every edge ``i`` owns the two half-edges ``2*i`` and ``2*i + 1``, so the mate
involution is ``h ^ 1`` and an edge is named by its lesser half-edge.  In a
digraph the even half of each arc is the outgoing half (at the tail) and the
odd half is the incoming half (at the head).
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence


class GraphError(ValueError):
    """Malformed graph data or a violated precondition on a graph."""


class WalkError(GraphError):
    """A sequence of half-edges that is not a valid closed walk."""


def mate(h: int) -> int:
    return h ^ 1


def edge_of(h: int) -> int:
    """Edge id of half-edge ``h`` (its lesser half-edge)."""
    return h & ~1


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected multigraph with loops, stored as half-edges.

    ``labels[v]`` is the user-facing label of internal vertex ``v`` and
    ``incv[h]`` the vertex of half-edge ``h``.
    """

    labels: tuple
    incv: tuple[int, ...]
    edge_names: tuple[str, ...]

    directed = False

    def __post_init__(self):
        if len(self.incv) != 2 * len(self.edge_names):
            raise GraphError("half-edge count must be twice the edge count")
        n = len(self.labels)
        for h, v in enumerate(self.incv):
            if not 0 <= v < n:
                raise GraphError(f"half-edge {h} is incident with unknown vertex {v}")
        if len(set(self.labels)) != n:
            raise GraphError("duplicate vertex label")
        if len(set(self.edge_names)) != len(self.edge_names):
            raise GraphError("duplicate edge name")
        darts: list[list[int]] = [[] for _ in range(n)]
        for h, v in enumerate(self.incv):
            darts[v].append(h)
        object.__setattr__(self, "_darts", tuple(tuple(d) for d in darts))
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})
        object.__setattr__(self, "_edge_index", {nm: i for i, nm in enumerate(self.edge_names)})

    # -- sizes and incidence -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edge_names)

    @property
    def half_edges(self) -> range:
        return range(2 * self.m)

    @property
    def edges(self) -> range:
        """Edge ids, i.e. the even half-edges."""
        return range(0, 2 * self.m, 2)

    def darts_at(self, v: int) -> tuple[int, ...]:
        """``E*(v)``: half-edges incident with vertex ``v`` in increasing order."""
        return self._darts[v]

    def degree(self, v: int) -> int:
        return len(self._darts[v])

    def endpoints(self, e: int) -> tuple[int, int]:
        e = edge_of(e)
        return self.incv[e], self.incv[e + 1]

    def is_loop(self, e: int) -> bool:
        u, v = self.endpoints(e)
        return u == v

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise GraphError(f"unknown vertex {label!r}") from None

    def edge_by_name(self, name: str) -> int:
        try:
            return 2 * self._edge_index[name]
        except KeyError:
            raise GraphError(f"unknown edge {name!r}") from None

    def half_name(self, h: int) -> str:
        return f"{self.edge_names[h >> 1]}.{h & 1}"

    def half_by_name(self, text: str) -> int:
        name, dot, side = text.rpartition(".")
        if not dot or side not in ("0", "1"):
            raise GraphError(f"bad half-edge name {text!r}")
        return self.edge_by_name(name) + int(side)

    # -- global properties -----------------------------------------------------

    def components(self, removed: Iterable[int] = ()) -> list[list[int]]:
        """Vertex sets of the connected components after deleting edges ``removed``."""
        gone = {edge_of(e) for e in removed}
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                v = queue.popleft()
                for h in self._darts[v]:
                    if edge_of(h) in gone:
                        continue
                    w = self.incv[h ^ 1]
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_eulerian(self) -> bool:
        return self.is_connected() and all(self.degree(v) % 2 == 0 for v in range(self.n))

    def is_cycle(self) -> bool:
        """Connected, nontrivial and 2-regular."""
        return self.m > 0 and self.is_connected() and all(self.degree(v) == 2 for v in range(self.n))

    def zero_mod4_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.degree(v) % 4 == 0]

    def underlying(self) -> "Graph":
        return self

    def __repr__(self):
        kind = type(self).__name__
        return f"{kind}(n={self.n}, m={self.m})"


@dataclass(frozen=True, eq=False, repr=False)
class Digraph(Graph):
    """Directed multigraph: half ``2*i`` is the tail (outgoing) half of arc ``i``."""

    directed = True

    @staticmethod
    def is_out(h: int) -> bool:
        return h & 1 == 0

    def tail(self, a: int) -> int:
        return self.incv[edge_of(a)]

    def head(self, a: int) -> int:
        return self.incv[edge_of(a) + 1]

    def out_darts(self, v: int) -> tuple[int, ...]:
        return tuple(h for h in self.darts_at(v) if h & 1 == 0)

    def in_darts(self, v: int) -> tuple[int, ...]:
        return tuple(h for h in self.darts_at(v) if h & 1)

    def is_balanced(self) -> bool:
        return all(len(self.out_darts(v)) == len(self.in_darts(v)) for v in range(self.n))

    def is_eulerian(self) -> bool:
        return self.is_connected() and self.is_balanced()

    def underlying(self) -> Graph:
        return Graph(self.labels, self.incv, self.edge_names)


# -- construction --------------------------------------------------------------


def _collect(records, vertices, prefix):
    labels: list = []
    seen: dict = {}
    explicit = vertices is not None
    for lab in vertices or ():
        if lab in seen:
            raise GraphError(f"duplicate vertex {lab!r}")
        seen[lab] = len(labels)
        labels.append(lab)
    names, incv = [], []
    for i, rec in enumerate(records):
        if len(rec) == 3:
            name, u, v = rec
        elif len(rec) == 2:
            (u, v), name = rec, f"{prefix}{i}"
        else:
            raise GraphError(f"bad edge record {rec!r}")
        for x in (u, v):
            if x not in seen:
                if explicit:
                    raise GraphError(f"edge {name!r} has dangling endpoint {x!r}")
                seen[x] = len(labels)
                labels.append(x)
        names.append(str(name))
        incv.extend((seen[u], seen[v]))
    return tuple(labels), tuple(incv), tuple(names)


def build_graph(edges: Iterable[Sequence], vertices: Iterable[Hashable] | None = None) -> Graph:
    """Build a graph from ``(u, v)`` or ``(name, u, v)`` records.

    When ``vertices`` is given, every endpoint must be one of them (so isolated
    vertices can be declared); otherwise vertices are taken in order of first
    appearance.
    """
    labels, incv, names = _collect(list(edges), None if vertices is None else list(vertices), "e")
    return Graph(labels, incv, names)


def build_digraph(arcs: Iterable[Sequence], vertices: Iterable[Hashable] | None = None) -> Digraph:
    """Build a digraph from ``(tail, head)`` or ``(name, tail, head)`` records."""
    labels, incv, names = _collect(list(arcs), None if vertices is None else list(vertices), "a")
    return Digraph(labels, incv, names)


def from_half_edges(incidence: Mapping, pairs: Iterable[tuple], directed: bool = False) -> Graph:
    """Build from explicit half-edge data.

    ``incidence`` maps each half-edge id to a vertex label, ``pairs`` lists the
    mate pairs (for a digraph each pair is ``(outgoing, incoming)``).  Half-edge
    ids are renumbered densely in pair order.
    """
    used: set = set()
    records = []
    for i, pair in enumerate(pairs):
        if len(pair) != 2:
            raise GraphError(f"mate pair {pair!r} does not have two half-edges")
        g, h = pair
        if g == h:
            raise GraphError(f"half-edge {g!r} cannot be its own mate")
        for x in pair:
            if x in used:
                raise GraphError(f"half-edge {x!r} is referenced twice")
            if x not in incidence:
                raise GraphError(f"half-edge {x!r} has no incident vertex")
            used.add(x)
        records.append((f"{g}-{h}", incidence[g], incidence[h]))
    unpaired = set(incidence) - used
    if unpaired:
        raise GraphError(f"half-edges without a mate: {sorted(map(str, unpaired))}")
    builder = build_digraph if directed else build_graph
    return builder(records)


def relabel(G: Graph, labels: Sequence | None = None, edge_names: Sequence[str] | None = None) -> Graph:
    cls = type(G)
    return cls(tuple(labels) if labels is not None else G.labels, G.incv,
               tuple(edge_names) if edge_names is not None else G.edge_names)


# -- walks -----------------------------------------------------------------------


@dataclass(frozen=True)
class ClosedWalk:
    """Closed walk stored as its cyclic sequence of leaving half-edges.

    The walk ``v0 g1 h1 v1 g2 h2 ...`` is recorded as ``(g1, g2, ...)``; the
    arriving halves are the mates and the vertices follow from incidence.
    """

    darts: tuple[int, ...]
    directed: bool = False

    def __len__(self):
        return len(self.darts)

    def arriving(self) -> tuple[int, ...]:
        return tuple(g ^ 1 for g in self.darts)

    def vertices(self, G: Graph) -> tuple[int, ...]:
        """Vertex sequence ``v0, v1, ...`` (one entry per step, cyclic)."""
        return tuple(G.incv[g] for g in self.darts)

    def edges(self) -> tuple[int, ...]:
        return tuple(edge_of(g) for g in self.darts)

    def reversed(self) -> "ClosedWalk":
        return ClosedWalk(tuple(g ^ 1 for g in reversed(self.darts)), self.directed)

    def rotated(self, k: int) -> "ClosedWalk":
        k %= max(len(self.darts), 1)
        return ClosedWalk(self.darts[k:] + self.darts[:k], self.directed)

    def starting_at(self, dart: int) -> "ClosedWalk":
        return self.rotated(self.darts.index(dart))

    def canonical(self) -> tuple[int, ...]:
        """Least rotation, and for undirected walks the lesser of walk and reversal."""
        best = _least_rotation(self.darts)
        if not self.directed:
            best = min(best, _least_rotation(self.reversed().darts))
        return best

    def is_trail(self) -> bool:
        es = self.edges()
        return len(set(es)) == len(es)

    def is_euler_circuit(self, G: Graph) -> bool:
        return len(self.darts) == G.m and self.is_trail()

    def pretty(self, G: Graph) -> str:
        parts = []
        for g in self.darts:
            parts.append(str(G.labels[G.incv[g]]))
            parts.append(G.edge_names[g >> 1])
        return "(" + " ".join(parts) + ")"


def _least_rotation(seq: tuple) -> tuple:
    if not seq:
        return seq
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def same_cyclic(a: ClosedWalk, b: ClosedWalk) -> bool:
    """Equality up to cyclic shift (and reversal when either walk is undirected)."""
    if a.directed and b.directed:
        return _least_rotation(a.darts) == _least_rotation(b.darts)
    return ClosedWalk(a.darts).canonical() == ClosedWalk(b.darts).canonical()


def make_walk(G: Graph, darts: Iterable[int], directed: bool | None = None) -> ClosedWalk:
    """Validate a cyclic sequence of leaving half-edges as a closed walk of ``G``.

    For a digraph the walk is directed by default: each leaving half must be
    an outgoing half-arc, and hence every arriving half is incoming.
    """
    darts = tuple(darts)
    if directed is None:
        directed = G.directed
    if not darts:
        raise WalkError("empty walk")
    nh = 2 * G.m
    for i, g in enumerate(darts):
        if not 0 <= g < nh:
            raise WalkError(f"half-edge {g} is not in the graph")
        nxt = darts[(i + 1) % len(darts)]
        if nxt >= nh or nxt < 0:
            raise WalkError(f"half-edge {nxt} is not in the graph")
        if G.incv[g ^ 1] != G.incv[nxt]:
            raise WalkError(f"step {i}: arriving half {g ^ 1} and leaving half {nxt} "
                            f"are at different vertices")
        if directed and g & 1:
            if not G.directed:
                raise WalkError("directed walk requested on an undirected graph")
            raise WalkError(f"step {i}: half {g} is not an outgoing half-arc")
    return ClosedWalk(darts, directed)


def walk_from_vertices(G: Graph, seq: Sequence, directed: bool | None = None) -> ClosedWalk:
    """Closed walk through the given cyclic vertex-label sequence.

    Picks, for each step, the least unused edge (arc) joining consecutive
    vertices; this is only meant for fixtures on small graphs.
    """
    if directed is None:
        directed = G.directed
    idx = [G.index(x) for x in seq]
    used: set[int] = set()
    darts = []
    for i, u in enumerate(idx):
        v = idx[(i + 1) % len(idx)]
        for g in G.darts_at(u):
            if edge_of(g) in used or G.incv[g ^ 1] != v or (directed and g & 1):
                continue
            darts.append(g)
            used.add(edge_of(g))
            break
        else:
            raise WalkError(f"no unused edge from {seq[i]!r} to {seq[(i + 1) % len(seq)]!r}")
    return make_walk(G, darts, directed)


def orient_along(G: Graph, T: ClosedWalk) -> tuple[Digraph, dict[int, int]]:
    """Orient every edge of ``G`` the way the euler circuit ``T`` traverses it.

    Returns the digraph and a map from half-edges of ``G`` to half-arcs of the
    result.  Arc ``i`` of the digraph is edge ``i`` of ``G``.
    """
    T = make_walk(G, T.darts, directed=False)
    if not T.is_euler_circuit(G):
        raise WalkError("orientation requires an euler circuit of the graph")
    incv = list(G.incv)
    halfmap = {}
    for g in T.darts:
        e = edge_of(g)
        incv[e], incv[e + 1] = G.incv[g], G.incv[g ^ 1]
        halfmap[g], halfmap[g ^ 1] = e, e + 1
    return Digraph(G.labels, tuple(incv), G.edge_names), halfmap


# -- transition graphs -------------------------------------------------------------


@dataclass(frozen=True)
class TransitionGraph:
    """Multigraph on ``E*(v)`` whose edges are the transitions of walks at ``v``."""

    vertex: int
    nodes: tuple[int, ...]
    transitions: tuple[tuple[int, int], ...]

    def degree(self, h: int) -> int:
        return sum((a == h) + (b == h) for a, b in self.transitions)

    def components(self) -> list[set[int]]:
        parent = {h: h for h in self.nodes}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.transitions:
            parent[find(a)] = find(b)
        comps: dict[int, set[int]] = defaultdict(set)
        for h in self.nodes:
            comps[find(h)].add(h)
        return list(comps.values())

    def is_single_cycle(self) -> bool:
        """One cycle through every node (a 2-cycle on two nodes counts, as does a
        loop on a single node)."""
        if not self.nodes or len(self.transitions) != len(self.nodes):
            return False
        if any(self.degree(h) != 2 for h in self.nodes):
            return False
        return len(self.components()) == 1

    def is_perfect_matching(self) -> bool:
        return all(self.degree(h) == 1 for h in self.nodes) and all(a != b for a, b in self.transitions)

    def is_subgraph_of_cycle(self) -> bool:
        """Either a spanning cycle or a disjoint union of paths."""
        if self.is_single_cycle():
            return True
        if any(self.degree(h) > 2 for h in self.nodes) or any(a == b for a, b in self.transitions):
            return False
        # a forest with max degree 2 is a union of paths
        comps = self.components()
        return len(self.transitions) == len(self.nodes) - len(comps)


def transition_graph(G: Graph, walks: Iterable[ClosedWalk], v: int) -> TransitionGraph:
    """``Tr(W, v)``: one edge per passage of any walk through ``v``."""
    edges = []
    for W in walks:
        d = W.darts
        for i, g in enumerate(d):
            if g >= 2 * G.m:
                raise WalkError(f"half-edge {g} is not in the graph")
            nxt = d[(i + 1) % len(d)]
            if G.incv[nxt] == v:
                a, b = g ^ 1, nxt
                if G.incv[a] != v:
                    raise WalkError("walk is not valid in this graph")
                edges.append((min(a, b), max(a, b)))
    return TransitionGraph(v, G.darts_at(v), tuple(edges))


def is_cyclically_compatible(G: Graph, walks: Sequence[ClosedWalk]) -> tuple[bool, int | None]:
    """Whether every transition graph is a single cycle; the witness is the first
    failing vertex (or ``None``)."""
    walks = list(walks)
    for W in walks:
        make_walk(G, W.darts, directed=False)
    for v in range(G.n):
        if not transition_graph(G, walks, v).is_single_cycle():
            return False, v
    return True, None


def euler_circuit_vertices(G: Graph, T: ClosedWalk) -> list[int]:
    return list(T.vertices(G))
