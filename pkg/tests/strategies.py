"""Hypothesis strategies for random graphs and embeddings."""

from hypothesis import strategies as st

from emberlin.embedding import Embedding
from emberlin.graph import build_digraph, build_graph


@st.composite
def connected_graphs(draw, max_n=5, max_extra=5, loops=True):
    n = draw(st.integers(1, max_n))
    edges = []
    for v in range(1, n):
        edges.append((draw(st.integers(0, v - 1)), v))
    for _ in range(draw(st.integers(0 if n > 1 else 1, max_extra))):
        u = draw(st.integers(0, n - 1))
        w = draw(st.integers(0, n - 1)) if loops or n == 1 else draw(
            st.integers(0, n - 1).filter(lambda x: x != u))
        edges.append((u, w))
    return build_graph([(f"e{i}", f"x{u}", f"x{w}") for i, (u, w) in enumerate(edges)],
                       [f"x{i}" for i in range(n)])


@st.composite
def eulerian_digraphs(draw, max_n=5, max_len=10):
    """Digraph read off a random closed vertex sequence covering every vertex."""
    n = draw(st.integers(1, max_n))
    extra = draw(st.lists(st.integers(0, n - 1), max_size=max(max_len - n, 0)))
    seq = draw(st.permutations(list(range(n)) + extra))
    k = len(seq)
    arcs = [(f"a{j}", f"x{seq[j]}", f"x{seq[(j + 1) % k]}") for j in range(k)]
    return build_digraph(arcs, [f"x{i}" for i in range(n)])


@st.composite
def eulerian_graphs(draw, max_n=5, max_len=10):
    return draw(eulerian_digraphs(max_n, max_len)).underlying()


@st.composite
def embeddings(draw, graphs=None, signed=True):
    G = draw(graphs if graphs is not None else connected_graphs())
    rot = tuple(tuple(draw(st.permutations(list(G.darts_at(v))))) for v in range(G.n))
    sig = tuple(draw(st.sampled_from((1, -1))) if signed else 1 for _ in range(G.m))
    return Embedding(G, rot, sig)
