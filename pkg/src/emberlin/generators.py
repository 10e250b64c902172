"""Named example families and random eulerian digraphs."""

from __future__ import annotations

import random

from .graph import Digraph, Graph, GraphError, build_digraph, build_graph


def gen_ddc(n: int) -> Digraph:
    """``n``-cycle with every edge replaced by a directed digon:
    ``a_i: v_i -> v_{i+1}`` and ``b_i: v_{i+1} -> v_i``."""
    if n < 2:
        raise GraphError("ddc needs n >= 2")
    arcs = []
    for i in range(n):
        j = (i + 1) % n
        arcs.append((f"a{i}", f"v{i}", f"v{j}"))
        arcs.append((f"b{i}", f"v{j}", f"v{i}"))
    return build_digraph(arcs, [f"v{i}" for i in range(n)])


def gen_dp(ell: int) -> Digraph:
    """Path ``v_0 ... v_{ell+1}`` with a directed digon on every edge."""
    if ell < 0:
        raise GraphError("ell must be nonnegative")
    arcs = []
    for i in range(ell + 1):
        arcs.append((f"a{i}", f"v{i}", f"v{i + 1}"))
        arcs.append((f"b{i}", f"v{i + 1}", f"v{i}"))
    return build_digraph(arcs, [f"v{i}" for i in range(ell + 2)])


def gen_dip4() -> Digraph:
    """Two vertices with arcs ``a1, a2: u -> v`` and ``b1, b2: v -> u``."""
    return build_digraph([("a1", "u", "v"), ("b1", "v", "u"), ("a2", "u", "v"), ("b2", "v", "u")])


def gen_fst_host(s: int, t: int) -> Graph:
    """4-regular eulerian graph containing ``F_{s,t}`` with an even number of
    vertices.

    Chains ``v_0 .. v_s`` and ``w_0 .. w_t`` of digons, edges ``v_s w_0`` and
    ``v_s w_t``, and a balancing vertex ``z`` joined twice to ``v_0`` and once
    each to ``w_0`` and ``w_t``.  When ``s + t`` is even that would leave an
    odd vertex count, so ``z`` is split into ``z`` (twice to ``v_0``) and
    ``y`` (to ``w_0`` and ``w_t``) joined by a digon.
    """
    if s < 1 or t < 1:
        raise GraphError("s and t must be at least 1")
    edges = []
    for i in range(s):
        edges += [(f"c{i}a", f"v{i}", f"v{i + 1}"), (f"c{i}b", f"v{i}", f"v{i + 1}")]
    for i in range(t):
        edges += [(f"d{i}a", f"w{i}", f"w{i + 1}"), (f"d{i}b", f"w{i}", f"w{i + 1}")]
    edges += [("f1", f"v{s}", "w0"), ("f2", f"v{s}", f"w{t}")]
    verts = [f"v{i}" for i in range(s + 1)] + [f"w{i}" for i in range(t + 1)] + ["z"]
    if (s + t) % 2:
        edges += [("z0", "z", "v0"), ("z1", "z", "v0"), ("z2", "z", "w0"), ("z3", "z", f"w{t}")]
    else:
        edges += [("z0", "z", "v0"), ("z1", "z", "v0"), ("z2", "y", "w0"), ("z3", "y", f"w{t}"),
                  ("y0", "z", "y"), ("y1", "z", "y")]
        verts.append("y")
    return build_graph(edges, verts)


def gen_tree_of_cycles(lengths, attach=None) -> Graph:
    """Connected graph whose blocks are cycles of the given lengths (1 is a
    loop, 2 a digon).  Cycle ``i > 0`` hangs off vertex ``attach[i]`` of the
    graph built so far (default: the last vertex created)."""
    lengths = list(lengths)
    if not lengths or any(L < 1 for L in lengths):
        raise GraphError("cycle lengths must be positive")
    edges = []
    nverts = 1
    for i, L in enumerate(lengths):
        base = 0 if i == 0 else (attach[i] if attach else nverts - 1)
        if not 0 <= base < nverts:
            raise GraphError(f"attachment vertex {base} does not exist yet")
        cyc = [base] + list(range(nverts, nverts + L - 1))
        nverts += L - 1
        for j in range(L):
            edges.append((f"c{i}_{j}", f"x{cyc[j]}", f"x{cyc[(j + 1) % L]}"))
    return build_graph(edges, [f"x{i}" for i in range(nverts)])


def gen_join_chain(k: int) -> Digraph:
    """``k`` copies of dip4 combined by repeated 2-edge-joins into one
    4-regular digraph with ``2k`` vertices.  Copy ``i`` has ``u_i, v_i``; the
    arc ``b2`` of copy ``i`` and ``a1`` of copy ``i+1`` are exchanged for
    ``v_i -> v_{i+1}`` and ``u_{i+1} -> u_i``."""
    if k < 1:
        raise GraphError("k must be positive")
    arcs = []
    for i in range(k):
        u, v = f"u{i}", f"v{i}"
        arcs.append([f"a1_{i}", u, v])
        arcs.append([f"b1_{i}", v, u])
        arcs.append([f"a2_{i}", u, v])
        arcs.append([f"b2_{i}", v, u])
    for i in range(k - 1):
        # b2_i : v_i -> u_i and a1_{i+1} : u_{i+1} -> v_{i+1}
        b2 = arcs[4 * i + 3]
        a1 = arcs[4 * (i + 1)]
        b2[2], a1[2] = a1[2], b2[2]
    verts = [x for i in range(k) for x in (f"u{i}", f"v{i}")]
    return build_digraph([tuple(a) for a in arcs], verts)


def gen_unlaced() -> tuple[Digraph, tuple[str, ...]]:
    """Digraph with exactly two vertices ``u, v`` of degree 0 mod 4 and an
    euler circuit (returned as its arc names) that does not interlace them.

    ``w`` is a degree-6 hub with a loop.  The circuit visits ``u`` twice in a
    row and then ``v`` twice, and every directed embedding having it as a
    face has at least three faces, although other euler circuits of the same
    digraph do bound bi-eulerian embeddings.
    """
    arcs = [
        ("a", "u", "w"), ("b", "w", "u"), ("c", "u", "v"), ("d", "v", "w"),
        ("e", "w", "w"), ("f", "w", "v"), ("g", "v", "u"),
    ]
    D = build_digraph(arcs, ["u", "v", "w"])
    return D, ("a", "b", "c", "d", "e", "f", "g")


# -- random eulerian digraphs ----------------------------------------------------------


def random_eulerian_digraph(rng: random.Random, n: int, visits) -> Digraph:
    """Eulerian digraph read off a random closed vertex sequence.

    Vertex ``i`` appears ``visits[i]`` times (so has degree ``2*visits[i]``);
    consecutive entries become arcs, so the sequence itself is an euler
    circuit and the digraph is connected."""
    seq = [i for i in range(n) for _ in range(visits[i])]
    if not seq:
        raise GraphError("empty visit sequence")
    rng.shuffle(seq)
    arcs = [(f"a{j}", f"x{seq[j]}", f"x{seq[(j + 1) % len(seq)]}") for j in range(len(seq))]
    return build_digraph(arcs, [f"x{i}" for i in range(n)])


def random_2mod4_digraph(rng: random.Random, max_n: int = 10, max_visits: int = 5) -> Digraph:
    """All degrees 2 mod 4: every vertex visited an odd number of times."""
    n = rng.randint(1, max_n)
    odd = [k for k in range(1, max_visits + 1) if k % 2]
    return random_eulerian_digraph(rng, n, [rng.choice(odd) for _ in range(n)])


def random_digraph_mixed(rng: random.Random, max_n: int = 10, max_visits: int = 4) -> Digraph:
    n = rng.randint(1, max_n)
    return random_eulerian_digraph(rng, n, [rng.randint(1, max_visits) for _ in range(n)])
