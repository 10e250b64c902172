import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from emberlin.euler import (CutConditionError, all_euler_circuits, arc_disjoint_path_pairs, contains_in_order,
                            euler_circuit, euler_circuit_through, interlaces, interlacing_euler_circuit,
                            random_euler_circuit)
from emberlin.generators import gen_ddc, gen_dip4, gen_dp
from emberlin.graph import GraphError, WalkError, build_digraph, build_graph, make_walk
from oracles import best_count, min_cut_between
from strategies import eulerian_digraphs, eulerian_graphs


def test_euler_circuit_basic():
    G = build_graph([(0, 1), (1, 2), (2, 0), (0, 0)])
    T = euler_circuit(G)
    assert T.is_euler_circuit(G) and not T.directed
    D = gen_ddc(3)
    T = euler_circuit(D, "v1")
    assert T.directed and T.is_euler_circuit(D) and D.incv[T.darts[0]] == 1


def test_euler_circuit_rejects():
    with pytest.raises(GraphError):
        euler_circuit(build_graph([(0, 1)]))
    with pytest.raises(GraphError):
        euler_circuit(build_digraph([(0, 1), (0, 1), (1, 0)]))
    with pytest.raises(GraphError):
        euler_circuit(build_graph([(0, 0), (1, 1)]))


def test_all_euler_circuits_dip4():
    # BEST: one arborescence choice out of two arcs into u, (2-1)! at each vertex
    assert len(all_euler_circuits(gen_dip4())) == 2


@settings(max_examples=60, deadline=None)
@given(eulerian_digraphs(max_n=4, max_len=8))
def test_circuit_count_matches_best_theorem(D):
    circs = all_euler_circuits(D)
    assert len(circs) == best_count(D)
    assert len({W.darts for W in circs}) == len(circs)
    assert all(W.is_euler_circuit(D) for W in circs)


@settings(max_examples=80, deadline=None)
@given(eulerian_digraphs(), st.integers(0, 10 ** 6))
def test_random_circuit_is_euler(D, seed):
    T = random_euler_circuit(D, random.Random(seed))
    assert T.is_euler_circuit(D)
    make_walk(D, T.darts)


@settings(max_examples=80, deadline=None)
@given(eulerian_graphs(), st.integers(0, 10 ** 6))
def test_random_circuit_undirected(G, seed):
    T = random_euler_circuit(G, random.Random(seed))
    assert T.is_euler_circuit(G)


def _cyclic_contains(vs, seq):
    return any(contains_in_order(vs[i:] + vs[:i], seq) for i in range(len(vs)))


@settings(max_examples=80, deadline=None)
@given(eulerian_digraphs(max_n=5, max_len=10), st.integers(0, 10 ** 6))
def test_circuit_through_keeps_order(D, seed):
    rng = random.Random(seed)
    T = random_euler_circuit(D, rng)
    vs = list(T.vertices(D))
    picks = sorted(rng.sample(range(len(vs)), min(3, len(vs))))
    seq = [D.labels[vs[i]] for i in picks]
    W = euler_circuit_through(D, seq)
    assert W.is_euler_circuit(D)
    assert contains_in_order(list(W.vertices(D)) + [W.vertices(D)[0]], [D.index(x) for x in seq])


def test_circuit_through_impossible_order():
    D = gen_dp(1)
    with pytest.raises(WalkError):
        euler_circuit_through(D, ["v0", "v2", "v0", "v2"])


def test_path_pairs():
    D = gen_ddc(4)
    fam = arc_disjoint_path_pairs(D, "v0", "v2", 2)
    arcs = fam.arcs()
    assert fam.k == 2 and len(arcs) == len(set(arcs))
    for p in fam.forward:
        assert D.incv[p[0]] == fam.s and D.incv[p[-1] ^ 1] == fam.t
    for p in fam.backward:
        assert D.incv[p[0]] == fam.t and D.incv[p[-1] ^ 1] == fam.s


def test_path_pairs_cut_condition():
    D = gen_dp(1)
    with pytest.raises(CutConditionError) as info:
        arc_disjoint_path_pairs(D, "v0", "v2", 2)
    assert info.value.size == 2


def test_interlaces():
    D = gen_dip4()
    T = make_walk(D, [D.edge_by_name(x) for x in ("a1", "b1", "a2", "b2")])
    assert interlaces(D, T, 0, 1)
    G = build_graph([(0, 1), (1, 0), (0, 2), (2, 0)])
    W = make_walk(G, [0, 2, 4, 6])
    assert not interlaces(G, W, 1, 2)


@settings(max_examples=80, deadline=None)
@given(eulerian_digraphs(max_n=4, max_len=10), st.data())
def test_interlacing_circuit_iff_cuts_of_four(D, data):
    if D.n < 2:
        return
    s = data.draw(st.integers(0, D.n - 1))
    t = data.draw(st.integers(0, D.n - 1).filter(lambda x: x != s))
    need = min_cut_between(D, s, t) >= 4
    try:
        W = interlacing_euler_circuit(D, D.labels[s], D.labels[t])
    except CutConditionError as exc:
        assert not need
        assert exc.size < 4
        return
    assert need and W.is_euler_circuit(D) and interlaces(D, W, s, t)
