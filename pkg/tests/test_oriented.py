import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from emberlin.euler import CutConditionError, interlacing_euler_circuit, random_euler_circuit
from emberlin.generators import gen_dip4, gen_join_chain, gen_unlaced, random_eulerian_digraph
from emberlin.graph import ClosedWalk, GraphError, build_digraph, make_walk, same_cyclic, walk_from_vertices
from emberlin.oracle import directed_bieulerian
from emberlin.oriented import (PatternError, SurgeryError, VertexIdentification, apply_odd_identification,
                               cycle_embedding, dip4_host, embed_bieulerian_2mod4, embed_bieulerian_pattern,
                               embed_bieulerian_two0mod4, embed_max_genus, host_patterns, identify_three,
                               identify_two, lift_to_cycle, pattern_match)
from emberlin.verify import verify_embedding
from strategies import eulerian_digraphs


def _cycle(k):
    C = build_digraph([(f"c{i}", f"x{i}", f"x{(i + 1) % k}") for i in range(k)])
    return C, make_walk(C, [2 * i for i in range(k)])


def _at(Phi, v):
    return [A for A in Phi.antifaces() if any(Phi.digraph.incv[g] == v for g in A.darts)]


def test_dip4_host_faces():
    H, EH = dip4_host()
    assert EH.is_bieulerian() and EH.orientable
    X1 = walk_from_vertices(H, ["u", "v", "u", "v"])
    assert any(same_cyclic(F, X1) for F in EH.faces)


def test_cycle_embedding_planar():
    C, Z = _cycle(5)
    Phi = cycle_embedding(C, Z)
    assert Phi.num_faces == 2 and Phi.embedding.euler_genus == 0
    assert Phi.has_proface(Z) and len(Phi.antifaces()) == 1
    assert len(Phi.mirrored().profaces()) == 1 and Phi.mirrored().tracked == ()


def test_identify_two_splits_then_merges():
    C, Z = _cycle(4)
    Phi = cycle_embedding(C, Z)
    A = Phi.antifaces()[0]
    P1 = identify_two(Phi, 0, 2, A, A)
    assert P1.digraph.n == 3 and len(P1.antifaces()) == 2 and P1.has_proface(Z)
    a1, a2 = _at(P1, 1)[0], _at(P1, 2)[0]
    assert not same_cyclic(a1, a2)
    P2 = identify_two(P1, 1, 2, a1, a2)
    assert P2.digraph.n == 2 and P2.is_bieulerian() and P2.has_proface(Z)
    assert sorted(P2.digraph.degree(v) for v in range(2)) == [4, 4]
    assert verify_embedding(P2, Z).ok


def test_identify_three_keeps_one_antiface():
    C, Z = _cycle(6)
    Phi = cycle_embedding(C, Z)
    A = Phi.antifaces()[0]
    P = identify_three(Phi, 0, 2, 4, A, A, A)
    assert P.digraph.n == 4 and P.digraph.degree(0) == 6
    assert len(P.antifaces()) == 1 and P.is_bieulerian() and P.has_proface(Z)


def test_surgery_rejects_foreign_faces():
    C, Z = _cycle(4)
    Phi = cycle_embedding(C, Z)
    P1 = identify_two(Phi, 0, 2, Phi.antifaces()[0], Phi.antifaces()[0])
    # on a cycle both faces carry the same arcs; after the split the proface is no antiface
    with pytest.raises(SurgeryError):
        identify_two(P1, 0, 1, Z, Z)
    a1 = _at(P1, 1)[0]
    other = next(v for v in range(P1.digraph.n) if not any(P1.digraph.incv[g] == v for g in a1.darts))
    with pytest.raises(SurgeryError):
        identify_two(P1, other, 1, a1, a1)


def test_vertex_identification():
    C, Z = _cycle(6)
    f = VertexIdentification.collapse(C, [0, 1, 0, 1, 0, 2])
    assert f.target.n == 3 and f.fiber(0) == [0, 2, 4]
    assert f.exceptional == [1]
    g = VertexIdentification.collapse(f.target, [0, 0, 1])
    h = f.compose(g)
    assert h.target is g.target and h.f == (0, 0, 0, 0, 0, 1)
    with pytest.raises(GraphError):
        VertexIdentification(C, f.target, (0, 0, 0, 0, 0, 0))


def test_lift_to_cycle():
    D = gen_dip4()
    T = walk_from_vertices(D, ["u", "v", "u", "v"])
    C, f, Z = lift_to_cycle(D, T)
    assert C.n == C.m == 4 and all(C.degree(v) == 2 for v in range(C.n))
    assert f.target.incv == D.incv and Z.is_euler_circuit(C)
    with pytest.raises(GraphError):
        lift_to_cycle(D, ClosedWalk(T.darts[:2], True))


def test_odd_identification_respects_budget():
    D = gen_join_chain(2)
    T = random_euler_circuit(D, random.Random(3))
    C, f, Z = lift_to_cycle(D, T)
    E = apply_odd_identification(cycle_embedding(C, Z), f)
    assert len(E.antifaces()) <= 1 + len(f.exceptional)
    assert E.has_proface(T)


@settings(max_examples=120, deadline=None)
@given(eulerian_digraphs(max_n=6, max_len=14), st.integers(0, 10 ** 6))
def test_max_genus_face_bound(D, seed):
    T = random_euler_circuit(D, random.Random(seed))
    ell = len(D.zero_mod4_vertices())
    E = embed_max_genus(D, T)
    f = E.num_faces
    assert f <= ell + 2 and (f - ell) % 2 == 0
    assert len(E.antifaces()) <= ell + 1
    rep = verify_embedding(E, T)
    assert rep.ok and rep.orientable and rep.directed


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_2mod4_is_bieulerian(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    D = random_eulerian_digraph(rng, n, [rng.choice((1, 3)) for _ in range(n)])
    T = random_euler_circuit(D, rng)
    E = embed_bieulerian_2mod4(D, T)
    assert E.is_bieulerian() and E.has_proface(T)


def test_2mod4_rejects_zero_mod4():
    D = gen_dip4()
    with pytest.raises(GraphError):
        embed_bieulerian_2mod4(D, walk_from_vertices(D, ["u", "v", "u", "v"]))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_two0mod4_with_interlacing_circuit(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    visits = [rng.choice((2, 4)), rng.choice((2, 4))] + [rng.choice((1, 3)) for _ in range(n - 2)]
    D = random_eulerian_digraph(rng, n, visits)
    s, t = D.zero_mod4_vertices()
    try:
        T = interlacing_euler_circuit(D, D.labels[s], D.labels[t])
    except CutConditionError:
        return
    E = embed_bieulerian_two0mod4(D, T)
    assert E.is_bieulerian() and E.has_proface(T)
    assert directed_bieulerian(D)[0]


def test_two0mod4_rejects_unlaced_and_wrong_count():
    D, names = gen_unlaced()
    T = make_walk(D, [D.edge_by_name(x) for x in names])
    with pytest.raises(PatternError):
        embed_bieulerian_two0mod4(D, T)
    J = gen_join_chain(2)
    with pytest.raises(GraphError):
        embed_bieulerian_two0mod4(J, random_euler_circuit(J, random.Random(0)))


def test_pattern_match():
    D = gen_dip4()
    T = walk_from_vertices(D, ["u", "v", "u", "v"])
    m = pattern_match(D, T, [0, 1], ["p", "q", "p", "q"])
    assert m is not None and m.positions == (0, 1, 2, 3)
    assert set(m.assignment.values()) == {0, 1}
    assert pattern_match(D, T, [0, 1], ["p", "p", "q", "q"]) is None
    assert pattern_match(D, T, [0, 1], ["p", "q"]) is None


def test_host_patterns_count():
    H, EH = dip4_host()
    pats = list(host_patterns(H, EH))
    assert len(pats) == 4
    assert all(sorted(xi) == [0, 0, 1, 1] for _, _, _, xi in pats)


def test_pattern_builder_on_its_own_host():
    H = gen_join_chain(2)
    ok, EH = directed_bieulerian(H)
    assert ok
    for F in EH.faces:
        T = ClosedWalk(F.darts, True) if not F.darts[0] & 1 else ClosedWalk(
            tuple(g ^ 1 for g in reversed(F.darts)), True)
        E = embed_bieulerian_pattern(H, T, H, EH)
        assert E.is_bieulerian() and E.has_proface(T)


def test_pattern_builder_vertex_count_mismatch():
    H, EH = dip4_host()
    D = gen_join_chain(2)
    with pytest.raises(PatternError):
        embed_bieulerian_pattern(D, random_euler_circuit(D, random.Random(1)), H, EH)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_pattern_builder_random(seed):
    rng = random.Random(seed)
    H = gen_join_chain(2)
    EH = directed_bieulerian(H)[1]
    n = rng.randint(4, 6)
    visits = [2] * 4 + [rng.choice((1, 3)) for _ in range(n - 4)]
    D = random_eulerian_digraph(rng, n, visits)
    T = random_euler_circuit(D, rng)
    try:
        E = embed_bieulerian_pattern(D, T, H, EH)
    except PatternError:
        return
    assert E.is_bieulerian() and E.has_proface(T) and verify_embedding(E, T).ok
