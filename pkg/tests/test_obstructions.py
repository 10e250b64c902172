import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from emberlin.generators import gen_ddc, gen_dip4, gen_dp, gen_fst_host
from emberlin.graph import GraphError, build_graph
from emberlin.obstructions import (TwoEdgeCut, admissibility, bad_cut_scan, degree_census, digon_graph,
                                   enumerate_2edge_cuts, find_digon_chains, find_forbidden_configurations,
                                   fst_forbidden, reduce_2edge_cut, two_edge_join)
from strategies import eulerian_graphs


def _nx(G):
    M = nx.MultiGraph()
    M.add_nodes_from(range(G.n))
    for e in G.edges:
        M.add_edge(G.incv[e], G.incv[e + 1], key=e)
    return M


def _iso(G, H):
    return nx.is_isomorphic(_nx(G), _nx(H))


def test_degree_census():
    assert degree_census(gen_dip4().underlying()) == (2, True)
    assert degree_census(gen_dp(1).underlying()) == (1, False)


def test_cycle_has_six_cuts():
    C4 = build_graph([(i, (i + 1) % 4) for i in range(4)])
    assert len(enumerate_2edge_cuts(C4)) == 6


def test_four_edge_connected_has_no_cuts():
    assert enumerate_2edge_cuts(gen_ddc(4).underlying()) == []


@settings(max_examples=60, deadline=None)
@given(eulerian_graphs(max_n=5, max_len=9))
def test_cut_enumeration_matches_networkx(G):
    want = set()
    M = _nx(G)
    for i, e in enumerate(G.edges):
        for f in list(G.edges)[i + 1:]:
            H = M.copy()
            H.remove_edge(G.incv[e], G.incv[e + 1], key=e)
            H.remove_edge(G.incv[f], G.incv[f + 1], key=f)
            comps = list(nx.connected_components(H))
            if len(comps) == 2:
                side = next(c for c in comps if G.incv[e] in c)
                if G.incv[e + 1] not in side and (G.incv[f] in side) != (G.incv[f + 1] in side):
                    want.add((e, f))
    assert {(c.e, c.f) for c in enumerate_2edge_cuts(G)} == want


def test_dp1_reduction():
    G = gen_dp(1).underlying()
    cuts = enumerate_2edge_cuts(G)
    assert len(cuts) == 2
    red = reduce_2edge_cut(G, cuts[0])
    small, big = sorted((red.G1, red.G2), key=lambda H: H.n)
    assert small.n == 1 and small.m == 1 and small.is_loop(0)
    assert big.n == 2 and big.m == 3 and big.is_eulerian()


def test_reduction_rejects_non_cut():
    G = gen_ddc(3).underlying()
    with pytest.raises(GraphError):
        reduce_2edge_cut(G, (0, 2))
    with pytest.raises(GraphError):
        reduce_2edge_cut(G, (0, 0))


def test_dp2_has_one_bad_cut():
    G = gen_dp(2).underlying()
    bad = bad_cut_scan(G)
    assert len(bad) == 1
    mid = {G.edge_by_name("a1"), G.edge_by_name("b1")}
    assert {bad[0].cut.e, bad[0].cut.f} == mid
    assert sorted((bad[0].ell1 % 2, bad[0].ell2 % 2)) == [1, 1]


def test_ddc4_has_no_bad_cut():
    assert bad_cut_scan(gen_ddc(4).underlying()) == []


@settings(max_examples=50, deadline=None)
@given(eulerian_graphs(max_n=4, max_len=7), eulerian_graphs(max_n=4, max_len=7), st.data())
def test_join_then_reduce_gives_the_parts(G1, G2, data):
    g1 = data.draw(st.sampled_from(list(G1.edges)))
    g2 = data.draw(st.sampled_from(list(G2.edges)))
    swap = data.draw(st.booleans())
    J, m1, m2 = two_edge_join(G1, g1, G2, g2, swap)
    assert J.is_eulerian() and J.m == G1.m + G2.m
    new = sorted({m1[g1] & ~1, m1[g1 + 1] & ~1})
    assert len(new) == 2
    red = reduce_2edge_cut(J, tuple(new))
    parts = sorted((red.G1, red.G2), key=lambda H: H.labels[0][0])
    assert _iso(parts[0], G1) and _iso(parts[1], G2)


def test_join_rejects_mixed():
    with pytest.raises(GraphError):
        two_edge_join(gen_dip4(), 0, gen_dip4().underlying(), 0)


def test_digon_graph_and_chains():
    G = gen_dp(3).underlying()
    adj = digon_graph(G)
    assert sorted(adj) == [1, 2, 3]
    chains = find_digon_chains(G)
    assert [c.vertices for c in chains] == [(1, 2, 3)] and chains[0].length == 2
    cyc = find_digon_chains(gen_ddc(4).underlying())
    assert len(cyc) == 4 and all(c.length == 3 for c in cyc)


def test_fst_table():
    assert not fst_forbidden(1, 1) and not fst_forbidden(3, 1)
    assert not fst_forbidden(1, 3) and not fst_forbidden(1, 5)
    assert fst_forbidden(1, 2) and fst_forbidden(2, 2) and fst_forbidden(2, 3)


@pytest.mark.parametrize("s,t", [(1, 2), (1, 3), (2, 2), (2, 1), (3, 2)])
def test_fst_host_witness(s, t):
    G = gen_fst_host(s, t)
    assert G.is_eulerian() and all(G.degree(v) == 4 for v in range(G.n)) and G.n % 2 == 0
    ws = find_forbidden_configurations(G)
    assert any(w.s == s and w.t == t for w in ws)
    rep = admissibility(G)
    assert rep.parity_ok and not rep.bad_cuts
    assert bool(rep.forbidden_configs) == any(fst_forbidden(w.s, w.t) for w in ws)
    if fst_forbidden(s, t):
        assert rep.verdict == "admissible_but_obstructed"


def test_verdicts():
    assert admissibility(gen_dp(1).underlying()).verdict == "inadmissible(parity)"
    assert admissibility(gen_dp(2).underlying()).verdict == "inadmissible(bad-cut)"
    assert admissibility(gen_ddc(4).underlying()).verdict == "admissible"
    assert admissibility(gen_fst_host(1, 2)).obstructed()
    with pytest.raises(GraphError):
        admissibility(build_graph([(0, 1)]))


def test_witness_edges_join_front_to_ends():
    G = gen_fst_host(1, 2)
    w = next(w for w in find_forbidden_configurations(G) if (w.s, w.t) == (1, 2))
    front = w.chain.front
    ends = {w.other.rear, w.other.front}
    for f in (w.f1, w.f2):
        a, b = G.endpoints(f)
        assert front in (a, b) and ({a, b} - {front}) <= ends
