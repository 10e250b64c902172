from collections import Counter
from itertools import combinations_with_replacement

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from emberlin.graph import build_graph
from emberlin.small import (canonical_form, circuit_decompositions, decomposed_eulerian_graphs,
                            eulerian_family, restricted_growth)


def _classes(graphs):
    reps = []
    for H in graphs:
        if not any(nx.is_isomorphic(H, R) for R in reps):
            reps.append(H)
    return reps


def _brute_family(max_m, directed):
    """Connected eulerian multigraphs on vertices 0..n-1 with no isolated
    vertex, from every edge multiset, reduced to isomorphism classes."""
    out = []
    for m in range(1, max_m + 1):
        for n in range(1, m + 1):
            pairs = [(u, w) for u in range(n) for w in range(n) if directed or u <= w]
            found = []
            for es in combinations_with_replacement(pairs, m):
                H = (nx.MultiDiGraph if directed else nx.MultiGraph)()
                H.add_nodes_from(range(n))
                H.add_edges_from(es)
                if directed:
                    if any(H.in_degree(v) != H.out_degree(v) or H.degree(v) == 0 for v in H):
                        continue
                    if not nx.is_weakly_connected(H):
                        continue
                else:
                    if any(H.degree(v) % 2 or H.degree(v) == 0 for v in H):
                        continue
                    if not nx.is_connected(H):
                        continue
                found.append(H)
            out += _classes(found)
    return out


def _to_nx(G):
    H = (nx.MultiDiGraph if G.directed else nx.MultiGraph)()
    H.add_nodes_from(range(G.n))
    H.add_edges_from((G.incv[e], G.incv[e + 1]) for e in G.edges)
    return H


@pytest.mark.parametrize("max_m, directed", [(5, False), (4, True)])
def test_family_matches_brute_force(max_m, directed):
    fam = [_to_nx(G) for G in eulerian_family(max_m, directed)]
    brute = _brute_family(max_m, directed)
    assert len(fam) == len(brute)
    assert len(_classes(fam)) == len(fam)
    for H in brute:
        assert any(nx.is_isomorphic(H, F) for F in fam)


def test_family_respects_vertex_cap():
    for G in eulerian_family(6, False, max_n=3):
        assert G.n <= 3 and G.is_eulerian() and G.is_connected()


def test_restricted_growth_counts():
    # Bell numbers
    assert [sum(1 for _ in restricted_growth(m)) for m in range(1, 7)] == [1, 2, 5, 15, 52, 203]
    assert all(max(s) < 2 for s in restricted_growth(5, 2))
    assert sum(1 for _ in restricted_growth(5, 2)) == 16


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5), st.integers(1, 7), st.booleans(), st.randoms(use_true_random=False))
def test_canonical_form_is_relabelling_invariant(n, m, directed, rnd):
    edges = [(rnd.randrange(n), rnd.randrange(n)) for _ in range(m)]
    perm = list(range(n))
    rnd.shuffle(perm)
    moved = [(perm[u], perm[w]) for u, w in edges]
    if not directed:
        rnd.shuffle(moved)
        moved = [(w, u) if rnd.random() < 0.5 else (u, w) for u, w in moved]
    assert canonical_form(n, edges, directed) == canonical_form(n, moved, directed)


def test_canonical_form_separates_direction():
    assert canonical_form(2, [(0, 1), (0, 1)], True) != canonical_form(2, [(0, 1), (1, 0)], True)


def test_decompositions_of_small_graphs():
    C4 = build_graph([(i, (i + 1) % 4) for i in range(4)])
    assert len(circuit_decompositions(C4)) == 1
    fig8 = build_graph([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    # two euler circuits (the second triangle either way round) and the two triangles
    assert sorted(len(d) for d in circuit_decompositions(fig8)) == [1, 1, 2]
    bouquet = build_graph([(0, 0), (0, 0)])
    assert sorted(len(d) for d in circuit_decompositions(bouquet)) == [1, 2]


def test_decompositions_are_valid():
    for G, dec in decomposed_eulerian_graphs(6):
        uses = Counter(g >> 1 for W in dec for g in W.darts)
        assert sorted(uses) == list(range(G.m)) and set(uses.values()) == {1}
        for W in dec:
            d = W.darts
            assert all(G.incv[d[i - 1] ^ 1] == G.incv[d[i]] for i in range(len(d)))
