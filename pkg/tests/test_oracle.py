from collections import Counter
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from emberlin import _pykernels, kernels, oracle
from emberlin.embedding import Embedding, is_directed_embedding
from emberlin.generators import gen_ddc, gen_dip4, gen_dp, gen_join_chain
from emberlin.graph import build_graph
from emberlin.oracle import (BudgetExceeded, count_directed_rotations, count_undirected_rotations,
                             directed_bieulerian, directed_rotations, enumerate_directed_embeddings,
                             enumerate_embeddings, eulerian_orientations, exists_one_face_orientable,
                             nonorientable_directed_face_counts, orientable_bieulerian, reduced_directed_rotations,
                             spanning_tree_edges, undirected_rotations)
from strategies import connected_graphs, eulerian_digraphs, eulerian_graphs

K4 = build_graph([(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)])


def _brute_hist(G, rotations, signed):
    """Face-count histogram by building every Embedding object."""
    tree = spanning_tree_edges(G)
    free = [e >> 1 for e in G.edges if e not in tree] if signed else []
    hist = Counter()
    for rot in product(*rotations):
        for signs in product((1, -1), repeat=len(free)):
            sig = [1] * G.m
            for e, s in zip(free, signs):
                sig[e] = s
            E = Embedding(G, rot, tuple(sig))
            hist[(E.num_faces, E.orientable)] += 1
    return dict(hist)


def test_k4_genus_distribution():
    c = enumerate_embeddings(K4)
    # two planar rotation systems and fourteen toroidal ones
    assert c.hist == {(4, True): 2, (2, True): 14}
    assert c.total == count_undirected_rotations(K4) == 16


def test_two_loop_bouquet_all_signatures():
    B = build_graph([(0, 0), (0, 0)])
    c = enumerate_embeddings(B, orientable_only=False)
    assert c.total == 6 * 4
    assert c.hist == _brute_hist(B, [undirected_rotations(B, 0)], True)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=4, max_extra=3))
def test_census_matches_brute_force(G):
    if count_undirected_rotations(G) * 2 ** (G.m - G.n + 1) > 5000:
        return
    rots = [undirected_rotations(G, v) for v in range(G.n)]
    assert enumerate_embeddings(G).hist == _brute_hist(G, rots, False)
    assert enumerate_embeddings(G, orientable_only=False).hist == _brute_hist(G, rots, True)


@settings(max_examples=40, deadline=None)
@given(eulerian_digraphs(max_n=4, max_len=7))
def test_directed_census_matches_brute_force(D):
    if count_directed_rotations(D) * 2 ** (D.m - D.n + 1) > 3000:
        return
    rots = [directed_rotations(D, v) for v in range(D.n)]
    assert len(list(product(*rots))) == count_directed_rotations(D)
    assert enumerate_directed_embeddings(D).hist == _brute_hist(D, rots, False)
    assert enumerate_directed_embeddings(D, signatures="all").hist == _brute_hist(D, rots, True)


@settings(max_examples=60, deadline=None)
@given(eulerian_digraphs(max_n=4, max_len=8))
def test_reduced_rotations_keep_face_counts(D):
    if count_directed_rotations(D) * 2 ** (D.m - D.n + 1) > 200000:
        return
    full = enumerate_directed_embeddings(D, signatures="all")
    red = enumerate_directed_embeddings(D, signatures="all", reduced=True)
    assert full.face_counts(True) == red.face_counts(True)
    assert full.face_counts(False) == red.face_counts(False)
    for v in range(D.n):
        assert set(reduced_directed_rotations(D, v)) <= set(directed_rotations(D, v))


def test_required_face_filter():
    D = gen_dip4()
    a1, b1, a2, b2 = (D.edge_by_name(x) for x in ("a1", "b1", "a2", "b2"))
    from emberlin.graph import make_walk
    T = make_walk(D, [a1, b1, a2, b2])
    c = enumerate_directed_embeddings(D, required=T)
    assert c.total >= 1 and c.has_bieulerian


def test_dp_and_ddc_censuses():
    assert enumerate_directed_embeddings(gen_dp(1)).face_counts(True) == [3]
    assert not directed_bieulerian(gen_ddc(3))[0]
    ok, E = directed_bieulerian(gen_dip4())
    assert ok and E.is_bieulerian() and is_directed_embedding(E)


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_directed_embeddings(gen_join_chain(3), signatures="all", budget=10)
    with pytest.raises(BudgetExceeded):
        directed_bieulerian(gen_join_chain(4), node_limit=3)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("EMBERLIN_BUDGET", "5")
    with pytest.raises(BudgetExceeded):
        enumerate_embeddings(K4)


def test_exists_one_face():
    # odd cycle rank rules out a single face on an orientable surface
    assert not exists_one_face_orientable(K4)
    assert exists_one_face_orientable(build_graph([(0, 0), (0, 0)]))
    assert not exists_one_face_orientable(build_graph([(0, 1), (1, 2), (2, 0)]))


def test_eulerian_orientations_of_four_parallel_edges():
    G = gen_dip4().underlying()
    outs = list(eulerian_orientations(G))
    assert len(outs) == 1 and outs[0][0].is_eulerian()


@settings(max_examples=40, deadline=None)
@given(eulerian_graphs(max_n=4, max_len=7))
def test_bieulerian_two_routes_agree(G):
    if count_undirected_rotations(G) > 3000:
        return
    via_orientations, W = orientable_bieulerian(G)
    via_census = enumerate_embeddings(G, stop_bi=1).bi_orientable > 0
    assert via_orientations == via_census
    if W is not None:
        assert W.orientable and W.is_bieulerian()


@settings(max_examples=30, deadline=None)
@given(eulerian_digraphs(max_n=4, max_len=8))
def test_directed_bieulerian_two_routes_agree(D):
    if count_directed_rotations(D) > 3000:
        return
    assert directed_bieulerian(D)[0] == enumerate_directed_embeddings(D).has_bieulerian


def test_nonorientable_face_counts_dip4():
    counts, _ = nonorientable_directed_face_counts(gen_dip4())
    full = enumerate_directed_embeddings(gen_dip4(), signatures="all").face_counts(False)
    assert counts == full


@pytest.mark.skipif(kernels.BACKEND == "python", reason="compiled extension not built")
@pytest.mark.parametrize("D", [gen_dip4(), gen_dp(2), gen_ddc(4), gen_join_chain(2)],
                         ids=["dip4", "dp2", "ddc4", "join2"])
def test_backends_agree(D, monkeypatch):
    fast = enumerate_directed_embeddings(D, signatures="all")
    fast_bi = directed_bieulerian(D)[0]
    monkeypatch.setattr(oracle, "kernels", _pykernels)
    slow = enumerate_directed_embeddings(D, signatures="all")
    assert fast.hist == slow.hist and fast.traced == slow.traced
    assert (fast.bi_orientable, fast.bi_nonorientable) == (slow.bi_orientable, slow.bi_nonorientable)
    assert directed_bieulerian(D)[0] == fast_bi


@pytest.mark.skipif(kernels.BACKEND == "python", reason="compiled extension not built")
def test_backends_agree_on_early_stops(monkeypatch):
    D = gen_join_chain(2)
    a = enumerate_directed_embeddings(D, signatures="all", stop_at_least=3)
    monkeypatch.setattr(oracle, "kernels", _pykernels)
    b = enumerate_directed_embeddings(D, signatures="all", stop_at_least=3)
    assert a.traced == b.traced and a.witnesses["stop"].num_faces == b.witnesses["stop"].num_faces


def test_backend_names():
    assert kernels.BACKEND in ("cython", "python")
    assert _pykernels.BACKEND == "python"
