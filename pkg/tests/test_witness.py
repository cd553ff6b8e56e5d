from fractions import Fraction

import pytest

from grboot import (
    Graph,
    OrderPolicy,
    bits,
    build_anchored,
    check_witness_bound,
    density_slope,
    run_with_witnesses,
    sample_gnp,
    shrink_witness,
    stream_for,
    witness_sufficient,
)

from helpers import fig1, random_graph


def test_initial_edge_is_its_own_witness():
    ws = run_with_witnesses(fig1(), 4)
    w = ws[(0, 1)]
    assert w.edges == frozenset([(0, 1)])
    assert sorted(bits(w.vertices)) == [0, 1]
    assert check_witness_bound(w, 4)


def test_gadget_anchor_witness_hits_bound_with_equality():
    f = build_anchored(4, 1)
    ws = run_with_witnesses(f.graph, 4)
    w = ws[(0, 1)]
    assert w.edges == frozenset(f.graph.edges())
    assert len(w.edges) == 5
    nv = w.vertices.bit_count()
    assert Fraction(len(w.edges)) == density_slope(4) * (nv - 2) + 1
    assert check_witness_bound(w, 4)


def test_figure_first_inferred_edge_witness():
    # at the start the only completing clique for the round-1 pair is the
    # one on vertices {0,1,2,3}; its other five edges are all initial
    ws = run_with_witnesses(fig1(), 4)
    w = ws[(2, 3)]
    assert w.edges == frozenset([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert sorted(bits(w.vertices)) == [0, 1, 2, 3]


def test_all_closure_edges_get_witnesses():
    g = fig1()
    ws = run_with_witnesses(g, 4)
    assert set(ws) == {(u, v) for u in range(6) for v in range(u + 1, 6)}
    initial = set(g.edges())
    for e, w in ws.items():
        assert w.edges <= initial
        assert check_witness_bound(w, 4)
        assert witness_sufficient(w, 4)


@pytest.mark.parametrize("idx", range(15))
def test_randomised_bound_and_sufficiency(idx):
    g = random_graph(12, 0.5, seed=77, index=idx)
    ws = run_with_witnesses(g, 4)
    for w in ws.values():
        assert check_witness_bound(w, 4)
        assert witness_sufficient(w, 4)


@pytest.mark.parametrize("idx", range(8))
def test_closure_identical_across_policies(idx):
    g = random_graph(11, 0.5, seed=55, index=idx)
    lex = run_with_witnesses(g, 4, policy=OrderPolicy.LEX)
    rnd1 = run_with_witnesses(g, 4, policy=OrderPolicy.SEEDED_RANDOM, seed=1)
    rnd2 = run_with_witnesses(g, 4, policy=OrderPolicy.SEEDED_RANDOM, seed=2)
    assert set(lex) == set(rnd1) == set(rnd2)
    for ws in (rnd1, rnd2):
        for w in ws.values():
            assert check_witness_bound(w, 4)
            assert witness_sufficient(w, 4)


def test_seeded_random_is_reproducible():
    g = random_graph(11, 0.5, seed=56, index=0)
    a = run_with_witnesses(g, 4, policy=OrderPolicy.SEEDED_RANDOM, seed=9)
    b = run_with_witnesses(g, 4, policy=OrderPolicy.SEEDED_RANDOM, seed=9)
    assert a == b


def test_shrink_keeps_sufficiency_and_never_grows():
    g = sample_gnp(12, 0.5, stream_for(404, 0))
    ws = run_with_witnesses(g, 4)
    inferred = [w for e, w in sorted(ws.items()) if len(w.edges) > 1][:5]
    for w in inferred:
        small = shrink_witness(w, 4)
        assert small.edges <= w.edges
        assert witness_sufficient(small, 4)
        assert check_witness_bound(small, 4)


def test_r3_witnesses():
    path = Graph.from_edges(5, [(i, i + 1) for i in range(4)])
    ws = run_with_witnesses(path, 3)
    w = ws[(0, 4)]
    assert w.edges <= set(path.edges())
    assert witness_sufficient(w, 3)
