import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grboot import (
    Graph,
    build_anchored,
    edge_addition_time,
    percolation_time_k3,
    run,
    step,
    validate_trace,
)

from helpers import FIG1_ROUNDS, fig1, naive_closure, naive_step, random_connected_graph, random_graph


def test_step_figure_round_one():
    assert step(fig1(), 4) == [(2, 3)]


def test_step_figure_round_two():
    g = fig1()
    g.add_edge(2, 3)
    assert step(g, 4) == [(0, 4), (1, 4)]


def test_step_complete_is_fixed_point():
    assert step(Graph.complete(6), 4) == []


def test_step_rejects_bad_parameters():
    with pytest.raises(ValueError):
        step(fig1(), 2)
    with pytest.raises(ValueError):
        step(Graph.empty(3), 4)


def test_run_figure_trace():
    trace = run(fig1(), 4)
    assert trace.T == 3
    assert trace.rounds == FIG1_ROUNDS
    assert not trace.cap_reached
    assert trace.final.is_complete()
    assert trace.addition_time[(0, 1)] == 0
    assert trace.addition_time[(2, 3)] == 1
    assert trace.addition_time[(0, 5)] == 3
    validate_trace(fig1(), trace)


def test_run_empty_graph_one_empty_round():
    trace = run(Graph.empty(6), 4)
    assert trace.T is None
    assert trace.rounds == [[]]
    assert not trace.cap_reached


def test_run_cap_reported_not_raised():
    trace = run(fig1(), 4, max_rounds=1)
    assert trace.cap_reached
    assert trace.T is None
    assert trace.rounds == [[(2, 3)]]


def test_run_complete_input():
    trace = run(Graph.complete(5), 4)
    assert trace.T == 0
    assert trace.rounds == [[]]


def test_anchor_times_on_gadgets():
    f2 = build_anchored(4, 2)
    assert edge_addition_time(f2.graph, 4, (0, 1)) == 2
    assert edge_addition_time(f2.graph, 4, (0, 2)) == 1  # core edge reappears first


def test_addition_time_initial_edge():
    assert edge_addition_time(fig1(), 4, (0, 1)) == 0


def test_addition_time_never_two_triangles():
    g = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    # independent oracle: the full closure never moves
    final, rounds = naive_closure(g, 4)
    assert rounds == [] and final == g
    assert edge_addition_time(g, 4, (2, 3)) is None


def test_k3_fast_path_values():
    path9 = Graph.from_edges(9, [(i, i + 1) for i in range(8)])
    assert percolation_time_k3(path9) == 3
    assert percolation_time_k3(Graph.complete(5)) == 0
    assert percolation_time_k3(Graph.from_edges(4, [(0, 1), (2, 3)])) is None
    star = Graph.from_edges(5, [(0, v) for v in range(1, 5)])  # diameter 2
    assert percolation_time_k3(star) == 1
    assert run(star, 3).T == 1


@pytest.mark.parametrize("idx", range(30))
def test_k3_fast_path_matches_engine(idx):
    g = random_connected_graph(seed=303, index=idx, max_n=30)
    assert run(g, 3).T == percolation_time_k3(g)


@pytest.mark.parametrize("idx", range(10))
def test_engine_matches_naive_closure(idx):
    n = 8 + idx
    g = random_graph(n, 0.35, seed=17, index=idx)
    trace = run(g, 4)
    final, rounds = naive_closure(g, 4)
    if trace.T is not None:
        expected = rounds if rounds else [[]]
    else:
        expected = rounds + [[]]  # the engine records the fixed-point probe
    assert trace.rounds == expected
    assert trace.final == final
    validate_trace(g, trace)


def test_synchronous_not_sequential():
    # a sequential update would let round-2 edges piggyback on round-1 ones;
    # the walkthrough graph distinguishes the two
    trace = run(fig1(), 4)
    assert (0, 4) not in trace.rounds[0]
    assert (0, 5) not in trace.rounds[1]


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=7, max_value=12))
def test_monotone_in_start_graph(idx, n):
    big = random_graph(n, 0.5, seed=23, index=idx)
    removed = {e for i, e in enumerate(big.edges()) if i % 3 == 0}
    small = Graph.from_edges(n, [e for e in big.edges() if e not in removed])
    t_small = run(small, 4)
    t_big = run(big, 4)
    small_closure = set(t_small.final.edges())
    big_closure = set(t_big.final.edges())
    assert small_closure <= big_closure
    if t_small.T is not None and t_big.T is not None:
        assert t_big.T <= t_small.T


@pytest.mark.parametrize("idx", range(6))
def test_closure_idempotent(idx):
    g = random_graph(9, 0.5, seed=31, index=idx)
    closure = run(g, 4).final
    again = run(closure, 4)
    assert again.T in (0, None)
    assert again.rounds == [[]]


def test_round_count_bounded_by_edge_budget():
    for idx in range(5):
        g = random_graph(10, 0.45, seed=37, index=idx)
        trace = run(g, 4)
        if trace.T is not None:
            assert trace.T <= 45  # C(10,2)


def test_trace_rounds_disjoint_and_nonempty():
    trace = run(fig1(), 4)
    seen = set(fig1().edges())
    for rnd in trace.rounds:
        assert rnd  # only a terminal fixed-point round may be empty
        for e in rnd:
            assert e not in seen
            seen.add(e)
