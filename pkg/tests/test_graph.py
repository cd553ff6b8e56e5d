import math
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grboot import Graph, bits, edge, vertex_mask

from helpers import FIXTURES, fig1, floyd_warshall_diameter, naive_has_clique, random_graph


def small_graphs(max_n=8):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        pairs = list(combinations(range(n), 2))
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
        return Graph.from_edges(n, chosen)

    return build()


def test_empty_and_complete():
    assert Graph.empty(0).edge_count == 0
    assert Graph.empty(0).n == 0
    g = Graph.empty(6)
    assert g.n == 6 and g.edge_count == 0
    assert Graph.complete(6).edge_count == 15
    assert Graph.complete(1).edge_count == 0
    k4 = Graph.complete(4)
    assert all(k4.degree(v) == 3 for v in range(4))


def test_empty_plus_all_edges_is_complete():
    g = Graph.empty(3)
    for u, v in combinations(range(3), 2):
        g.add_edge(u, v)
    assert g == Graph.complete(3)


def test_add_edge_idempotent_and_normalised():
    g = Graph.empty(4)
    g.add_edge(0, 1)
    g.add_edge(0, 1)
    assert g.edge_count == 1
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    g2 = Graph.empty(4)
    g2.add_edge(1, 0)
    assert g2.edges() == [(0, 1)]


def test_add_edge_rejects_bad_input():
    g = Graph.empty(3)
    with pytest.raises(ValueError):
        g.add_edge(1, 1)
    with pytest.raises(ValueError):
        g.add_edge(0, 3)


def test_edge_normalisation_helper():
    assert edge(5, 2) == (2, 5)
    with pytest.raises(ValueError):
        edge(3, 3)


def test_common_neighbors_figure_graph():
    g = fig1()
    # hand-counted from the 6-vertex walkthrough: mutual neighbours of the
    # round-1 pair are vertices 0, 1 and 4
    assert sorted(bits(g.common_neighbors(2, 3))) == [0, 1, 4]


def test_common_neighbors_extremes():
    assert sorted(bits(Graph.complete(5).common_neighbors(0, 1))) == [2, 3, 4]
    assert Graph.empty(5).common_neighbors(0, 1) == 0


def test_contains_clique_trivial_sizes():
    g = fig1()
    assert g.contains_clique(0, 0)
    assert g.contains_clique(vertex_mask([3]), 0)
    assert not g.contains_clique(0, 1)
    assert g.contains_clique(vertex_mask([3]), 1)
    assert Graph.complete(6).contains_clique(vertex_mask(range(6)), 6)
    # the figure graph has the pair {0,1} joined inside {0,1,4}
    assert g.contains_clique(vertex_mask([0, 1, 4]), 2)


@settings(max_examples=150, deadline=None)
@given(small_graphs(), st.integers(min_value=0, max_value=4), st.data())
def test_contains_clique_matches_enumeration(g, k, data):
    members = data.draw(
        st.lists(st.integers(min_value=0, max_value=g.n - 1), unique=True)
    )
    mask = vertex_mask(members)
    assert g.contains_clique(mask, k) == naive_has_clique(g, members, k)


def test_contains_clique_large_set_ordered_path():
    # exercise the min-degree ordered top level (>24 candidates)
    g = Graph.complete(30)
    g2 = random_graph(30, 0.4, seed=11)
    full = vertex_mask(range(30))
    assert g.contains_clique(full, 5)
    expected = naive_has_clique(g2, list(range(30)), 4)
    assert g2.contains_clique(full, 4) == expected


def test_incident_edge_count_gadget_core_vertex():
    # level-1 gadget for r=4: K_4 minus the anchor; one core vertex meets 3 edges
    from grboot import build_anchored

    f = build_anchored(4, 1)
    assert f.graph.incident_edge_count(vertex_mask([2])) == 3


def test_incident_edge_count_extremes():
    g = fig1()
    assert g.incident_edge_count(0) == 0
    assert g.incident_edge_count(vertex_mask(range(6))) == g.edge_count


@settings(max_examples=100, deadline=None)
@given(small_graphs(), st.integers(min_value=0))
def test_incident_plus_outside_is_total(g, raw_mask):
    mask = raw_mask & ((1 << g.n) - 1)
    outside = [
        (u, v) for u, v in g.edges() if not (mask >> u & 1) and not (mask >> v & 1)
    ]
    assert g.incident_edge_count(mask) + len(outside) == g.edge_count


def test_diameter_basics():
    path5 = Graph.from_edges(5, [(i, i + 1) for i in range(4)])
    assert path5.diameter() == 4
    assert Graph.complete(7).diameter() == 1
    two_edges = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert two_edges.diameter() == math.inf
    assert not two_edges.is_connected()
    assert Graph.complete(1).diameter() == 0
    with pytest.raises(ValueError):
        Graph.empty(0).diameter()


@pytest.mark.parametrize("idx", range(12))
def test_diameter_matches_floyd_warshall(idx):
    n = 8 + 2 * idx  # up to 30
    g = random_graph(n, 0.18, seed=5, index=idx)
    assert g.diameter() == floyd_warshall_diameter(g)


@settings(max_examples=100, deadline=None)
@given(small_graphs())
def test_structural_invariants_after_any_additions(g):
    g.check_invariants()
    assert g.edge_count == sum(row.bit_count() for row in g.adj) / 2


def test_json_round_trip_bit_identical():
    g = fig1()
    text = g.to_json()
    again = Graph.from_json(text)
    assert again == g
    assert again.to_json() == text


def test_fig1_fixture_file_matches():
    text = (FIXTURES / "fig1.json").read_text()
    assert Graph.from_json(text) == fig1()
    assert Graph.from_json(text).to_json() == text


def test_dot_export():
    dot = fig1().to_dot()
    assert dot.startswith("graph G {")
    assert "  2 -- 4;" in dot
    assert dot.rstrip().endswith("}")
