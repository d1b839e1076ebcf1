"""Power-graph construction and the simple-graph substrate."""

import json

import pytest

from gyrograph import (
    Graph,
    build_gn,
    bundled_gyrogroup,
    classify_gn_shape,
    cyclic_group,
    export,
    from_json,
    induced_subgraph,
    load_table,
    power_graph,
    power_sequence,
)

GN3_EDGES = {
    (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
    (0, 4), (0, 5), (0, 6), (0, 7),
}


def brute_force_power_edges(g):
    """Oracle form of the adjacency rule: scan all powers u^m, v^m."""
    edges = set()
    for u in g.elements():
        pu = set(power_sequence(g, u, g.order))
        for v in range(u + 1, g.order):
            pv = set(power_sequence(g, v, g.order))
            if v in pu or u in pv:
                edges.add((u, v))
    return edges


def test_power_graph_gn3_explicit_edges():
    graph = power_graph(build_gn(3))
    assert graph.n == 8
    assert graph.edge_count == 10
    assert graph.edges == frozenset(GN3_EDGES)


def test_power_graph_of_cyclic_2_group_is_complete():
    # Cyclic groups of prime-power order have complete power graphs.
    assert power_graph(cyclic_group(8)).is_complete()
    for order in (2, 3, 4, 5, 7, 9):
        assert power_graph(cyclic_group(order)).is_complete()


def test_power_graph_of_z6_is_not_complete():
    graph = power_graph(cyclic_group(6))
    assert not graph.is_complete()
    assert not graph.has_edge(2, 3)


def test_power_graph_trivial():
    graph = power_graph(load_table([[0]]))
    assert graph.n == 1 and graph.edge_count == 0


@pytest.mark.parametrize("n", [3, 4, 5])
def test_power_graph_matches_pairwise_power_scan(n):
    g = build_gn(n)
    assert power_graph(g).edges == frozenset(brute_force_power_edges(g))


@pytest.mark.parametrize("name", ["k1", "n1", "g8", "m1"])
def test_power_graph_matches_oracle_on_bundled_tables(name):
    g = bundled_gyrogroup(name)
    assert power_graph(g).edges == frozenset(brute_force_power_edges(g))


def test_power_graph_is_simple_and_symmetric():
    graph = power_graph(build_gn(4))
    for u, v in graph.edges:
        assert u != v
        assert graph.has_edge(u, v) and graph.has_edge(v, u)


# ---------------------------------------------------------------------------
# Shape classification
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", [3, 4, 5])
def test_gn_shape_detected(n):
    m = 2 ** (n - 1)
    s = classify_gn_shape(power_graph(build_gn(n)))
    assert s.matches_gn_shape
    assert s.hub == 0
    assert s.clique_part == frozenset(range(m))
    assert s.pendant_part == frozenset(range(m, 2 * m))


def test_complete_graph_is_not_gn_shaped():
    assert not classify_gn_shape(Graph.complete(8)).matches_gn_shape


def test_k1_table_power_graph_shape():
    # The k1 power graph is a 4-clique {0,1,6,7} with pendants {2,3,4,5}.
    s = classify_gn_shape(power_graph(bundled_gyrogroup("k1")))
    assert s.matches_gn_shape
    assert s.clique_part == frozenset({0, 1, 6, 7})
    assert s.pendant_part == frozenset({2, 3, 4, 5})


def test_g8_power_graph_is_not_gn_shaped():
    # Two 4-cliques sharing an edge plus two pendants.
    assert not classify_gn_shape(power_graph(bundled_gyrogroup("g8"))).matches_gn_shape


# ---------------------------------------------------------------------------
# Induced subgraphs
# ---------------------------------------------------------------------------


def test_induced_clique_part_is_complete():
    graph = power_graph(build_gn(3))
    assert induced_subgraph(graph, {0, 1, 2, 3}).is_complete()


def test_induced_single_vertex():
    sub = induced_subgraph(power_graph(build_gn(3)), {5})
    assert sub.n == 1 and sub.edge_count == 0


def test_induced_pendants_with_identity_is_a_star():
    sub = induced_subgraph(power_graph(build_gn(3)), {0, 4, 5, 6, 7})
    assert sub.n == 5
    assert sub.edge_count == 4
    degrees = sorted(sub.degree(v) for v in sub.vertices())
    assert degrees == [1, 1, 1, 1, 4]  # K_{1,4}, a tree


def test_induced_subgraph_rejects_bad_vertex():
    with pytest.raises(ValueError):
        induced_subgraph(Graph.complete(3), {0, 5})


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def test_export_k1_formats():
    g = Graph.complete(1)
    dot = export(g, "dot")
    assert "graph G" in dot and "--" not in dot
    data = json.loads(export(g, "json"))
    assert data == {"n": 1, "labels": ["0"], "edges": []}


def test_export_gn3_dot_has_ten_edge_lines():
    dot = export(power_graph(build_gn(3)), "dot")
    assert sum(1 for line in dot.splitlines() if "--" in line) == 10


def test_json_round_trip_is_identity():
    graph = power_graph(build_gn(3))
    assert from_json(export(graph, "json")) == graph


def test_export_rejects_unknown_format():
    with pytest.raises(ValueError):
        export(Graph.complete(2), "xml")


def test_export_is_deterministic():
    graph = power_graph(build_gn(4))
    assert export(graph, "dot") == export(graph, "dot")
    assert export(graph, "json") == export(graph, "json")


def test_graph_rejects_self_loop_and_bad_edges():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 4)])
