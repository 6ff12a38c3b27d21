import pytest

from k5edge.graph import (
    GraphError,
    build_graph,
    connected_components,
    contract_edge,
    induced_subgraph,
    is_biconnected,
    is_connected,
    neighborhood_of_set,
    remove_edge,
    remove_vertices,
    triangles_through_edge,
)
from k5edge.ioformats import ParseError, format_edge_list, parse_edge_list


def test_build_dedups_and_sorts():
    g = build_graph(3, [(2, 1), (1, 2), (0, 1)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.m == 2
    assert g.degrees() == [1, 2, 1]


def test_build_rejects_bad_edges():
    with pytest.raises(GraphError):
        build_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        build_graph(3, [(1, 1)])


def test_contract_edge_simple_result():
    # triangle with a pendant: contracting the pendant edge keeps simplicity
    g = build_graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    h = contract_edge(g, (2, 3))
    assert h.n == 3
    assert h.edges == ((0, 1), (0, 2), (1, 2))


def test_contract_edge_drops_parallel_edges():
    g = build_graph(3, [(0, 1), (0, 2), (1, 2)])
    h = contract_edge(g, (1, 2))
    assert h.n == 2
    assert h.edges == ((0, 1),)


def test_induced_subgraph_and_removal():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    sub, ids = induced_subgraph(g, [1, 2, 3])
    assert ids == [1, 2, 3]
    assert sub.edges == ((0, 1), (1, 2))
    h, _ = remove_vertices(g, [2])
    assert h.n == 4
    assert is_connected(h)


def test_connectivity_predicates():
    path = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    cycle = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert is_connected(path) and not is_biconnected(path)
    assert is_biconnected(cycle)
    two = build_graph(4, [(0, 1), (2, 3)])
    assert connected_components(two) == [[0, 1], [2, 3]]


def test_neighborhood_and_triangles():
    g = build_graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)])
    assert neighborhood_of_set(g, {0}) == {1, 2}
    assert neighborhood_of_set(g, {0, 1}) == {2, 3}
    assert triangles_through_edge(g, 1, 2) == [0, 3]
    assert remove_edge(g, 3, 4).m == 5


def test_edge_list_round_trip():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    text = format_edge_list(g)
    assert parse_edge_list(text).edges == g.edges


def test_edge_list_errors_carry_line_numbers():
    with pytest.raises(ParseError) as info:
        parse_edge_list("2 1\n0 5\n")
    assert info.value.line_no == 2
