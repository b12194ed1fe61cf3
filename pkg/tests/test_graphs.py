from itertools import combinations_with_replacement

import networkx as nx
import pytest

from app.errors import GraphParseError, ParameterError
from app.graphs.coloring import chromatic_number, find_coloring, is_k_colorable, is_k_critical, is_proper_coloring
from app.graphs.graph import (
    Graph,
    clique_number,
    complete,
    cycle,
    delete_edge,
    delete_vertex,
    empty_graph,
    is_triangle_free,
    join,
    min_degree,
    monotone_product,
    mycielskian,
    relabel,
    tensor_product,
    vertices_in_no_clique,
)
from app.graphs.graph6 import edge_list_emit, edge_list_parse, graph6_emit, graph6_parse
from app.graphs.named import h0, load_graph


def to_nx(g: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(g.vertices)
    result.add_edges_from(g.edges())
    return result


# ----- constructions ----------------------------------------------------------


def test_tensor_of_two_edges_is_two_disjoint_edges():
    product = tensor_product(complete(2), complete(2))
    assert product.n == 4
    assert product.num_edges() == 2
    assert len(product.components()) == 2


def test_tensor_of_c5_and_k2_is_c10():
    product = tensor_product(cycle(5), complete(2))
    assert (product.n, product.num_edges()) == (10, 10)
    assert nx.is_isomorphic(to_nx(product), nx.cycle_graph(10))


@pytest.mark.parametrize("g, h", [(cycle(5), complete(3)), (h0(), complete(2)), (cycle(4), cycle(5))])
def test_tensor_matches_networkx(g, h):
    assert nx.is_isomorphic(to_nx(tensor_product(g, h)), nx.tensor_product(to_nx(g), to_nx(h)))


def test_monotone_product_is_a_spanning_subgraph_of_the_tensor():
    g, h = cycle(5), cycle(5)
    mono, full = monotone_product(g, h), tensor_product(g, h)
    assert mono.n == full.n
    assert set(mono.edges()) < set(full.edges())
    assert mono.num_edges() == g.num_edges() * h.num_edges()
    assert full.num_edges() == 2 * g.num_edges() * h.num_edges()


def test_join_and_mycielskian():
    assert join(complete(2), cycle(5)).num_edges() == 1 + 5 + 10
    grotzsch = mycielskian(cycle(5))
    assert (grotzsch.n, grotzsch.num_edges()) == (11, 20)
    assert is_triangle_free(grotzsch)
    assert nx.is_isomorphic(to_nx(grotzsch), nx.mycielski_graph(4))


def test_cycle_needs_three_vertices():
    with pytest.raises(ParameterError):
        cycle(2)


def test_graph_rejects_loops_and_out_of_range_edges():
    with pytest.raises(ParameterError):
        Graph(3, [(1, 1)])
    with pytest.raises(ParameterError):
        Graph(3, [(1, 4)])


def test_deletions_relabel_in_order():
    g = cycle(5)
    assert delete_vertex(g, 3).edges() == [(1, 2), (1, 4), (3, 4)]
    assert delete_edge(g, 5, 1).num_edges() == 4
    with pytest.raises(ParameterError):
        delete_edge(g, 1, 3)


def test_relabel_preserves_isomorphism_class():
    g = h0()
    h = relabel(g, [7, 1, 6, 2, 5, 3, 4])
    assert nx.is_isomorphic(to_nx(g), to_nx(h))
    with pytest.raises(ParameterError):
        relabel(g, [1, 1, 2, 3, 4, 5, 6])


def test_cliques():
    assert clique_number(complete(5)) == 5
    assert clique_number(cycle(5)) == 2
    assert clique_number(empty_graph(3)) == 1
    assert vertices_in_no_clique(h0(), 3) == [1]
    assert min_degree(h0()) == 3


# ----- colouring --------------------------------------------------------------


@pytest.mark.parametrize(
    "g, chi",
    [(cycle(5), 3), (cycle(6), 2), (complete(4), 4), (empty_graph(3), 1), (Graph(0), 0), (h0(), 4)],
)
def test_chromatic_number(g, chi):
    assert chromatic_number(g) == chi


def test_colourings_are_proper():
    g = mycielskian(cycle(5))
    assert find_coloring(g, 3) is None
    coloring = find_coloring(g, 4)
    assert is_proper_coloring(g, coloring)
    assert not is_k_colorable(tensor_product(cycle(5), cycle(5)), 2)
    assert is_k_colorable(tensor_product(complete(3), complete(3)), 3)


@pytest.mark.parametrize(
    "g, k, critical",
    [(cycle(5), 3, True), (complete(4), 4, True), (cycle(6), 3, False), (cycle(7), 3, True), (h0(), 4, True)],
)
def test_is_k_critical(g, k, critical):
    assert is_k_critical(g, k) is critical


@pytest.mark.parametrize("k", [4, 5, 6])
def test_clique_joined_with_c5_is_critical(k):
    assert is_k_critical(join(complete(k - 3), cycle(5)), k)


@pytest.mark.parametrize("k", range(1, 7))
def test_complete_graphs_are_critical(k):
    assert is_k_critical(complete(k), k)
    assert not is_k_critical(complete(k), k + 1)


PRODUCT_POOL = {"K2": complete(2), "K3": complete(3), "K4": complete(4), "C4": cycle(4), "C5": cycle(5), "C7": cycle(7)}


@pytest.mark.parametrize("g_name, h_name", list(combinations_with_replacement(PRODUCT_POOL, 2)))
def test_product_colourable_with_the_smaller_factor_bound(g_name, h_name):
    g, h = PRODUCT_POOL[g_name], PRODUCT_POOL[h_name]
    assert is_k_colorable(tensor_product(g, h), min(chromatic_number(g), chromatic_number(h)))


@pytest.mark.parametrize("a", range(4))
@pytest.mark.parametrize("g", [cycle(5), cycle(4), complete(2), h0(), empty_graph(3)])
def test_joining_a_clique_adds_its_size(a, g):
    assert chromatic_number(join(complete(a), g)) == a + chromatic_number(g)


@pytest.mark.parametrize("g", [cycle(5), cycle(7), complete(2), cycle(4)])
def test_mycielskian_raises_chromatic_number_and_stays_triangle_free(g):
    m = mycielskian(g)
    assert m.n == 2 * g.n + 1
    assert chromatic_number(m) == chromatic_number(g) + 1
    assert is_triangle_free(m)


def test_join_with_the_empty_graph_is_the_identity():
    for h in (cycle(5), h0(), empty_graph(3)):
        assert join(Graph(0), h) == h
        assert join(h, Graph(0)) == h



def test_random_colourability_matches_networkx_chromatic_bound():
    # greedy colouring never beats the exact chromatic number
    for seed in range(20):
        nxg = nx.gnp_random_graph(8, 0.5, seed=seed)
        g = Graph(8, [(i + 1, j + 1) for i, j in nxg.edges()])
        greedy = max(nx.greedy_color(nxg, strategy="largest_first").values(), default=-1) + 1
        assert chromatic_number(g) <= max(greedy, 1)
        assert is_k_colorable(g, chromatic_number(g))


# ----- formats ----------------------------------------------------------------


def test_graph6_known_string():
    g = graph6_parse("D?{")
    assert g.n == 5
    assert g.edges() == [(1, 5), (2, 5), (3, 5), (4, 5)]
    assert graph6_emit(g) == "D?{"
    assert nx.is_isomorphic(to_nx(g), nx.from_graph6_bytes(b"D?{"))


@pytest.mark.parametrize("g", [cycle(5), h0(), mycielskian(cycle(5)), complete(9), Graph(1)])
def test_graph6_matches_networkx(g):
    relabelled = nx.convert_node_labels_to_integers(to_nx(g), ordering="sorted")
    expected = nx.to_graph6_bytes(relabelled, header=False).decode().strip()
    assert graph6_emit(g) == expected
    assert graph6_parse(">>graph6<<" + expected) == g


@pytest.mark.parametrize("text, offset", [("D?", 2), ("", 0), ("D?{!", 3)])
def test_graph6_errors_carry_offsets(text, offset):
    with pytest.raises(GraphParseError) as info:
        graph6_parse(text)
    assert info.value.offset == offset


def test_edge_list_round_trip():
    g = edge_list_parse("5; 1 2; 2 3; 4 5;")
    assert g.edges() == [(1, 2), (2, 3), (4, 5)]
    assert edge_list_parse(edge_list_emit(g)) == g
    with pytest.raises(GraphParseError):
        edge_list_parse("3; 1 4")
    with pytest.raises(GraphParseError):
        edge_list_parse("3; 1")


# ----- graph input surface ----------------------------------------------------


def test_load_graph_accepts_every_form(tmp_path):
    named = load_graph("C5")
    assert load_graph(graph6_emit(named)) == named
    assert load_graph(edge_list_emit(named)) == named
    path = tmp_path / "c5.txt"
    path.write_text("# a pentagon\n5\n1 2\n2 3\n3 4\n4 5\n1 5\n", encoding="utf-8")
    assert load_graph(str(path)) == named


def test_named_joins_are_left_associative():
    assert load_graph("K2+C5") == join(complete(2), cycle(5))
    assert load_graph("K1+K1+C5") == join(join(complete(1), complete(1)), cycle(5))
    assert load_graph("K1+H0").n == 8
    assert load_graph("M(C5)") == mycielskian(cycle(5))
    assert load_graph("E3") == empty_graph(3)


@pytest.mark.parametrize("text", ["Q5", "K", "C2", "H7", "K2+"])
def test_unknown_names_are_parse_errors(text):
    with pytest.raises(GraphParseError):
        load_graph(text)
