import random
from collections import Counter

import networkx as nx
import pytest

from app.errors import ParameterError
from app.graphs.canonical import canonical_form, enumerate_graphs, is_isomorphic
from app.graphs.coloring import chromatic_number, is_k_critical
from app.graphs.graph import Graph, clique_number, complete, cycle, join, min_degree, relabel
from app.graphs.named import a4_family, grotzsch, h0, h1, h2, h3, h4, h5, h6, h_star, load_graph


def _shuffled(g: Graph, seed: int) -> Graph:
    perm = list(g.vertices)
    random.Random(seed).shuffle(perm)
    return relabel(g, perm)


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_class_counts(n, count):
    assert len(list(enumerate_graphs(n))) == count


@pytest.mark.slow
def test_class_counts_agree_with_the_graph_atlas():
    atlas = Counter(g.number_of_nodes() for g in nx.graph_atlas_g())
    for n in range(1, 8):
        assert len(list(enumerate_graphs(n))) == atlas[n]


def test_enumeration_limit():
    with pytest.raises(ParameterError):
        enumerate_graphs(9)
    with pytest.raises(ParameterError):
        enumerate_graphs(5, max_order=4)


def test_canonical_form_is_label_invariant():
    for g in (h0(), grotzsch(), join(complete(1), cycle(5)), Graph(6, [(1, 2), (3, 4)])):
        for seed in range(10):
            assert canonical_form(_shuffled(g, seed)) == canonical_form(g)


def test_isomorphism():
    assert is_isomorphic(h0(), _shuffled(h0(), 3))
    assert not is_isomorphic(cycle(6), Graph(6, [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)]))
    assert not is_isomorphic(cycle(5), cycle(6))


def test_enumerated_classes_are_pairwise_non_isomorphic():
    classes = list(enumerate_graphs(5))
    nxs = [nx.Graph(g.edges()) for g in classes]
    for g, nxg in zip(classes, nxs):
        nxg.add_nodes_from(g.vertices)
    for i in range(len(nxs)):
        for j in range(i + 1, len(nxs)):
            assert not nx.is_isomorphic(nxs[i], nxs[j])


# ----- named graphs -----------------------------------------------------------


def test_h0_is_four_critical_with_a_triangle_free_vertex():
    g = h0()
    assert (g.n, g.num_edges()) == (7, 12)
    assert is_k_critical(g, 4)
    assert min_degree(g) == 3


def test_h_star():
    g = h_star()
    assert (g.n, g.num_edges()) == (11, 29)
    assert chromatic_number(g) == 5
    assert clique_number(g) == 3
    assert load_graph("Hstar") == g


def test_grotzsch():
    g = grotzsch()
    assert chromatic_number(g) == 4
    assert is_k_critical(g, 4)
    assert load_graph("Grotzsch") == g


@pytest.mark.slow
def test_a4_family():
    family = a4_family()
    assert len(family) == 7
    assert is_isomorphic(family[0], h0())
    members = [h1(), h2(), h3(), h4(), h5(), h6()]
    assert all(is_k_critical(g, 4) and g.n == 7 for g in members)
    forms = {canonical_form(g) for g in [h0()] + members}
    assert len(forms) == 7
    assert load_graph("H3") == h3()
