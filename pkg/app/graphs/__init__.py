from .canonical import canonical_form, canonical_graph, canonical_labeling, enumerate_graphs, is_isomorphic
from .coloring import chromatic_number, find_coloring, is_k_colorable, is_k_critical, is_proper_coloring
from .graph import (
    Graph,
    clique_number,
    complete,
    cycle,
    delete_edge,
    delete_vertex,
    disjoint_union,
    empty_graph,
    has_vertex_in_no_clique,
    is_triangle_free,
    join,
    min_degree,
    monotone_product,
    mycielskian,
    relabel,
    tensor_product,
)
from .graph6 import edge_list_emit, edge_list_parse, graph6_emit, graph6_parse
from .named import a4_family, grotzsch, h0, h1, h2, h3, h4, h5, h6, h_star, load_graph
