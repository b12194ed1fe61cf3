from typing import Any, Optional

import click

from ..errors import ParameterError
from ..graphs.coloring import chromatic_number, is_k_critical
from ..graphs.graph import Graph, clique_number, is_triangle_free, min_degree, tensor_product
from ..graphs.graph6 import MAX_SHORT_ORDER, edge_list_emit, graph6_emit
from ..graphs.named import load_graph
from ..schemas.report import GraphReport
from .common import AppContext, emit, pass_app

OPS = ["chrom", "critical", "tensor", "g6", "clique", "info"]


def _serialise(g: Graph) -> str:
    return graph6_emit(g) if g.n <= MAX_SHORT_ORDER else edge_list_emit(g)


def _info(g: Graph) -> dict:
    return {
        "n": g.n,
        "m": g.num_edges(),
        "degrees": list(g.degree_sequence()),
        "min_degree": min_degree(g) if g.n else 0,
        "chromatic_number": chromatic_number(g),
        "clique_number": clique_number(g),
        "triangle_free": is_triangle_free(g),
        "edges": edge_list_emit(g),
    }


@click.command("graph")
@click.option("--op", type=click.Choice(OPS), required=True)
@click.option("--graph", "graph_spec", required=True, help="Graph name, graph6, edge list or file")
@click.option("--graph-h", default=None, help="Second factor for --op tensor")
@click.option("--k", "k", type=int, default=None, help="k for --op critical (defaults to the chromatic number)")
@pass_app
def command(app: AppContext, op: str, graph_spec: str, graph_h: Optional[str], k: Optional[int]):
    """Graph oracles: chromatic number, criticality, products and formats"""
    g = load_graph(graph_spec)
    graphs = [graph_spec]
    result: Any
    if op == "chrom":
        result = chromatic_number(g)
    elif op == "critical":
        k = chromatic_number(g) if k is None else k
        result = is_k_critical(g, k)
    elif op == "tensor":
        if graph_h is None:
            raise ParameterError("--op tensor needs --graph-h")
        graphs.append(graph_h)
        result = _serialise(tensor_product(g, load_graph(graph_h)))
    elif op == "g6":
        result = graph6_emit(g)
    elif op == "clique":
        result = clique_number(g)
    else:
        result = _info(g)
    if isinstance(result, dict):
        text = "\n".join(f"{key}: {value}" for key, value in result.items())
    else:
        text = str(result)
    emit(app, GraphReport(op=op, graphs=graphs, result=result), text)
