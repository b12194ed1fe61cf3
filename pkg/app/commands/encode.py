import click

from ..algebra.polytext import format_polynomial
from ..encode.assemble import FAMILIES, build_family
from ..graphs.named import load_graph
from ..models import ProductEdges
from ..schemas.report import EncodeReport
from .common import AppContext, emit, pass_app, product_edges_option


@click.command("encode")
@click.option("--family", type=click.Choice(list(FAMILIES)), required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--n", "n", type=int, default=1, show_default=True)
@click.option("--nprime", type=int, default=1, show_default=True)
@click.option("--graph-g", default=None, help="G for the families L and C")
@click.option("--graph-h", default=None, help="H for the fixed-pair family L")
@product_edges_option(ProductEdges.MONOTONE)
@pass_app
def command(app: AppContext, family: str, k: int, n: int, nprime: int, graph_g, graph_h, product_edges: str):
    """Dump the generators of one ideal family"""
    ideal = build_family(
        family,
        k,
        n,
        nprime,
        graph_g=load_graph(graph_g) if graph_g else None,
        graph_h=load_graph(graph_h) if graph_h else None,
        product_edges=ProductEdges(product_edges),
    )
    generators = [format_polynomial(p) for p in ideal.generators]
    parameters = {"k": k, "n": n, "nprime": nprime}
    if graph_g or graph_h:
        parameters.update(graph_g=graph_g, graph_h=graph_h)
    report = EncodeReport(
        family=family,
        parameters=parameters,
        provenance=ideal.provenance,
        variables=ideal.ring.nvars,
        generators=generators,
    )
    header = f"# {ideal.provenance}: {len(generators)} generators over {ideal.ring.nvars} variables"
    emit(app, report, "\n".join([header] + generators))
