import click

from ..conjecture.suites import TaskSpec, run_task
from ..models import ProductEdges
from ..graphs.named import load_graph
from .common import AppContext, finish_verdict, pass_app, product_edges_option


@click.command("pair")
@click.option("--graph-g", required=True, help="Graph name, graph6, edge list or file")
@click.option("--graph-h", required=True, help="Graph name, graph6, edge list or file")
@click.option("--k", "k", type=int, required=True, help="Colour bound k; the product is tested for k-1 colours")
@product_edges_option(ProductEdges.FULL)
@pass_app
def command(app: AppContext, graph_g: str, graph_h: str, k: int, product_edges: str):
    """Decide whether the fixed-pair ideal of G and H is the unit ideal"""
    # parse up front so bad input exits before any algebra
    load_graph(graph_g)
    load_graph(graph_h)
    parameters = {"graph_g": graph_g, "graph_h": graph_h, "k": k, "product_edges": product_edges}
    record = run_task(TaskSpec(task="pair", parameters=parameters), app.config)
    finish_verdict(app, "pair", record)
