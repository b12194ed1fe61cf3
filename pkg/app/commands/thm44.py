import click

from ..conjecture.suites import TaskSpec, run_task
from ..models import ProductEdges
from .common import AppContext, finish_verdict, pass_app, product_edges_option


@click.command("thm44")
@click.option("--k", "k", type=int, required=True, help="Chromatic bound k (at least 3)")
@click.option("--n", "n", type=int, required=True, help="Order of G")
@click.option("--nprime", type=int, required=True, help="Order of H")
@product_edges_option(ProductEdges.MONOTONE)
@click.option("--compute-both", is_flag=True, help="Compute tilde J even when tilde I is the unit ideal")
@click.option("--cross-check", is_flag=True, help="Also decide V inside W combinatorially and compare")
@pass_app
def command(app: AppContext, k: int, n: int, nprime: int, product_edges: str, compute_both: bool, cross_check: bool):
    """Decide tilde J inside tilde I for all G on n and H on n' vertices"""
    parameters = {"k": k, "n": n, "nprime": nprime}
    if product_edges != "monotone":
        parameters["product_edges"] = product_edges
    if compute_both:
        parameters["compute_both"] = True
    if cross_check:
        parameters["cross_check"] = True
    record = run_task(TaskSpec(task="thm44", parameters=parameters), app.config)
    finish_verdict(app, "thm44", record)
