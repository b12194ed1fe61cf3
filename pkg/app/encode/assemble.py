"""Composite ideals over the W-, V- and fixed-graph rings, and the family registry."""
import logging
from functools import reduce
from typing import Callable, Dict, FrozenSet, List, Optional

from ..algebra.groebner import Ideal, ResourceCaps, elimination_ideal
from ..algebra.polyring import Ring, Variable, VarTag, make_ring
from ..errors import ParameterError
from ..graphs.graph import Graph
from ..models import ProductEdges, RingKind, Side
from .families import (
    check_parameters,
    coloring_ideal,
    fixed_graph_ideal,
    ideal_E,
    ideal_I,
    ideal_Iprime,
    ideal_J,
    ideal_J_mirror,
    ideal_P,
    ideal_Pprime,
    ideal_product,
    ideal_Q,
    ideal_Qprime,
    ideal_R,
    ideal_Rprime,
    ideal_S,
    ideal_Sprime,
    ideal_X,
    ideal_Z,
    triangle_free_ideal,
)

logger = logging.getLogger(__name__)


def edge_variables(ring: Ring) -> FrozenSet[Variable]:
    """The e/f variables of a ring: the subring every tilde ideal lives in"""
    return frozenset(v for v in ring.variables if v.tag in (VarTag.E, VarTag.F))


def _sum(ideals: List[Ideal], ring: Ring, provenance: str) -> Ideal:
    total = reduce(lambda a, b: a + b, ideals)
    return Ideal(total.generators, ring, provenance)


def _with_product_edges(k: int, n: int, nprime: int, ring: Ring, product_edges: ProductEdges) -> List[Ideal]:
    parts = [ideal_J(k, n, nprime, ring)]
    if ProductEdges(product_edges) == ProductEdges.FULL:
        parts.append(ideal_J_mirror(k, n, nprime, ring))
    return parts


def assemble_Jcal(
    k: int, n: int, nprime: int, product_edges: ProductEdges = ProductEdges.MONOTONE
) -> Ideal:
    """E + X + Z + I*I' + J over the W-ring"""
    check_parameters(k, n, nprime)
    ring = make_ring(RingKind.W, k, n, nprime)
    parts = [
        ideal_E(n, nprime, ring),
        ideal_X(k, n, nprime, ring),
        ideal_Z(k, n, nprime, ring),
        ideal_product(ideal_I(k, n, ring), ideal_Iprime(k, nprime, ring)),
    ] + _with_product_edges(k, n, nprime, ring, product_edges)
    ideal = _sum(parts, ring, f"Jcal({k},{n},{nprime})")
    logger.info(f"Assembled {ideal.provenance}: {len(ideal.generators)} generators, {ring.nvars} variables")
    return ideal


def assemble_Ical(
    k: int, n: int, nprime: int, product_edges: ProductEdges = ProductEdges.MONOTONE
) -> Ideal:
    """E + Z + J + P + P' + Q + Q' + R + R' + R_{k-1} R'_{k-1} + S + S' over the V-ring"""
    check_parameters(k, n, nprime)
    ring = make_ring(RingKind.V, k, n, nprime)
    parts = [ideal_E(n, nprime, ring), ideal_Z(k, n, nprime, ring)]
    parts += _with_product_edges(k, n, nprime, ring, product_edges)
    parts += [
        ideal_P(k, n, ring),
        ideal_Pprime(k, nprime, ring),
        ideal_Q(k, n, ring),
        ideal_Qprime(k, nprime, ring),
        ideal_R(k, n, ring),
        ideal_Rprime(k, nprime, ring),
        ideal_product(ideal_R(k - 1, n, ring), ideal_Rprime(k - 1, nprime, ring)),
        ideal_S(k, n, ring),
        ideal_Sprime(k, nprime, ring),
    ]
    ideal = _sum(parts, ring, f"Ical({k},{n},{nprime})")
    logger.info(f"Assembled {ideal.provenance}: {len(ideal.generators)} generators, {ring.nvars} variables")
    return ideal


def tilde_J(
    k: int,
    n: int,
    nprime: int,
    *,
    caps: Optional[ResourceCaps] = None,
    strategy: str = "normal",
    product_edges: ProductEdges = ProductEdges.MONOTONE,
) -> Ideal:
    jcal = assemble_Jcal(k, n, nprime, product_edges)
    return elimination_ideal(jcal, edge_variables(jcal.ring), caps=caps, strategy=strategy)


def tilde_I(
    k: int,
    n: int,
    nprime: int,
    *,
    caps: Optional[ResourceCaps] = None,
    strategy: str = "normal",
    product_edges: ProductEdges = ProductEdges.MONOTONE,
) -> Ideal:
    ical = assemble_Ical(k, n, nprime, product_edges)
    return elimination_ideal(ical, edge_variables(ical.ring), caps=caps, strategy=strategy)


def assemble_L(
    g: Graph, h: Graph, k: int, product_edges: ProductEdges = ProductEdges.MONOTONE
) -> Ideal:
    """E + E' + Z + J with G and H fixed, over the e/f/z ring"""
    check_parameters(k, max(g.n, 1), max(h.n, 1))
    if g.n < 1 or h.n < 1:
        raise ParameterError("fixed-pair ideals need graphs with at least one vertex")
    ring = make_ring(RingKind.L, k, g.n, h.n)
    parts = [
        fixed_graph_ideal(g, Side.G, ring=ring),
        fixed_graph_ideal(h, Side.H, ring=ring),
        ideal_Z(k, g.n, h.n, ring),
    ] + _with_product_edges(k, g.n, h.n, ring, product_edges)
    return _sum(parts, ring, f"L({k};{g.n},{h.n})")


# =============================================================================
# FAMILY REGISTRY
# =============================================================================


def _needs_graphs(builder: Callable[[Graph, Graph, int, ProductEdges], Ideal]) -> Callable[..., Ideal]:
    def build(k, n, nprime, *, graph_g=None, graph_h=None, product_edges=ProductEdges.MONOTONE):
        if graph_g is None or graph_h is None:
            raise ParameterError("this family needs both graphs")
        return builder(graph_g, graph_h, k, product_edges)

    return build


def _colorings(k, n, nprime, *, graph_g=None, **_):
    if graph_g is None:
        raise ParameterError("this family needs --graph-g")
    return coloring_ideal(graph_g, k)


def _plain(builder: Callable[[int, int, int], Ideal]) -> Callable[..., Ideal]:
    def build(k, n, nprime, **_):
        return builder(k, n, nprime)

    return build


def _composite(builder: Callable[[int, int, int, ProductEdges], Ideal]) -> Callable[..., Ideal]:
    def build(k, n, nprime, *, product_edges=ProductEdges.MONOTONE, **_):
        return builder(k, n, nprime, product_edges)

    return build


FAMILIES: Dict[str, Callable[..., Ideal]] = {
    "E": _plain(lambda k, n, nprime: ideal_E(n, nprime)),
    "X": _plain(ideal_X),
    "Z": _plain(ideal_Z),
    "I": _plain(lambda k, n, nprime: ideal_I(k, n)),
    "Iprime": _plain(lambda k, n, nprime: ideal_Iprime(k, nprime)),
    "J": _plain(ideal_J),
    "Jmirror": _plain(ideal_J_mirror),
    "P": _plain(lambda k, n, nprime: ideal_P(k, n)),
    "Pprime": _plain(lambda k, n, nprime: ideal_Pprime(k, nprime)),
    "Q": _plain(lambda k, n, nprime: ideal_Q(k, n)),
    "Qprime": _plain(lambda k, n, nprime: ideal_Qprime(k, nprime)),
    "R": _plain(lambda k, n, nprime: ideal_R(k, n)),
    "Rprime": _plain(lambda k, n, nprime: ideal_Rprime(k, nprime)),
    "S": _plain(lambda k, n, nprime: ideal_S(k, n)),
    "Sprime": _plain(lambda k, n, nprime: ideal_Sprime(k, nprime)),
    "T": _plain(lambda k, n, nprime: triangle_free_ideal(n, Side.G)),
    "Tprime": _plain(lambda k, n, nprime: triangle_free_ideal(nprime, Side.H)),
    "Jcal": _composite(assemble_Jcal),
    "Ical": _composite(assemble_Ical),
    "L": _needs_graphs(assemble_L),
    "C": _colorings,
}


def build_family(name: str, k: int, n: int, nprime: int, **options) -> Ideal:
    """Look up a family by its command-line name and build it"""
    try:
        builder = FAMILIES[name]
    except KeyError:
        raise ParameterError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    return builder(k, n, nprime, **options)
