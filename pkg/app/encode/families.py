"""Generator families for the colouring and criticality encodings.

Every constructor takes an optional ``ring``. Without one, the ideal lives in
the ring of exactly the variables the family uses. Generators are listed in
row-major index order.
"""
import logging
from itertools import combinations
from typing import Callable, Iterable, List, Optional, Sequence

from ..algebra.groebner import Ideal
from ..algebra.polyring import Polynomial, Ring, Variable, product
from ..errors import ParameterError
from ..graphs.graph import Graph
from ..models import Side

logger = logging.getLogger(__name__)


def check_parameters(k: int, n: int, nprime: int = 1, min_k: int = 3):
    if k < min_k:
        raise ParameterError(f"k must be at least {min_k}, got {k}")
    if n < 1 or nprime < 1:
        raise ParameterError(f"graph orders must be positive, got n={n}, n'={nprime}")


def _ring(variables: Iterable[Variable], ring: Optional[Ring]) -> Ring:
    return ring if ring is not None else Ring(variables)


def _pairs(n: int):
    return combinations(range(1, n + 1), 2)


def _edge_var(side: Side) -> Callable[[int, int], Variable]:
    return Variable.e if Side(side) == Side.G else Variable.f


def complete_sum(ring: Ring, a: Variable, b: Variable, degree: int) -> Polynomial:
    """a^d + a^(d-1) b + ... + b^d"""
    return Polynomial(ring, {ring.monomial({a: degree - t, b: t}): 1 for t in range(degree + 1)})


def _edge(ring: Ring, var: Callable[[int, int], Variable], i: int, j: int) -> Polynomial:
    return ring.var(var(min(i, j), max(i, j)))


# =============================================================================
# W-RING FAMILIES
# =============================================================================


def ideal_E(n: int, nprime: int, ring: Optional[Ring] = None) -> Ideal:
    """Edge indicators are 0 or 1"""
    variables = [Variable.e(i, j) for i, j in _pairs(n)] + [Variable.f(i, j) for i, j in _pairs(nprime)]
    ring = _ring(variables, ring)
    gens = []
    for v in variables:
        x = ring.var(v)
        gens.append(x * x - x)
    return Ideal(gens, ring, f"E({n},{nprime})")


def ideal_X(k: int, n: int, nprime: int, ring: Optional[Ring] = None) -> Ideal:
    check_parameters(k, n, nprime)
    variables = [Variable.x(i) for i in range(1, n + 1)] + [Variable.y(i) for i in range(1, nprime + 1)]
    ring = _ring(variables, ring)
    return Ideal([ring.var(v) ** (k - 1) - 1 for v in variables], ring, f"X({k},{n},{nprime})")


def ideal_Z(k: int, n: int, nprime: int, ring: Optional[Ring] = None) -> Ideal:
    check_parameters(k, n, nprime)
    variables = [Variable.z(i, j) for i in range(1, n + 1) for j in range(1, nprime + 1)]
    ring = _ring(variables, ring)
    return Ideal([ring.var(v) ** (k - 1) - 1 for v in variables], ring, f"Z({k},{n},{nprime})")


def _vertex_coloring(
    k: int, n: int, side: Side, ring: Optional[Ring], tag: str
) -> Ideal:
    edge = _edge_var(side)
    color = Variable.x if Side(side) == Side.G else Variable.y
    variables = [edge(i, j) for i, j in _pairs(n)] + [color(i) for i in range(1, n + 1)]
    ring = _ring(variables, ring)
    gens = [
        ring.var(edge(i, j)) * complete_sum(ring, color(i), color(j), k - 2)
        for i, j in _pairs(n)
    ]
    return Ideal(gens, ring, tag)


def ideal_I(k: int, n: int, ring: Optional[Ring] = None) -> Ideal:
    """Endpoints of every present edge of G get different (k-1)-th roots of unity"""
    check_parameters(k, n)
    return _vertex_coloring(k, n, Side.G, ring, f"I({k},{n})")


def ideal_Iprime(k: int, nprime: int, ring: Optional[Ring] = None) -> Ideal:
    check_parameters(k, nprime)
    return _vertex_coloring(k, nprime, Side.H, ring, f"I'({k},{nprime})")


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    """All pairwise products of generators"""
    ring = a.ring.union(b.ring)
    gens = [ring.embed(p) * ring.embed(q) for p in a.generators for q in b.generators]
    return Ideal(gens, ring, f"({a.provenance})*({b.provenance})")


def _product_edges(k: int, n: int, nprime: int, ring: Optional[Ring], mirror: bool) -> Ideal:
    check_parameters(k, n, nprime)
    variables = (
        [Variable.e(i, j) for i, j in _pairs(n)]
        + [Variable.f(i, j) for i, j in _pairs(nprime)]
        + [Variable.z(i, j) for i in range(1, n + 1) for j in range(1, nprime + 1)]
    )
    ring = _ring(variables, ring)
    gens = []
    for i, j in _pairs(n):
        for ip, jp in _pairs(nprime):
            if mirror:
                ends = Variable.z(i, jp), Variable.z(j, ip)
            else:
                ends = Variable.z(i, ip), Variable.z(j, jp)
            gens.append(
                ring.var(Variable.e(i, j)) * ring.var(Variable.f(ip, jp)) * complete_sum(ring, *ends, k - 2)
            )
    tag = "Jmirror" if mirror else "J"
    return Ideal(gens, ring, f"{tag}({k},{n},{nprime})")


def ideal_J(k: int, n: int, nprime: int, ring: Optional[Ring] = None) -> Ideal:
    """Product edges (i,i')-(j,j') for i<j, i'<j' get different colours"""
    return _product_edges(k, n, nprime, ring, mirror=False)


def ideal_J_mirror(k: int, n: int, nprime: int, ring: Optional[Ring] = None) -> Ideal:
    """The remaining tensor-product edges (i,j')-(j,i')"""
    return _product_edges(k, n, nprime, ring, mirror=True)


# =============================================================================
# V-RING FAMILIES
# =============================================================================


def _criticality(k: int, n: int, side: Side, ring: Optional[Ring], tag: str) -> Ideal:
    edge = _edge_var(side)
    shadow = Variable.xt if Side(side) == Side.G else Variable.yt
    variables = [edge(i, j) for i, j in _pairs(n)] + [
        shadow(p, q, l) for p, q in _pairs(n) for l in range(1, n + 1)
    ]
    ring = _ring(variables, ring)
    gens: List[Polynomial] = []
    # no isolated vertex
    for i in range(1, n + 1):
        gens.append(product([_edge(ring, edge, i, j) - 1 for j in range(1, n + 1) if j != i], ring))
    # colourings of G - pq with c(p) = c(q) = 1
    for p, q in _pairs(n):
        for l in range(1, n + 1):
            gens.append(ring.var(shadow(p, q, l)) ** (k - 1) - 1)
    for p, q in _pairs(n):
        for l in (p, q):
            gens.append(ring.var(shadow(p, q, l)) - 1)
    for p, q in _pairs(n):
        for i, j in _pairs(n):
            if (i, j) == (p, q):
                continue
            gens.append(
                ring.var(edge(p, q))
                * ring.var(edge(i, j))
                * complete_sum(ring, shadow(p, q, i), shadow(p, q, j), k - 2)
            )
    return Ideal(gens, ring, tag)


def ideal_P(k: int, n: int, ring: Optional[Ring] = None) -> Ideal:
    check_parameters(k, n)
    return _criticality(k, n, Side.G, ring, f"P({k},{n})")


def ideal_Pprime(k: int, nprime: int, ring: Optional[Ring] = None) -> Ideal:
    check_parameters(k, nprime)
    return _criticality(k, nprime, Side.H, ring, f"P'({k},{nprime})")


def _clique_products(ring: Ring, edge, vertices: Sequence[int]) -> Polynomial:
    return product([ring.var(edge(i, j)) for i, j in combinations(vertices, 2)], ring)


def _vertex_one_free(k: int, n: int, side: Side, ring: Optional[Ring], tag: str) -> Ideal:
    edge = _edge_var(side)
    ring = _ring([edge(i, j) for i, j in _pairs(n)], ring)
    gens = []
    for chosen in combinations(range(2, n + 1), k - 2):
        spokes = product([ring.var(edge(1, i)) for i in chosen], ring)
        gens.append(spokes * _clique_products(ring, edge, chosen))
    return Ideal(gens, ring, tag)


def ideal_Q(k: int, n: int, ring: Optional[Ring] = None) -> Ideal:
    """Vertex 1 lies in no (k-1)-clique"""
    check_parameters(k, n)
    return _vertex_one_free(k, n, Side.G, ring, f"Q({k},{n})")


def ideal_Qprime(k: int, nprime: int, ring: Optional[Ring] = None) -> Ideal:
    check_parameters(k, nprime)
    return _vertex_one_free(k, nprime, Side.H, ring, f"Q'({k},{nprime})")


def _clique_free(k: int, n: int, side: Side, ring: Optional[Ring], tag: str) -> Ideal:
    if n < 1:
        raise ParameterError(f"graph order must be positive, got {n}")
    edge = _edge_var(side)
    ring = _ring([edge(i, j) for i, j in _pairs(n)], ring)
    gens = [_clique_products(ring, edge, chosen) for chosen in combinations(range(1, n + 1), k)]
    return Ideal(gens, ring, tag)


def ideal_R(k: int, n: int, ring: Optional[Ring] = None) -> Ideal:
    """No k-clique"""
    return _clique_free(k, n, Side.G, ring, f"R({k},{n})")


def ideal_Rprime(k: int, nprime: int, ring: Optional[Ring] = None) -> Ideal:
    return _clique_free(k, nprime, Side.H, ring, f"R'({k},{nprime})")


def _min_degree(k: int, n: int, side: Side, ring: Optional[Ring], tag: str) -> Ideal:
    edge = _edge_var(side)
    ring = _ring([edge(i, j) for i, j in _pairs(n)], ring)
    size = n - k + 1
    if size <= 0:
        # minimum degree k-1 cannot hold on n <= k-1 vertices
        logger.debug(f"{tag}: degenerate range n-k+1={size}, contributing the unit ideal")
        return Ideal([ring.one()], ring, tag)
    gens = []
    for l in range(1, n + 1):
        others = [i for i in range(1, n + 1) if i != l]
        for chosen in combinations(others, size):
            gens.append(product([_edge(ring, edge, i, l) - 1 for i in chosen], ring))
    return Ideal(gens, ring, tag)


def ideal_S(k: int, n: int, ring: Optional[Ring] = None) -> Ideal:
    """Minimum degree at least k-1"""
    check_parameters(k, n, min_k=2)
    return _min_degree(k, n, Side.G, ring, f"S({k},{n})")


def ideal_Sprime(k: int, nprime: int, ring: Optional[Ring] = None) -> Ideal:
    check_parameters(k, nprime, min_k=2)
    return _min_degree(k, nprime, Side.H, ring, f"S'({k},{nprime})")


# =============================================================================
# FIXED-GRAPH FAMILIES
# =============================================================================


def fixed_graph_ideal(g: Graph, side: Side = Side.G, n: Optional[int] = None, ring: Optional[Ring] = None) -> Ideal:
    """e_ij - 1 for edges of G and e_ij for non-edges"""
    if n is not None and n != g.n:
        raise ParameterError(f"graph has {g.n} vertices, expected {n}")
    edge = _edge_var(side)
    ring = _ring([edge(i, j) for i, j in _pairs(g.n)], ring)
    gens = [ring.var(edge(i, j)) - g.adjacency(i, j) for i, j in _pairs(g.n)]
    tag = "E" if Side(side) == Side.G else "E'"
    return Ideal(gens, ring, f"{tag}[{g.n}]")


def triangle_free_ideal(n: int, side: Side = Side.G, ring: Optional[Ring] = None) -> Ideal:
    edge = _edge_var(side)
    ring = _ring([edge(i, j) for i, j in _pairs(n)], ring)
    gens = [
        ring.var(edge(i, j)) * ring.var(edge(j, l)) * ring.var(edge(i, l))
        for i, j, l in combinations(range(1, n + 1), 3)
    ]
    return Ideal(gens, ring, f"triangle-free({n})")


def coloring_ideal(g: Graph, colors: int, ring: Optional[Ring] = None) -> Ideal:
    """Proper colourings of G by colors-th roots of unity"""
    if colors < 1:
        raise ParameterError(f"need at least one colour, got {colors}")
    variables = [Variable.x(i) for i in g.vertices]
    ring = _ring(variables, ring)
    gens = [ring.var(v) ** colors - 1 for v in variables]
    gens += [complete_sum(ring, Variable.x(i), Variable.x(j), colors - 1) for i, j in g.edges()]
    return Ideal(gens, ring, f"coloring({colors})[{g.n}]")
