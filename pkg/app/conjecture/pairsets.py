"""Combinatorial pair sets W, V and V' and the V-inside-W inclusion check.

Membership is decided by the graph oracles alone. The product graph in the
(X1) condition is the one the J family encodes: the monotone half of G x H by
default, the full tensor product with ``ProductEdges.FULL``.
"""
import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import FrozenSet, Iterator, List, Optional, Tuple

from ..config import get_settings
from ..errors import ParameterError
from ..graphs.coloring import chromatic_number, is_k_colorable, is_k_critical
from ..graphs.graph import (
    Graph,
    clique_number,
    delete_vertex,
    has_vertex_in_no_clique,
    min_degree,
    monotone_product,
    tensor_product,
    vertices_in_no_clique,
)
from ..graphs.graph6 import edge_list_emit
from ..models import PairSetKind, ProductEdges, V3Mode

logger = logging.getLogger(__name__)

MAX_SET_ORDER = 5

Pair = Tuple[Graph, Graph]


# =============================================================================
# GRAPH CONDITIONS
# =============================================================================


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on 1..n, edge bits in (1,2), (1,3), ... order"""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pair for bit, pair in enumerate(pairs) if mask >> bit & 1])


def random_graph(n: int, rng: random.Random) -> Graph:
    pairs = list(combinations(range(1, n + 1), 2))
    mask = rng.getrandbits(len(pairs)) if pairs else 0
    return Graph(n, [pair for bit, pair in enumerate(pairs) if mask >> bit & 1])


def identify(g: Graph, u: int, v: int) -> Graph:
    """Drop the edge uv, merge v into u and relabel to 1..n-1"""
    edges = set()
    for a, b in g.edges():
        if {a, b} == {u, v}:
            continue
        a, b = (u if a == v else a), (u if b == v else b)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return delete_vertex(Graph(g.n, sorted(edges)), v)


def product_graph(g: Graph, h: Graph, product_edges: ProductEdges = ProductEdges.MONOTONE) -> Graph:
    if ProductEdges(product_edges) == ProductEdges.FULL:
        return tensor_product(g, h)
    return monotone_product(g, h)


@lru_cache(maxsize=None)
def _chi(g: Graph) -> int:
    return chromatic_number(g)


@lru_cache(maxsize=None)
def _omega(g: Graph) -> int:
    return clique_number(g)


@lru_cache(maxsize=None)
def edge_identification_colorable(g: Graph, k: int) -> bool:
    """delta >= 1 and every G - uv has a (k-1)-colouring with c(u) = c(v)"""
    if g.n == 0 or min_degree(g) < 1:
        return False
    return all(is_k_colorable(identify(g, u, v), k - 1) for u, v in g.edges())


@lru_cache(maxsize=None)
def clique_free_vertex(g: Graph, k: int, mode: V3Mode = V3Mode.LITERAL) -> bool:
    if V3Mode(mode) == V3Mode.VERTEX1:
        return 1 in vertices_in_no_clique(g, k - 1)
    return has_vertex_in_no_clique(g, k - 1)


@lru_cache(maxsize=None)
def _critical(g: Graph, k: int) -> bool:
    return is_k_critical(g, k)


def product_colorable(g: Graph, h: Graph, k: int, product_edges: ProductEdges = ProductEdges.MONOTONE) -> bool:
    """(X1): the encoded product has a (k-1)-colouring"""
    return is_k_colorable(product_graph(g, h, product_edges), k - 1)


def in_W(g: Graph, h: Graph, k: int, product_edges: ProductEdges = ProductEdges.MONOTONE) -> bool:
    return min(_chi(g), _chi(h)) <= k - 1 and product_colorable(g, h, k, product_edges)


def in_V(
    g: Graph,
    h: Graph,
    k: int,
    v3_mode: V3Mode = V3Mode.LITERAL,
    product_edges: ProductEdges = ProductEdges.MONOTONE,
) -> bool:
    # cheapest conditions first
    if g.n == 0 or h.n == 0 or min_degree(g) < k - 1 or min_degree(h) < k - 1:
        return False
    omegas = sorted((_omega(g), _omega(h)))
    if omegas[1] > k - 1 or omegas[0] > k - 2:
        return False
    if not (clique_free_vertex(g, k, v3_mode) and clique_free_vertex(h, k, v3_mode)):
        return False
    if not (edge_identification_colorable(g, k) and edge_identification_colorable(h, k)):
        return False
    return product_colorable(g, h, k, product_edges)


def in_Vprime(
    g: Graph,
    h: Graph,
    k: int,
    v3_mode: V3Mode = V3Mode.LITERAL,
    product_edges: ProductEdges = ProductEdges.MONOTONE,
) -> bool:
    return in_V(g, h, k, v3_mode, product_edges) and _critical(g, k) and _critical(h, k)


# =============================================================================
# PAIR SETS
# =============================================================================


@dataclass(frozen=True)
class GraphPairSet:
    kind: PairSetKind
    k: int
    n: int
    nprime: int
    members: FrozenSet[Pair]
    examined: int
    sampled: bool = False
    v3_mode: V3Mode = V3Mode.LITERAL
    product_edges: ProductEdges = ProductEdges.MONOTONE

    def __contains__(self, pair) -> bool:
        return pair in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def issubset(self, other: "GraphPairSet") -> bool:
        return self.members <= other.members


def edge_bits(n: int, nprime: int) -> int:
    return comb(n, 2) + comb(nprime, 2)


def _candidates(n: int, nprime: int, max_bits: int, sample_size: int, seed: int) -> Tuple[List[Pair], bool]:
    if edge_bits(n, nprime) <= max_bits:
        return list(product(labeled_graphs(n), labeled_graphs(nprime))), False
    rng = random.Random(seed)
    pairs = [(random_graph(n, rng), random_graph(nprime, rng)) for _ in range(sample_size)]
    logger.info(f"Sampling {sample_size} pairs for n={n}, n'={nprime} with seed {seed}")
    return pairs, True


def build_pair_set(
    kind: PairSetKind,
    k: int,
    n: int,
    nprime: int,
    *,
    v3_mode: V3Mode = V3Mode.LITERAL,
    product_edges: ProductEdges = ProductEdges.MONOTONE,
    max_exhaustive_bits: Optional[int] = None,
    sample_size: Optional[int] = None,
    seed: Optional[int] = None,
) -> GraphPairSet:
    if k < 2 or n < 1 or nprime < 1:
        raise ParameterError(f"pair sets need k >= 2 and n, n' >= 1, got ({k}, {n}, {nprime})")
    if max(n, nprime) > MAX_SET_ORDER:
        raise ParameterError(f"pair sets are limited to n, n' <= {MAX_SET_ORDER}, got ({n}, {nprime})")
    config = get_settings()
    candidates, sampled = _candidates(
        n,
        nprime,
        config.max_exhaustive_bits if max_exhaustive_bits is None else max_exhaustive_bits,
        config.sample_size if sample_size is None else sample_size,
        config.seed if seed is None else seed,
    )
    kind = PairSetKind(kind)
    if kind == PairSetKind.W:
        members = frozenset(p for p in candidates if in_W(p[0], p[1], k, product_edges))
    elif kind == PairSetKind.V:
        members = frozenset(p for p in candidates if in_V(p[0], p[1], k, v3_mode, product_edges))
    else:
        members = frozenset(p for p in candidates if in_Vprime(p[0], p[1], k, v3_mode, product_edges))
    logger.info(f"{kind.value}({k},{n},{nprime}): {len(members)} of {len(candidates)} pairs")
    return GraphPairSet(kind, k, n, nprime, members, len(candidates), sampled, V3Mode(v3_mode), ProductEdges(product_edges))


def build_W_set(k: int, n: int, nprime: int, **options) -> GraphPairSet:
    return build_pair_set(PairSetKind.W, k, n, nprime, **options)


def build_V_set(k: int, n: int, nprime: int, **options) -> GraphPairSet:
    return build_pair_set(PairSetKind.V, k, n, nprime, **options)


def build_Vprime_set(k: int, n: int, nprime: int, **options) -> GraphPairSet:
    return build_pair_set(PairSetKind.VPRIME, k, n, nprime, **options)


# =============================================================================
# INCLUSION CHECK
# =============================================================================


@dataclass
class InclusionReport:
    k: int
    n: int
    nprime: int
    holds: bool
    holds_prime: bool
    v_size: int
    vprime_size: int
    examined: int
    sampled: bool
    v3_mode: V3Mode
    counterexamples: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)


def _describe(pair: Pair) -> str:
    return f"G=[{edge_list_emit(pair[0])}] H=[{edge_list_emit(pair[1])}]"


def check_prop41(
    k: int,
    n: int,
    nprime: int,
    *,
    v3_mode: V3Mode = V3Mode.LITERAL,
    product_edges: ProductEdges = ProductEdges.MONOTONE,
    allow_sampled: bool = False,
    **options,
) -> InclusionReport:
    """V inside W and V' inside W, decided pair by pair"""
    bits = options.get("max_exhaustive_bits")
    bits = get_settings().max_exhaustive_bits if bits is None else bits
    if edge_bits(n, nprime) > bits and not allow_sampled:
        raise ParameterError(
            f"({k}, {n}, {nprime}) needs {edge_bits(n, nprime)} edge bits, above the exhaustive limit {bits}"
        )
    # the literal set contains the vertex-1 set, so build it once and filter
    v_literal = build_V_set(k, n, nprime, v3_mode=V3Mode.LITERAL, product_edges=product_edges, **options)
    vertex1 = frozenset(
        p for p in v_literal
        if clique_free_vertex(p[0], k, V3Mode.VERTEX1) and clique_free_vertex(p[1], k, V3Mode.VERTEX1)
    )
    chosen = vertex1 if V3Mode(v3_mode) == V3Mode.VERTEX1 else v_literal.members
    outside = sorted((p for p in chosen if not in_W(p[0], p[1], k, product_edges)), key=_describe)
    vprime = [p for p in chosen if _critical(p[0], k) and _critical(p[1], k)]
    outside_prime = [p for p in vprime if not in_W(p[0], p[1], k, product_edges)]

    report = InclusionReport(
        k=k,
        n=n,
        nprime=nprime,
        holds=not outside,
        holds_prime=not outside_prime,
        v_size=len(chosen),
        vprime_size=len(vprime),
        examined=v_literal.examined,
        sampled=v_literal.sampled,
        v3_mode=V3Mode(v3_mode),
        counterexamples=[_describe(p) for p in outside[:5]],
    )
    if len(vertex1) != len(v_literal):
        other = vertex1 if V3Mode(v3_mode) == V3Mode.LITERAL else v_literal.members
        other_holds = all(in_W(p[0], p[1], k, product_edges) for p in other)
        report.notes.append(
            f"v3-mode-difference: literal |V|={len(v_literal)}, vertex1 |V|={len(vertex1)}, "
            f"other mode inclusion {other_holds}"
        )
    if report.sampled:
        report.notes.append("sampled: evidence only, not a proof")
    logger.info(
        f"V({k},{n},{nprime}) inside W: {report.holds} ({report.v_size} pairs, V' {report.vprime_size})"
    )
    return report
