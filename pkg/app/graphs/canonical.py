"""Canonical labelling and isomorphism-free enumeration of small graphs.

The canonical form is the graph6 string of the relabelling whose column-major
upper-triangle bitstring is smallest among all relabellings that respect the
colour-refinement partition.
"""
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from ..errors import ParameterError
from .graph import Graph, _bits, relabel
from .graph6 import graph6_emit

logger = logging.getLogger(__name__)

MAX_CANONICAL_ORDER = 8


def _refine(g: Graph) -> List[int]:
    """Stable colour-refinement classes, ranked by isomorphism-invariant signatures"""
    colors = {v: g.degree(v) for v in g.vertices}
    classes = len(set(colors.values()))
    while True:
        signatures = {
            v: (colors[v], tuple(sorted(colors[u] for u in _bits(g.adj[v])))) for v in g.vertices
        }
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(signatures.values())))}
        colors = {v: ranking[signatures[v]] for v in g.vertices}
        refined = len(ranking)
        if refined == classes:
            return [colors[v] for v in g.vertices]
        classes = refined


def canonical_labeling(g: Graph) -> List[int]:
    """perm with perm[v-1] = canonical position (1-based) of vertex v"""
    n = g.n
    if n > MAX_CANONICAL_ORDER:
        raise ParameterError(f"canonical forms are limited to n <= {MAX_CANONICAL_ORDER}, got {n}")
    if n == 0:
        return []
    colors = _refine(g)
    slots = sorted(colors)
    by_color: Dict[int, List[int]] = {}
    for v, c in zip(g.vertices, colors):
        by_color.setdefault(c, []).append(v)

    best: List[Optional[List[int]]] = [None]
    best_order: List[List[int]] = [[]]
    order: List[int] = []
    columns: List[int] = []

    def search(position: int) -> None:
        if position == n:
            if best[0] is None or columns < best[0]:
                best[0] = list(columns)
                best_order[0] = list(order)
            return
        for v in by_color[slots[position]]:
            if v in order:
                continue
            column = 0
            for u in order:
                column = (column << 1) | (g.adj[v] >> u & 1)
            columns.append(column)
            if best[0] is None or columns <= best[0][: position + 1]:
                order.append(v)
                search(position + 1)
                order.pop()
            columns.pop()

    search(0)
    perm = [0] * n
    for position, v in enumerate(best_order[0], start=1):
        perm[v - 1] = position
    return perm


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g)) if g.n else g


def canonical_form(g: Graph) -> str:
    """Isomorphism-invariant key, injective on isomorphism classes"""
    return graph6_emit(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges() or g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=None)
def _classes(n: int) -> Tuple[Tuple[str, Graph], ...]:
    if n == 0:
        return (("?", Graph(0)),)
    found: Dict[str, Graph] = {}
    for _, parent in _classes(n - 1):
        base = list(parent.edges())
        for mask in range(1 << (n - 1)):
            g = Graph(n, base + [(v, n) for v in range(1, n) if mask >> (v - 1) & 1])
            canon = canonical_graph(g)
            found.setdefault(graph6_emit(canon), canon)
    logger.info(f"Enumerated {len(found)} isomorphism classes on {n} vertices")
    return tuple(sorted(found.items()))


def enumerate_graphs(n: int, max_order: int = MAX_CANONICAL_ORDER) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, in canonical-form order"""
    if n < 0 or n > min(max_order, MAX_CANONICAL_ORDER):
        raise ParameterError(f"enumeration is limited to 0 <= n <= {min(max_order, MAX_CANONICAL_ORDER)}, got {n}")
    return iter([g for _, g in _classes(n)])
