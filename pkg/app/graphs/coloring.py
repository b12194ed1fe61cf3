"""Exact vertex coloring by DSATUR backtracking."""
import logging
from typing import Dict, List, Optional, Sequence

from ..errors import ParameterError
from .graph import Graph, _bits, delete_edge, delete_vertex, greedy_clique

logger = logging.getLogger(__name__)


def _popcount(x: int) -> int:
    return bin(x).count("1")


class _Dsatur:
    """Backtracking over one connected component with forward checking"""

    def __init__(self, g: Graph, vertices: Sequence[int], k: int):
        self.adj = g.adj
        self.k = k
        self.full = (1 << k) - 1
        self.color: Dict[int, int] = {}
        self.uncolored = set(vertices)
        self.degree = {v: _popcount(g.adj[v]) for v in vertices}
        self.nodes = 0

    def forbidden(self, v: int) -> int:
        mask = 0
        color = self.color
        for u in _bits(self.adj[v]):
            c = color.get(u)
            if c is not None:
                mask |= 1 << c
        return mask

    def solve(self, used: int) -> bool:
        if not self.uncolored:
            return True
        self.nodes += 1
        best = None
        best_rank = None
        best_mask = 0
        for v in self.uncolored:
            mask = self.forbidden(v)
            if mask == self.full:
                return False
            rank = (_popcount(mask), self.degree[v], -v)
            if best_rank is None or rank > best_rank:
                best, best_rank, best_mask = v, rank, mask
        self.uncolored.remove(best)
        # colors 0..used-1 first, then at most one fresh color
        for c in range(min(used + 1, self.k)):
            if best_mask >> c & 1:
                continue
            self.color[best] = c
            if self.solve(max(used, c + 1)):
                return True
            del self.color[best]
        self.uncolored.add(best)
        return False


def find_coloring(g: Graph, k: int) -> Optional[Dict[int, int]]:
    """A proper coloring with colors 1..k as {vertex: color}, or None"""
    if k < 0:
        raise ParameterError(f"number of colors must be non-negative, got {k}")
    if g.n == 0:
        return {}
    if k == 0:
        return None
    coloring: Dict[int, int] = {}
    for component in g.components():
        if len(greedy_clique(g, component)) > k:
            return None
        search = _Dsatur(g, component, k)
        if not search.solve(0):
            logger.debug(f"No {k}-coloring of a {len(component)}-vertex component ({search.nodes} nodes)")
            return None
        coloring.update({v: c + 1 for v, c in search.color.items()})
    return coloring


def is_k_colorable(g: Graph, k: int) -> bool:
    return find_coloring(g, k) is not None


def is_proper_coloring(g: Graph, coloring: Dict[int, int]) -> bool:
    if set(coloring) != set(g.vertices):
        return False
    return all(coloring[i] != coloring[j] for i, j in g.edges())


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    k = max(1, len(greedy_clique(g)))
    while not is_k_colorable(g, k):
        k += 1
    return k


def is_k_critical(g: Graph, k: int) -> bool:
    """chi(G) = k and every edge and vertex deletion is (k-1)-colorable"""
    if k < 1:
        raise ParameterError(f"criticality needs k >= 1, got {k}")
    if is_k_colorable(g, k - 1) or not is_k_colorable(g, k):
        return False
    if not all(is_k_colorable(delete_vertex(g, v), k - 1) for v in g.vertices):
        return False
    return all(is_k_colorable(delete_edge(g, i, j), k - 1) for i, j in g.edges())


def color_classes(coloring: Dict[int, int]) -> List[List[int]]:
    classes: Dict[int, List[int]] = {}
    for v, c in sorted(coloring.items()):
        classes.setdefault(c, []).append(v)
    return [classes[c] for c in sorted(classes)]
