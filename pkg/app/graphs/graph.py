"""Simple undirected graphs on vertices 1..n with bitmask adjacency."""
import logging
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..errors import ParameterError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable labeled simple graph; bit v of adj[v'] marks the edge vv'"""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ParameterError(f"vertex count must be non-negative, got {n}")
        adj = [0] * (n + 1)
        for edge in edges:
            i, j = edge
            if not (1 <= i <= n and 1 <= j <= n):
                raise ParameterError(f"edge {i}-{j} is outside vertices 1..{n}")
            if i == j:
                raise ParameterError(f"loop at vertex {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.n = n
        self.adj: Tuple[int, ...] = tuple(adj)
        self._hash: Optional[int] = None

    @classmethod
    def from_adjacency(cls, n: int, adj: Sequence[int]) -> "Graph":
        g = cls(n)
        g.adj = tuple(adj)
        return g

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, i: int, j: int) -> bool:
        return 1 <= i <= self.n and bool(self.adj[i] >> j & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def edges(self) -> List[Edge]:
        return [(i, j) for i in self.vertices for j in _bits(self.adj[i]) if i < j]

    def num_edges(self) -> int:
        return sum(self.degree(v) for v in self.vertices) // 2

    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(sorted(self.degree(v) for v in self.vertices))

    def adjacency(self, i: int, j: int) -> int:
        """0/1 entry of the adjacency matrix"""
        return int(self.has_edge(i, j))

    def vertex_mask(self) -> int:
        return ((1 << self.n) - 1) << 1

    def components(self) -> List[List[int]]:
        seen = 0
        result = []
        for v in self.vertices:
            if seen >> v & 1:
                continue
            component = 1 << v
            frontier = component
            while frontier:
                reach = 0
                for u in _bits(frontier):
                    reach |= self.adj[u]
                frontier = reach & ~component
                component |= frontier
            seen |= component
            result.append(list(_bits(component)))
        return result


# =============================================================================
# CONSTRUCTIONS
# =============================================================================


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def join(g: Graph, h: Graph) -> Graph:
    """G + H: disjoint union plus every edge between the parts; G's vertices come first"""
    shift = g.n
    edges = g.edges() + [(i + shift, j + shift) for i, j in h.edges()]
    edges += [(i, j + shift) for i in g.vertices for j in h.vertices]
    return Graph(g.n + h.n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.edges() + [(i + shift, j + shift) for i, j in h.edges()])


def product_index(i: int, iprime: int, nprime: int) -> int:
    """Vertex of G x H holding the pair (i, i')"""
    return (i - 1) * nprime + iprime


def tensor_product(g: Graph, h: Graph) -> Graph:
    """(u, v) ~ (u', v') iff uu' in E(G) and vv' in E(H)"""
    m = h.n
    edges = []
    for i, j in g.edges():
        for p, q in h.edges():
            edges.append((product_index(i, p, m), product_index(j, q, m)))
            edges.append((product_index(i, q, m), product_index(j, p, m)))
    return Graph(g.n * h.n, edges)


def monotone_product(g: Graph, h: Graph) -> Graph:
    """Subgraph of G x H keeping only the edges (i, i')-(j, j') with i < j and i' < j'"""
    m = h.n
    edges = [
        (product_index(i, p, m), product_index(j, q, m))
        for i, j in g.edges()
        for p, q in h.edges()
    ]
    return Graph(g.n * h.n, edges)


def mycielskian(g: Graph) -> Graph:
    """Vertices 1..n, shadows n+1..2n, apex 2n+1"""
    n = g.n
    edges = list(g.edges())
    for i, j in g.edges():
        edges.append((i, j + n))
        edges.append((j, i + n))
    apex = 2 * n + 1
    edges.extend((v + n, apex) for v in g.vertices)
    return Graph(apex, edges)


def delete_edge(g: Graph, i: int, j: int) -> Graph:
    if not g.has_edge(i, j):
        raise ParameterError(f"{i}-{j} is not an edge")
    return Graph(g.n, [e for e in g.edges() if e != (min(i, j), max(i, j))])


def delete_vertex(g: Graph, v: int) -> Graph:
    """G - v with the remaining vertices relabelled 1..n-1 in order"""
    if not 1 <= v <= g.n:
        raise ParameterError(f"vertex {v} is outside 1..{g.n}")

    def shift(u: int) -> int:
        return u - 1 if u > v else u

    return Graph(g.n - 1, [(shift(i), shift(j)) for i, j in g.edges() if v not in (i, j)])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Vertex i becomes perm[i-1]"""
    if sorted(perm) != list(g.vertices):
        raise ParameterError("relabelling must be a permutation of 1..n")
    return Graph(g.n, [(perm[i - 1], perm[j - 1]) for i, j in g.edges()])


def induced_subgraph(g: Graph, keep: Sequence[int]) -> Graph:
    position: Dict[int, int] = {v: idx for idx, v in enumerate(keep, start=1)}
    return Graph(
        len(keep),
        [(position[i], position[j]) for i, j in g.edges() if i in position and j in position],
    )


# =============================================================================
# INVARIANTS
# =============================================================================


def min_degree(g: Graph) -> int:
    return min((g.degree(v) for v in g.vertices), default=0)


def _has_clique(adj: Sequence[int], candidates: int, size: int) -> bool:
    if size <= 0:
        return True
    if bin(candidates).count("1") < size:
        return False
    for v in _bits(candidates):
        candidates &= ~(1 << v)
        if _has_clique(adj, candidates & adj[v], size - 1):
            return True
    return False


def _max_clique(adj: Sequence[int], r: int, p: int, x: int, best: int) -> int:
    """Bron-Kerbosch with pivoting; returns the best clique size found"""
    if not p and not x:
        return max(best, r)
    if r + bin(p).count("1") <= best:
        return best
    pivot = max(_bits(p | x), key=lambda u: bin(p & adj[u]).count("1"))
    for v in _bits(p & ~adj[pivot]):
        best = _max_clique(adj, r + 1, p & adj[v], x & adj[v], best)
        p &= ~(1 << v)
        x |= 1 << v
    return best


def clique_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    return _max_clique(g.adj, 0, g.vertex_mask(), 0, 0)


def greedy_clique(g: Graph, vertices: Optional[Iterable[int]] = None) -> List[int]:
    """A maximal clique grown by highest remaining degree; a cheap lower bound on chi"""
    candidates = 0
    for v in vertices if vertices is not None else g.vertices:
        candidates |= 1 << v
    clique = []
    while candidates:
        v = max(_bits(candidates), key=lambda u: (bin(g.adj[u] & candidates).count("1"), -u))
        clique.append(v)
        candidates &= g.adj[v]
    return clique


def is_triangle_free(g: Graph) -> bool:
    return not any(g.adj[i] & g.adj[j] for i, j in g.edges())


def vertices_in_no_clique(g: Graph, size: int) -> List[int]:
    """Vertices that lie in no clique of the given size"""
    if size <= 1:
        return []
    return [v for v in g.vertices if not _has_clique(g.adj, g.adj[v], size - 1)]


def has_vertex_in_no_clique(g: Graph, size: int) -> bool:
    return bool(vertices_in_no_clique(g, size))


def has_clique(g: Graph, size: int) -> bool:
    return _has_clique(g.adj, g.vertex_mask(), size)
