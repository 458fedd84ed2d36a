"""Immutable simple graphs and the constructions everything else builds on:
complete graphs, complete bipartite graphs, Cartesian products, line graphs,
and bipartitions with odd-cycle witnesses.

Vertices are contiguous 1-based integers.  Derived graphs carry structured
labels (Atom / Pair / EdgeOf) so that product coordinates and edge-vertices
can be recovered without parsing anything.  All constructors are
deterministic: identical inputs give identical vertex orderings and labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

Vertex = int
Edge = tuple[int, int]


@dataclass(frozen=True)
class Atom:
    index: int


@dataclass(frozen=True)
class Pair:
    left: "Label"
    right: "Label"


@dataclass(frozen=True)
class EdgeOf:
    u: int
    v: int  # normalized: u < v


Label = Atom | Pair | EdgeOf


class NotBipartiteError(ValueError):
    """Raised when a bipartition is requested for a graph with an odd cycle.

    The offending cycle is available as ``.cycle`` (a vertex sequence of odd
    length whose consecutive pairs, and closing pair, are edges).
    """

    def __init__(self, cycle: list[int]):
        super().__init__(f"graph is not bipartite: odd cycle {cycle}")
        self.cycle = cycle


def edge(u: int, v: int) -> Edge:
    """Normalize an edge to (min, max) order."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n with a sorted edge tuple."""

    n: int
    edges: tuple[Edge, ...]
    labels: tuple[Label, ...] | None = None

    @classmethod
    def from_edges(
        cls,
        n: int,
        edge_list,
        labels: tuple[Label, ...] | None = None,
    ) -> "Graph":
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        seen: set[Edge] = set()
        for u, v in edge_list:
            if u == v:
                raise ValueError(f"loop edge ({u},{v}) rejected")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
            e = edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge ({u},{v}) rejected")
            seen.add(e)
        if labels is not None and len(labels) != n:
            raise ValueError("labels must cover every vertex")
        return cls(n, tuple(sorted(seen)), labels)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def _adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u - 1].append(v)
            nbrs[v - 1].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency[v - 1]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v - 1])

    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self._edge_set

    def label(self, v: int) -> Label | None:
        return None if self.labels is None else self.labels[v - 1]


@dataclass(frozen=True)
class Bipartition:
    X: frozenset[int]
    Y: frozenset[int]

    def split_edge(self, e: Edge) -> tuple[int, int]:
        """Return the endpoints of e as (X-side vertex, Y-side vertex)."""
        u, v = e
        if u in self.X and v in self.Y:
            return u, v
        if v in self.X and u in self.Y:
            return v, u
        raise ValueError(f"edge {e} does not cross the bipartition")


def product_id(i: int, j: int, width: int) -> int:
    """Vertex id of the product vertex (i, j) when the right factor has
    `width` vertices; the inverse of product_coords."""
    return (i - 1) * width + j


def product_coords(vid: int, width: int) -> tuple[int, int]:
    i, j = divmod(vid - 1, width)
    return i + 1, j + 1


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs at least one vertex, got n={n}")
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    labels = tuple(Atom(i) for i in range(1, n + 1))
    return Graph.from_edges(n, edges, labels)


def complete_bipartite(n: int, m: int) -> tuple[Graph, Bipartition]:
    """K_{n,m} with X = 1..n and Y = n+1..n+m."""
    if n < 1 or m < 1:
        raise ValueError(f"both sides must be nonempty, got ({n},{m})")
    edges = [(i, n + j) for i in range(1, n + 1) for j in range(1, m + 1)]
    labels = tuple(Atom(i) for i in range(1, n + m + 1))
    g = Graph.from_edges(n + m, edges, labels)
    bip = Bipartition(frozenset(range(1, n + 1)), frozenset(range(n + 1, n + m + 1)))
    return g, bip


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertices are pairs (i, j), numbered (i-1)*|V(h)| + j; (i,j) ~ (i',j')
    iff the pairs agree in one coordinate and are adjacent in the other."""
    if g.n < 1 or h.n < 1:
        raise ValueError("both factors must be nonempty")
    w = h.n
    edges: list[Edge] = []
    for i in g.vertices():
        for a, b in h.edges:
            edges.append(edge(product_id(i, a, w), product_id(i, b, w)))
    for a, b in g.edges:
        for j in h.vertices():
            edges.append(edge(product_id(a, j, w), product_id(b, j, w)))
    labels = tuple(
        Pair(g.label(i) or Atom(i), h.label(j) or Atom(j))
        for i in g.vertices()
        for j in h.vertices()
    )
    return Graph.from_edges(g.n * h.n, edges, labels)


def line_graph(g: Graph) -> Graph:
    """One vertex per edge of g (in sorted edge order, labeled EdgeOf);
    two edge-vertices are adjacent when the edges share an endpoint."""
    if not g.edges:
        raise ValueError("line graph of an edgeless graph is undefined here")
    base = g.edges
    edges: list[Edge] = []
    for a, b in combinations(range(len(base)), 2):
        ea, eb = base[a], base[b]
        if ea[0] in eb or ea[1] in eb:
            edges.append((a + 1, b + 1))
    labels = tuple(EdgeOf(u, v) for u, v in base)
    return Graph.from_edges(len(base), edges, labels)


def bipartition(g: Graph) -> Bipartition:
    """2-color g by BFS; raise NotBipartiteError with an odd-cycle witness
    if impossible.  Isolated vertices land in X."""
    color: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for root in g.vertices():
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    raise NotBipartiteError(_odd_cycle(parent, v, w))
    x = frozenset(v for v in g.vertices() if color[v] == 0)
    return Bipartition(x, frozenset(g.vertices()) - x)


def _odd_cycle(parent: dict[int, int | None], v: int, w: int) -> list[int]:
    # Walk both BFS ancestries to their first common vertex; the two partial
    # paths plus the edge vw close an odd cycle.
    def ancestry(u: int) -> list[int]:
        path = [u]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])  # type: ignore[arg-type]
        return path

    pv, pw = ancestry(v), ancestry(w)
    common = set(pv) & set(pw)
    iv = next(i for i, u in enumerate(pv) if u in common)
    iw = next(i for i, u in enumerate(pw) if u in common)
    assert pv[iv] == pw[iw]
    return pv[: iv + 1] + pw[:iw][::-1]
