"""Shared test utilities: naive generators and oracles kept deliberately
independent of the library's own search paths."""

from __future__ import annotations

from itertools import combinations, permutations

from listpacking import Graph


def all_graphs_up_to_iso(max_n: int) -> list[Graph]:
    """Every isomorphism-distinct graph on 1..max_n vertices, by brute force:
    enumerate all edge subsets and keep one per canonical (min-over-
    permutations) edge set."""
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        pool = list(combinations(range(1, n + 1), 2))
        seen: set[tuple] = set()
        for bits in range(2 ** len(pool)):
            edges = [pool[i] for i in range(len(pool)) if bits >> i & 1]
            key = min(
                tuple(sorted(tuple(sorted((p[u - 1], p[v - 1]))) for u, v in edges))
                for p in permutations(range(1, n + 1))
            )
            if key in seen:
                continue
            seen.add(key)
            out.append(Graph.from_edges(n, edges))
    return out


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph.from_edges(n, edges)
