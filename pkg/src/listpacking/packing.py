"""Constructive proper list packings of complete graphs.

Any m-assignment of K_n with m >= n admits a proper packing of size m, and
the construction here produces one: lift the lists to H = K_n box K_m, read H
as the line graph of K_{n,m} (the product vertex (i, j) is the edge x_i y_j),
list-edge-color K_{n,m} with the kernel engine -- its max degree is exactly m,
so lists of size m suffice -- and slice the resulting coloring of H back into
m pairwise-disjoint proper colorings of K_n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    Coloring,
    ListAssignment,
    Packing,
    extract_packing,
    is_proper_coloring,
    is_proper_packing,
    lift_lists,
)
from .galvin import EdgeColoring, list_edge_color
from .graphs import Graph, complete_bipartite, complete_graph, product_id


class UnsupportedRegimeError(ValueError):
    """Packing size below the vertex count: the construction does not apply."""


class SolverContractError(RuntimeError):
    """A supplied solver returned a coloring that fails verification."""


@dataclass(frozen=True)
class PackRequest:
    n: int
    lists: ListAssignment
    m: int


def _product_coloring(n: int, m: int, ec: EdgeColoring) -> Coloring:
    """Pull an edge coloring of K_{n,m} back to a coloring of K_n box K_m:
    pure bookkeeping through the identification (i, j) <-> x_i y_j."""
    return {
        product_id(i, j, m): ec.colors[(i, n + j)]
        for i in range(1, n + 1)
        for j in range(1, m + 1)
    }


def pack_complete(req: PackRequest) -> Packing:
    """Build a verified proper packing of size m for an m-assignment of K_n.

    Raises UnsupportedRegimeError when m < n and ValueError when the lists
    are not uniformly of size m.  The verifier runs before returning; a
    failure there would be an internal error, never a return value.
    """
    n, m, lists = req.n, req.m, req.lists
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    g = complete_graph(n)
    if lists.domain() != set(g.vertices()):
        raise ValueError("list assignment domain does not match K_n")
    if not lists.is_k_assignment(m):
        raise ValueError(f"every list must have exactly m={m} colors")
    if m < n:
        raise UnsupportedRegimeError(
            f"packing size m={m} below n={n}: the construction needs m >= n"
        )
    h, lifted = lift_lists(g, lists, m)
    knm, bip = complete_bipartite(n, m)
    edge_lists = {(i, n + j): lists[i] for i in range(1, n + 1) for j in range(1, m + 1)}
    ec = list_edge_color(knm, bip, edge_lists)
    f_h = _product_coloring(n, m, ec)
    if not is_proper_coloring(h, lifted, f_h).ok:
        raise RuntimeError("internal error: product coloring failed verification")
    packing = extract_packing(g, m, f_h)
    report = is_proper_packing(g, lists, packing)
    if not report.ok:
        raise RuntimeError(f"internal error: packing failed verification: {report.violations}")
    return packing


def pack_via_product(g: Graph, lists: ListAssignment, k: int, solver) -> Packing | None:
    """Generic reduction: ask `solver` for a proper list coloring of the
    lifted product and extract a packing from it.  Returns None when the
    solver reports none; that is meaningful only when the solver is
    exhaustive.  A solver returning a bad coloring is an error, not a None.
    """
    if any(len(lists[v]) < k for v in g.vertices()):
        raise ValueError(f"every list needs at least k={k} colors")
    h, lifted = lift_lists(g, lists, k)
    f_h = solver(h, lifted)
    if f_h is None:
        return None
    packing = extract_packing(g, k, f_h)
    report = is_proper_packing(g, lists, packing)
    if not report.ok:
        raise SolverContractError(
            f"solver returned a coloring whose packing fails verification: {report.violations}"
        )
    return packing
