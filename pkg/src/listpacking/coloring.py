"""List assignments, colorings, packings, and their verification.

A packing of size k is k colorings that disagree at every vertex pairwise; it
is proper when every member is a proper list coloring.  The lift/extract pair
realizes the correspondence between packings of G and colorings of G box K_k:
lists are copied along the second coordinate, and the j-th slice of a product
coloring becomes the j-th member of the packing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, cartesian_product, complete_graph, product_id

Coloring = dict[int, int]

NOT_IN_LIST = "not-in-list"
NOT_PROPER = "not-proper"
NOT_DISJOINT = "not-disjoint"


@dataclass(frozen=True)
class ListAssignment:
    """Map vertex -> nonempty set of positive integer colors."""

    lists: dict[int, frozenset[int]]

    @classmethod
    def from_dict(cls, raw) -> "ListAssignment":
        lists: dict[int, frozenset[int]] = {}
        for v, colors in raw.items():
            cs = frozenset(colors)
            if not cs:
                raise ValueError(f"empty color list at vertex {v}")
            if any(not isinstance(c, int) or isinstance(c, bool) or c < 1 for c in cs):
                raise ValueError(f"colors must be positive integers at vertex {v}")
            lists[v] = cs
        return cls(lists)

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    def domain(self) -> set[int]:
        return set(self.lists)

    def is_k_assignment(self, k: int) -> bool:
        return all(len(cs) == k for cs in self.lists.values())

    def uniform_size(self) -> int | None:
        sizes = {len(cs) for cs in self.lists.values()}
        return sizes.pop() if len(sizes) == 1 else None


@dataclass(frozen=True)
class Violation:
    kind: str
    where: tuple[int, ...]  # (v,) or (u, v)
    indices: tuple[int, ...] = ()  # 1-based coloring indices involved


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    violations: tuple[Violation, ...]

    @classmethod
    def from_violations(cls, violations) -> "VerifyReport":
        vs = tuple(violations)
        return cls(not vs, vs)


@dataclass(frozen=True)
class Packing:
    """An ordered tuple of colorings; order matters only for reporting."""

    rows: tuple[Coloring, ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def column(self, v: int) -> tuple[int, ...]:
        return tuple(row[v] for row in self.rows)


def _require_domains(g: Graph, ell: ListAssignment, f: Coloring | None = None) -> None:
    verts = set(g.vertices())
    if ell.domain() != verts:
        raise ValueError("list assignment domain does not match the vertex set")
    if f is not None and set(f) != verts:
        raise ValueError("coloring domain does not match the vertex set")


def is_proper_coloring(g: Graph, ell: ListAssignment, f: Coloring) -> VerifyReport:
    """Check list membership at every vertex and properness at every edge."""
    _require_domains(g, ell, f)
    violations: list[Violation] = []
    for v in g.vertices():
        if f[v] not in ell[v]:
            violations.append(Violation(NOT_IN_LIST, (v,)))
    for u, v in g.edges:
        if f[u] == f[v]:
            violations.append(Violation(NOT_PROPER, (u, v)))
    return VerifyReport.from_violations(violations)


def is_proper_packing(g: Graph, ell: ListAssignment, packing: Packing) -> VerifyReport:
    """Check that every row is a proper list coloring and that rows are
    pairwise distinct at every vertex."""
    _require_domains(g, ell)
    verts = set(g.vertices())
    for idx, row in enumerate(packing.rows, start=1):
        if set(row) != verts:
            raise ValueError(f"coloring {idx} domain does not match the vertex set")
    violations: list[Violation] = []
    for idx, row in enumerate(packing.rows, start=1):
        for violation in is_proper_coloring(g, ell, row).violations:
            violations.append(
                Violation(violation.kind, violation.where, (idx,))
            )
    k = packing.size
    for v in g.vertices():
        col = packing.column(v)
        for i in range(k):
            for j in range(i + 1, k):
                if col[i] == col[j]:
                    violations.append(Violation(NOT_DISJOINT, (v,), (i + 1, j + 1)))
    return VerifyReport.from_violations(violations)


def lift_lists(g: Graph, ell: ListAssignment, k: int) -> tuple[Graph, ListAssignment]:
    """Return H = g box K_k together with the lifted assignment that gives the
    product vertex (i, j) the list of vertex i, for every j."""
    if k < 1:
        raise ValueError(f"packing size must be positive, got {k}")
    _require_domains(g, ell)
    h = cartesian_product(g, complete_graph(k))
    lifted = {
        product_id(i, j, k): ell[i] for i in g.vertices() for j in range(1, k + 1)
    }
    return h, ListAssignment(lifted)


def extract_packing(g: Graph, k: int, f_h: Coloring) -> Packing:
    """Slice a coloring of g box K_k into the packing whose j-th row colors
    vertex i with the color of product vertex (i, j).  Pure reindexing; no
    properness or disjointness validation happens here."""
    if k < 1:
        raise ValueError(f"packing size must be positive, got {k}")
    expected = {product_id(i, j, k) for i in g.vertices() for j in range(1, k + 1)}
    if set(f_h) != expected:
        raise ValueError("coloring does not cover the product vertex set")
    rows = tuple(
        {i: f_h[product_id(i, j, k)] for i in g.vertices()} for j in range(1, k + 1)
    )
    return Packing(rows)
