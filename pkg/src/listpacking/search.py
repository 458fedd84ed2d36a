"""Exhaustive oracles for tiny graphs: backtracking list coloring and list
packing, canonical enumeration of k-assignments up to color renaming, and
exact chromatic / list-chromatic / list-packing numbers with certificates.

Everything here is deliberately dumb and deterministic: fixed vertex order,
sorted color order, no heuristics.  "absent" always means a completed search;
running out of budget is a distinct outcome, never a wrong answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, permutations

from .coloring import (
    Coloring,
    ListAssignment,
    Packing,
    extract_packing,
    is_proper_coloring,
    is_proper_packing,
    lift_lists,
)
from .graphs import Graph

FOUND = "found"
ABSENT = "absent"
EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int = 2_000_000
    time_limit: float = 60.0  # seconds

    def __post_init__(self):
        if self.node_limit < 1 or self.time_limit <= 0:
            raise ValueError("budget limits must be positive")


@dataclass(frozen=True)
class SearchResult:
    """Tri-state outcome; `witness` is a Coloring, Packing, or ListAssignment
    depending on the operation."""

    status: str
    witness: object = None
    nodes: int = 0


@dataclass(frozen=True)
class ChiListResult:
    value: int
    lower_witness: ListAssignment | None  # uncolorable (value-1)-assignment


@dataclass(frozen=True)
class ChiStarResult:
    value: int
    lower_witness: ListAssignment | None  # unpackable (value-1)-assignment
    upper_evidence: int  # canonical value-assignments scanned, all packable


class SearchExhaustedError(RuntimeError):
    """Budget ran out before the question was decided."""


class BoundExceededError(RuntimeError):
    """The value provably exceeds the requested bound; `witness` is a bad
    assignment at the bound itself."""

    def __init__(self, bound: int, witness: ListAssignment | None):
        super().__init__(f"value exceeds the requested bound {bound}")
        self.bound = bound
        self.witness = witness


class _BudgetHit(Exception):
    pass


class _Ticker:
    """Shared node/time accounting for one search task."""

    __slots__ = ("nodes", "node_limit", "deadline")

    def __init__(self, budget: SearchBudget):
        self.nodes = 0
        self.node_limit = budget.node_limit
        self.deadline = time.monotonic() + budget.time_limit

    def spend(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise _BudgetHit
        if self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise _BudgetHit


def solve_list_coloring(
    g: Graph, ell: ListAssignment, budget: SearchBudget | None = None
) -> SearchResult:
    """Backtracking search for a proper list coloring, vertices in input
    order, colors in sorted order, forward checking on neighbor domains."""
    ticker = _Ticker(budget or SearchBudget())
    try:
        f = _color_search(g, ell, ticker)
    except _BudgetHit:
        return SearchResult(EXHAUSTED, nodes=ticker.nodes)
    if f is None:
        return SearchResult(ABSENT, nodes=ticker.nodes)
    assert is_proper_coloring(g, ell, f).ok
    return SearchResult(FOUND, witness=f, nodes=ticker.nodes)


def _color_search(g: Graph, ell: ListAssignment, ticker: _Ticker) -> Coloring | None:
    verts = set(g.vertices())
    if ell.domain() != verts:
        raise ValueError("list assignment domain does not match the vertex set")
    domains: dict[int, set[int]] = {v: set(ell[v]) for v in g.vertices()}
    assignment: Coloring = {}

    def place(idx: int) -> bool:
        if idx > g.n:
            return True
        v = idx
        for c in sorted(domains[v]):
            ticker.spend()
            assignment[v] = c
            pruned: list[int] = []
            wiped = False
            for w in g.neighbors(v):
                if w not in assignment and c in domains[w]:
                    domains[w].discard(c)
                    pruned.append(w)
                    if not domains[w]:
                        wiped = True
                        break
            if not wiped and place(idx + 1):
                return True
            for w in pruned:
                domains[w].add(c)
            del assignment[v]
        return False

    return dict(assignment) if place(1) else None


def solve_packing(
    g: Graph, ell: ListAssignment, k: int, budget: SearchBudget | None = None
) -> SearchResult:
    """Backtracking search for a proper packing of size k: each vertex gets an
    ordered k-tuple of distinct colors from its list, adjacent vertices must
    differ in every coordinate.

    A packing's first row is already a proper list coloring, so a
    certified-absent single-coloring search settles the question up front;
    that shortcut is what keeps clique instances with identical lists fast.
    """
    if k < 1:
        raise ValueError(f"packing size must be positive, got {k}")
    if any(len(ell[v]) < k for v in g.vertices()):
        raise ValueError(f"every list needs at least k={k} colors")
    ticker = _Ticker(budget or SearchBudget())
    try:
        single = _color_search(g, ell, ticker)
        if single is None:
            return SearchResult(ABSENT, nodes=ticker.nodes)
        rows = _packing_search(g, ell, k, ticker)
    except _BudgetHit:
        return SearchResult(EXHAUSTED, nodes=ticker.nodes)
    if rows is None:
        return SearchResult(ABSENT, nodes=ticker.nodes)
    packing = Packing(rows)
    assert is_proper_packing(g, ell, packing).ok
    return SearchResult(FOUND, witness=packing, nodes=ticker.nodes)


def _packing_search(
    g: Graph, ell: ListAssignment, k: int, ticker: _Ticker
) -> tuple[Coloring, ...] | None:
    domains: dict[int, list[tuple[int, ...]]] = {
        v: list(permutations(sorted(ell[v]), k)) for v in g.vertices()
    }
    chosen: dict[int, tuple[int, ...]] = {}

    def compatible(p: tuple[int, ...], q: tuple[int, ...]) -> bool:
        return all(a != b for a, b in zip(p, q))

    def place(v: int) -> bool:
        if v > g.n:
            return True
        for p in domains[v]:
            ticker.spend()
            chosen[v] = p
            saved: list[tuple[int, list[tuple[int, ...]]]] = []
            wiped = False
            for w in g.neighbors(v):
                if w not in chosen:
                    kept = [q for q in domains[w] if compatible(p, q)]
                    saved.append((w, domains[w]))
                    domains[w] = kept
                    if not kept:
                        wiped = True
                        break
            if not wiped and place(v + 1):
                return True
            for w, old in saved:
                domains[w] = old
            del chosen[v]
        return False

    if not place(1):
        return None
    return tuple({v: chosen[v][j] for v in g.vertices()} for j in range(k))


def solve_packing_via_lift(
    g: Graph, ell: ListAssignment, k: int, budget: SearchBudget | None = None
) -> SearchResult:
    """The other route to the same answer: list-color the lifted product and
    slice.  Must agree with solve_packing on every instance."""
    if k < 1:
        raise ValueError(f"packing size must be positive, got {k}")
    if any(len(ell[v]) < k for v in g.vertices()):
        raise ValueError(f"every list needs at least k={k} colors")
    h, lifted = lift_lists(g, ell, k)
    result = solve_list_coloring(h, lifted, budget)
    if result.status != FOUND:
        return result
    packing = extract_packing(g, k, result.witness)
    assert is_proper_packing(g, ell, packing).ok
    return SearchResult(FOUND, witness=packing, nodes=result.nodes)


# ---------------------------------------------------------------------------
# Canonical enumeration of k-assignments up to color renaming.
#
# Scanning lists in vertex order and colors in sorted order, every newly seen
# color must be the smallest unused positive integer (restricted growth), and
# among the restricted-growth forms of an orbit only the lexicographically
# smallest flattened form is kept.  Fresh colors never exceed n*k, which is
# what makes "for every k-assignment" finitely checkable.
# ---------------------------------------------------------------------------


def _candidate_lists(mx: int, k: int) -> list[tuple[int, ...]]:
    """Sorted k-lists that can follow a prefix using colors 1..mx: any seen
    colors plus a run of fresh ones mx+1, mx+2, ..."""
    out = []
    for fresh in range(k + 1):
        tail = tuple(range(mx + 1, mx + 1 + fresh))
        for head in combinations(range(1, mx + 1), k - fresh):
            out.append(head + tail)
    out.sort()
    return out


def _smaller_relabeling_exists(lists: list[tuple[int, ...]]) -> bool:
    """True when some injective color relabeling makes the flattened form of
    `lists` strictly smaller, i.e. the prefix is not orbit-canonical.

    The search walks the lists in order keeping the relabeled form equal so
    far; at each list the best achievable image gives free colors the
    smallest unused targets, and equality pins the target set exactly,
    branching only over which free color takes which target.
    """

    def smallest_free(used: set[int], count: int) -> list[int]:
        vals: list[int] = []
        c = 1
        while len(vals) < count:
            if c not in used:
                vals.append(c)
            c += 1
        return vals

    def walk(idx: int, mapping: dict[int, int], used: set[int]) -> bool:
        if idx == len(lists):
            return False
        t = lists[idx]
        fixed = sorted(mapping[c] for c in t if c in mapping)
        free = [c for c in t if c not in mapping]
        best = tuple(sorted(fixed + smallest_free(used, len(free))))
        if best < t:
            return True
        if any(x not in t for x in fixed):
            return False  # image can no longer equal t; prefix comparison lost
        targets = sorted(set(t) - set(fixed))
        if len(targets) != len(free) or any(x in used for x in targets):
            return False
        for images in permutations(targets):
            ext = dict(zip(free, images))
            mapping.update(ext)
            hit = walk(idx + 1, mapping, used | set(images))
            for c in ext:
                del mapping[c]
            if hit:
                return True
        return False

    return walk(0, {}, set())


def _iter_canonical(n: int, k: int):
    """All canonical k-assignments over vertices 1..n, lazily, in
    lexicographic order of their flattened forms."""
    prefix: list[tuple[int, ...]] = []

    def walk(mx: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for cand in _candidate_lists(mx, k):
            prefix.append(cand)
            if not _smaller_relabeling_exists(prefix):
                yield from walk(max(mx, cand[-1]))
            prefix.pop()

    yield from walk(0)


def enumerate_canonical_assignments(g: Graph, k: int):
    """Yield one representative per color-renaming class of k-assignments."""
    if k < 1:
        raise ValueError(f"list size must be positive, got {k}")
    for lists in _iter_canonical(g.n, k):
        yield ListAssignment({v: frozenset(lists[v - 1]) for v in g.vertices()})


def find_bad_assignment(
    g: Graph, k: int, budget: SearchBudget | None = None
) -> SearchResult:
    """First canonical k-assignment (in enumeration order) admitting no
    proper packing of size k, or absent when every one packs."""
    budget = budget or SearchBudget()
    deadline = time.monotonic() + budget.time_limit
    total = 0
    for ell in enumerate_canonical_assignments(g, k):
        if time.monotonic() > deadline:
            return SearchResult(EXHAUSTED, nodes=total)
        result = solve_packing(g, ell, k, budget)
        total += result.nodes
        if result.status == EXHAUSTED:
            return SearchResult(EXHAUSTED, nodes=total)
        if result.status == ABSENT:
            return SearchResult(FOUND, witness=ell, nodes=total)
    return SearchResult(ABSENT, nodes=total)


MAX_CHI_VERTICES = 20


def chromatic_number(g: Graph, budget: SearchBudget | None = None) -> int:
    """Least t admitting a proper coloring from constant lists 1..t."""
    if g.n > MAX_CHI_VERTICES:
        raise ValueError(f"graph too large for exact search: {g.n} vertices")
    for t in range(1, g.n + 1):
        ell = ListAssignment({v: frozenset(range(1, t + 1)) for v in g.vertices()})
        result = solve_list_coloring(g, ell, budget)
        if result.status == EXHAUSTED:
            raise SearchExhaustedError(f"budget exhausted deciding {t}-colorability")
        if result.status == FOUND:
            return t
    raise AssertionError("unreachable: n colors always suffice")


def coloring_number(g: Graph) -> int:
    """1 + degeneracy.  Greedy coloring along a reversed min-degree
    elimination order never sees this many forbidden colors, so every
    k-assignment with k >= coloring_number(g) is colorable."""
    alive = set(g.vertices())
    degree = {v: g.degree(v) for v in alive}
    worst = 0
    while alive:
        v = min(alive, key=lambda u: (degree[u], u))
        worst = max(worst, degree[v])
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                degree[w] -= 1
    return worst + 1


def _first_uncolorable(g: Graph, k: int, budget: SearchBudget, deadline: float):
    for ell in enumerate_canonical_assignments(g, k):
        if time.monotonic() > deadline:
            raise SearchExhaustedError(f"budget exhausted scanning {k}-assignments")
        result = solve_list_coloring(g, ell, budget)
        if result.status == EXHAUSTED:
            raise SearchExhaustedError(f"budget exhausted on a {k}-assignment")
        if result.status == ABSENT:
            return ell
    return None


def list_chromatic_number(
    g: Graph, k_max: int, budget: SearchBudget | None = None
) -> ChiListResult:
    """Least k <= k_max such that every k-assignment is colorable, with the
    bad (k-1)-assignment that certifies minimality.

    The scan over canonical assignments runs only for k below the greedy
    bound; at k >= coloring_number(g) colorability is certain without it.
    """
    budget = budget or SearchBudget()
    deadline = time.monotonic() + budget.time_limit
    greedy = coloring_number(g)
    witness: ListAssignment | None = None
    for k in range(1, k_max + 1):
        if k >= greedy:
            return ChiListResult(k, witness)
        bad = _first_uncolorable(g, k, budget, deadline)
        if bad is None:
            return ChiListResult(k, witness)
        witness = bad
    raise BoundExceededError(k_max, witness)


MAX_CHI_STAR_VERTICES = 4


def list_packing_number(
    g: Graph, k_max: int, budget: SearchBudget | None = None
) -> ChiStarResult:
    """Least k <= k_max such that every canonical k-assignment admits a
    proper packing of size k, by full enumeration at every level."""
    if g.n > MAX_CHI_STAR_VERTICES:
        raise ValueError(f"graph too large for exact packing scans: {g.n} vertices")
    budget = budget or SearchBudget()
    deadline = time.monotonic() + budget.time_limit
    witness: ListAssignment | None = None
    for k in range(1, k_max + 1):
        bad: ListAssignment | None = None
        count = 0
        for ell in enumerate_canonical_assignments(g, k):
            if time.monotonic() > deadline:
                raise SearchExhaustedError(f"budget exhausted scanning {k}-assignments")
            count += 1
            result = solve_packing(g, ell, k, budget)
            if result.status == EXHAUSTED:
                raise SearchExhaustedError(f"budget exhausted on a {k}-assignment")
            if result.status == ABSENT:
                bad = ell
                break
        if bad is None:
            return ChiStarResult(k, witness, count)
        witness = bad
    raise BoundExceededError(k_max, witness)
