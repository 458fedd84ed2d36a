"""File formats: DIMACS-style graph files, JSON list files (vertex- or
edge-keyed), and JSON packing files.  Parsers reject malformed input with the
offending line or key named; writers round-trip exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

from .coloring import ListAssignment, Packing
from .galvin import EdgeColoring
from .graphs import Edge, Graph


class FormatError(ValueError):
    pass


def parse_graph(text: str) -> Graph:
    """DIMACS-style: optional `c` comment lines, one `p edge <n> <e>` line,
    then `e <u> <v>` lines with 1-based vertex ids."""
    n: int | None = None
    declared_edges: int | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "c":
            continue
        if fields[0] == "p":
            if n is not None:
                raise FormatError(f"line {num}: duplicate problem line")
            if len(fields) != 4 or fields[1] != "edge":
                raise FormatError(f"line {num}: expected 'p edge <n> <e>'")
            try:
                n, declared_edges = int(fields[2]), int(fields[3])
            except ValueError:
                raise FormatError(f"line {num}: non-integer counts") from None
            if n < 0 or declared_edges < 0:
                raise FormatError(f"line {num}: negative counts")
        elif fields[0] == "e":
            if n is None:
                raise FormatError(f"line {num}: edge before the problem line")
            if len(fields) != 3:
                raise FormatError(f"line {num}: expected 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise FormatError(f"line {num}: non-integer endpoints") from None
            if u == v:
                raise FormatError(f"line {num}: loop edge ({u},{v}) rejected")
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"line {num}: endpoint out of range 1..{n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise FormatError(f"line {num}: duplicate edge ({u},{v})")
            seen.add(e)
            edges.append(e)
        else:
            raise FormatError(f"line {num}: unrecognized line {line!r}")
    if n is None:
        raise FormatError("missing problem line 'p edge <n> <e>'")
    if len(edges) != declared_edges:
        raise FormatError(
            f"declared {declared_edges} edges but found {len(edges)}"
        )
    return Graph.from_edges(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {len(g.edges)}"]
    lines += [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def _load_json_object(text: str, what: str) -> dict:
    def reject_duplicates(pairs):
        obj = {}
        for key, value in pairs:
            if key in obj:
                raise FormatError(f"duplicate key {key!r} in {what}")
            obj[key] = value
        return obj

    try:
        data = json.loads(text, object_pairs_hook=reject_duplicates)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{what}: invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise FormatError(f"{what}: expected a JSON object")
    return data


def _check_color_array(key: str, value: object) -> frozenset[int]:
    if not isinstance(value, list) or not value:
        raise FormatError(f"key {key!r}: expected a nonempty array of colors")
    if any(not isinstance(c, int) or isinstance(c, bool) or c < 1 for c in value):
        raise FormatError(f"key {key!r}: colors must be positive integers")
    if len(set(value)) != len(value):
        raise FormatError(f"key {key!r}: duplicate colors")
    return frozenset(value)


def parse_vertex_lists(text: str, g: Graph) -> ListAssignment:
    """JSON object mapping vertex id (decimal string) -> array of colors,
    covering every vertex exactly once."""
    data = _load_json_object(text, "lists file")
    lists: dict[int, frozenset[int]] = {}
    for key, value in data.items():
        try:
            v = int(key)
        except ValueError:
            raise FormatError(f"key {key!r}: not a vertex id") from None
        if not (1 <= v <= g.n):
            raise FormatError(f"key {key!r}: vertex out of range 1..{g.n}")
        lists[v] = _check_color_array(key, value)
    missing = sorted(set(g.vertices()) - set(lists))
    if missing:
        raise FormatError(f"no list for vertex {missing[0]}")
    return ListAssignment(lists)


def format_vertex_lists(ell: ListAssignment) -> str:
    obj = {str(v): sorted(ell[v]) for v in sorted(ell.domain())}
    return json.dumps(obj, indent=2) + "\n"


def parse_inputs(graph_path, lists_path) -> tuple[Graph, ListAssignment]:
    """Read and validate a graph file plus its vertex lists file."""
    g = parse_graph(Path(graph_path).read_text())
    return g, parse_vertex_lists(Path(lists_path).read_text(), g)


def parse_edge_lists(text: str, g: Graph) -> dict[Edge, frozenset[int]]:
    """JSON object mapping "u-v" (u < v) -> array of colors, covering every
    edge exactly once."""
    data = _load_json_object(text, "edge lists file")
    lists: dict[Edge, frozenset[int]] = {}
    for key, value in data.items():
        parts = key.split("-")
        try:
            u, v = int(parts[0]), int(parts[1])
        except (ValueError, IndexError):
            raise FormatError(f"key {key!r}: expected 'u-v'") from None
        if len(parts) != 2 or not u < v:
            raise FormatError(f"key {key!r}: expected 'u-v' with u < v")
        if not g.has_edge(u, v):
            raise FormatError(f"key {key!r}: not an edge of the graph")
        lists[(u, v)] = _check_color_array(key, value)
    missing = sorted(set(g.edges) - set(lists))
    if missing:
        u, v = missing[0]
        raise FormatError(f"no list for edge {u}-{v}")
    return lists


def format_edge_lists(edge_lists: dict[Edge, frozenset[int]]) -> str:
    obj = {f"{u}-{v}": sorted(cs) for (u, v), cs in sorted(edge_lists.items())}
    return json.dumps(obj, indent=2) + "\n"


def format_edge_coloring(ec: EdgeColoring) -> str:
    obj = {f"{u}-{v}": c for (u, v), c in sorted(ec.colors.items())}
    return json.dumps(obj, indent=2) + "\n"


def parse_packing(text: str, n: int) -> Packing:
    """JSON object { "k": size, "colorings": k arrays of n positive entries };
    entry [j][i] is the color of vertex i+1 in coloring j+1."""
    data = _load_json_object(text, "packing file")
    if set(data) != {"k", "colorings"}:
        raise FormatError("packing file needs exactly the keys 'k' and 'colorings'")
    k, rows = data["k"], data["colorings"]
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise FormatError("'k' must be a positive integer")
    if not isinstance(rows, list) or len(rows) != k:
        raise FormatError(f"'colorings' must be an array of {k} arrays")
    for j, row in enumerate(rows, start=1):
        if not isinstance(row, list) or len(row) != n:
            raise FormatError(f"coloring {j} must have exactly {n} entries")
        if any(not isinstance(c, int) or isinstance(c, bool) or c < 1 for c in row):
            raise FormatError(f"coloring {j}: entries must be positive integers")
    return Packing(tuple({i + 1: row[i] for i in range(n)} for row in rows))


def format_packing(packing: Packing) -> str:
    n = len(packing.rows[0])
    obj = {
        "k": packing.size,
        "colorings": [[row[i + 1] for i in range(n)] for row in packing.rows],
    }
    return json.dumps(obj, indent=2) + "\n"
