"""Graph serialization.

Edge-list text: first line ``n m``, then n label lines, then m edge lines
``label1 label2``. JSON: ``{"vertices": [...], "edges": [[a, b], ...]}``.
Both writers emit labels in id order and edges sorted by id pair, so a
write/read/write cycle is byte identical. DOT output names vertices by
their labels and carries no layout attributes.
"""

from __future__ import annotations

import json

from .core import Graph, GraphError, build_graph


def _writable_labels(g: Graph) -> tuple[str, ...]:
    for lab in g.labels:
        if not lab or any(c.isspace() for c in lab):
            raise GraphError(f"label {lab!r} cannot be written to the text format")
    return g.labels


def to_edgelist_text(g: Graph) -> str:
    labels = _writable_labels(g)
    lines = [f"{g.n} {g.m}"]
    lines.extend(labels)
    lines.extend(f"{labels[u]} {labels[v]}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edgelist_text(text: str) -> Graph:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise GraphError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphError(f"bad header line {lines[0]!r}, expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphError(f"bad header line {lines[0]!r}, expected two integers") from None
    if len(lines) != 1 + n + m:
        raise GraphError(f"expected {1 + n + m} lines for n={n} m={m}, got {len(lines)}")
    labels = [line.strip() for line in lines[1 : 1 + n]]
    edges = []
    for line in lines[1 + n :]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {line!r}")
        edges.append((parts[0], parts[1]))
    return build_graph(labels, edges)


def to_json_text(g: Graph) -> str:
    obj = {
        "vertices": list(g.labels),
        "edges": [[g.labels[u], g.labels[v]] for u, v in g.edges()],
    }
    return json.dumps(obj, indent=2) + "\n"


def from_json_text(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphError(f"invalid graph JSON: {e}") from None
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise GraphError("graph JSON must be an object with 'vertices' and 'edges'")
    vertices = obj["vertices"]
    edges = obj["edges"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise GraphError("'vertices' must be an array of strings")
    if not isinstance(edges, list):
        raise GraphError("'edges' must be an array")
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2 or not all(isinstance(x, str) for x in e):
            raise GraphError(f"bad edge entry {e!r}, expected a 2-array of labels")
        pairs.append((e[0], e[1]))
    return build_graph(vertices, pairs)


def to_dot(g: Graph) -> str:
    labels = g.labels
    lines = ["graph G {"]
    lines.extend(f'  "{lab}";' for lab in labels)
    lines.extend(f'  "{labels[u]}" -- "{labels[v]}";' for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads_graph(text: str) -> Graph:
    """Parse either supported graph format, sniffing JSON by its first byte."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_json_text(text)
    return from_edgelist_text(text)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_graph(fh.read())
