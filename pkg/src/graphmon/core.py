"""Immutable simple-graph representation and the distance queries built on it."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

VertexSet = frozenset[int]

UNREACHABLE = -1


class GraphError(ValueError):
    """Invalid graph construction input or an operation's precondition failed."""


class LimitExceeded(RuntimeError):
    """A configured size cap (dimension, exact-search limit) was exceeded."""


class Graph:
    """Undirected simple graph with dense integer vertex ids.

    Ids run 0..n-1 in label insertion order; labels are distinct and only
    appear at I/O boundaries. Adjacency is stored as one frozenset per
    vertex, so instances are safe to share across workers once built.
    """

    __slots__ = ("_labels", "_adj", "_index", "_m")

    def __init__(self, labels: tuple[str, ...], adj: tuple[frozenset[int], ...]):
        self._labels = labels
        self._adj = adj
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._m = sum(len(s) for s in adj) // 2

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def m(self) -> int:
        return self._m

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def neighbors(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self._adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise GraphError(f"unknown vertex label {label!r}") from None

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self._adj[u]

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.n:
            raise GraphError(f"vertex id {v!r} out of range for graph with {self.n} vertices")

    def check_vertex_set(self, s: Iterable[int]) -> VertexSet:
        members = frozenset(s)
        for v in members:
            self.check_vertex(v)
        return members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._labels, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(labels: Sequence[str], edges: Iterable[tuple[str, str]]) -> Graph:
    """Build a simple undirected graph from distinct labels and label pairs.

    Duplicate edges collapse silently; duplicate labels, unknown endpoints,
    and self-loops are rejected with the offending item named.
    """
    index: dict[str, int] = {}
    for lab in labels:
        if lab in index:
            raise GraphError(f"duplicate label {lab!r}")
        index[lab] = len(index)
    adj: list[set[int]] = [set() for _ in index]
    for a, b in edges:
        if a not in index:
            raise GraphError(f"unknown endpoint {a!r} in edge ({a!r}, {b!r})")
        if b not in index:
            raise GraphError(f"unknown endpoint {b!r} in edge ({a!r}, {b!r})")
        if a == b:
            raise GraphError(f"self-loop on {a!r}")
        u, v = index[a], index[b]
        adj[u].add(v)
        adj[v].add(u)
    return Graph(tuple(index), tuple(frozenset(s) for s in adj))


def open_neighborhood(g: Graph, v: int, r: int = 1) -> VertexSet:
    """Vertices at distance exactly r from v (r=1 is the adjacency set)."""
    g.check_vertex(v)
    if r < 1:
        raise GraphError(f"radius must be >= 1, got {r}")
    if r == 1:
        return g.neighbors(v)
    return frozenset(u for u, d in enumerate(bfs_distances(g, v)) if d == r)


def closed_neighborhood(g: Graph, s: Iterable[int]) -> VertexSet:
    """S together with every neighbor of a member of S."""
    members = g.check_vertex_set(s)
    out = set(members)
    for v in members:
        out |= g._adj[v]
    return frozenset(out)


def open_neighborhood_of_set(g: Graph, s: Iterable[int]) -> VertexSet:
    """Union of the members' adjacency sets (members not implicitly included)."""
    members = g.check_vertex_set(s)
    out: set[int] = set()
    for v in members:
        out |= g._adj[v]
    return frozenset(out)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from source to every vertex; UNREACHABLE where no path."""
    g.check_vertex(source)
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g._adj[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du + 1
                queue.append(v)
    return dist


class DistanceMatrix:
    """All-pairs hop distances; entries are UNREACHABLE across components."""

    __slots__ = ("dist",)

    def __init__(self, dist: list[list[int]]):
        self.dist = dist

    @property
    def n(self) -> int:
        return len(self.dist)

    def get(self, u: int, v: int) -> int:
        return self.dist[u][v]

    def row(self, u: int) -> list[int]:
        return self.dist[u]

    def is_connected(self) -> bool:
        return all(d != UNREACHABLE for row in self.dist for d in row)

    def max_finite(self) -> int:
        return max((d for row in self.dist for d in row), default=0)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix([bfs_distances(g, u) for u in range(g.n)])


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted id lists, ordered by smallest member."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = []
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in g._adj[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def diameter(g: Graph) -> int | None:
    """Longest shortest path; None when the graph is disconnected."""
    if g.n == 0:
        return 0
    longest = 0
    for u in range(g.n):
        row = bfs_distances(g, u)
        if UNREACHABLE in row:
            return None
        longest = max(longest, max(row))
    return longest


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph on the given vertices plus the new-id -> old-id mapping."""
    old_ids = sorted(g.check_vertex_set(vertices))
    rank = {old: new for new, old in enumerate(old_ids)}
    labels = tuple(g.labels[v] for v in old_ids)
    adj = tuple(frozenset(rank[u] for u in g._adj[v] if u in rank) for v in old_ids)
    return Graph(labels, adj), old_ids
