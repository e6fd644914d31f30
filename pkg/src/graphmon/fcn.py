"""Generator for the fractal cubic network family FCN(d).

FCN(0) is the 4-cycle on labels 00, 01, 11, 10. FCN(d) consists of four
copies of FCN(d-1), prefixed by 11, 01, 10, and 00, joined by one 4-cycle
of cross edges on the special vertices prefix+"11"+0...0. Vertices are the
2d+2 bit strings; ids are assigned in lexicographic label order, so a
vertex's id equals the integer value of its bit string.

The construction here is iterative rather than recursive: the innermost
4-cycles are laid down for every 2d-bit prefix, then the cross 4-cycles
are added level by level, which keeps the edge census auditable
(m(d) = 4*m(d-1) + 4).
"""

from __future__ import annotations

from typing import NamedTuple

from .core import Graph, GraphError, LimitExceeded, VertexSet

DEFAULT_MAX_DIMENSION = 8

# One 4-cycle on the two-bit patterns, as id offsets: 00-01-11-10-00.
# Cross cycles use the same cycle traversed as 00-10-11-01-00; the edge
# set is identical either way.
_CYCLE = ((0, 1), (1, 3), (3, 2), (2, 0))


def _check_dimension(d: int, max_dimension: int) -> None:
    if d < 0:
        raise GraphError(f"dimension must be nonnegative, got {d}")
    if d > max_dimension:
        raise LimitExceeded(
            f"dimension {d} exceeds the cap of {max_dimension} "
            f"(FCN({max_dimension}) already has {4 ** (max_dimension + 1)} vertices)"
        )


def fractal_cubic_network(d: int, max_dimension: int = DEFAULT_MAX_DIMENSION) -> Graph:
    """Build FCN(d) with vertices labeled by their 2d+2 bit strings."""
    _check_dimension(d, max_dimension)
    width = 2 * d + 2
    n = 1 << width
    labels = tuple(format(v, f"0{width}b") for v in range(n))
    adj: list[set[int]] = [set() for _ in range(n)]

    def add_cycle(base: int, shift: int) -> None:
        # 4-cycle on base | (pattern << shift) over the two-bit patterns
        for a, b in _CYCLE:
            u = base | (a << shift)
            v = base | (b << shift)
            adj[u].add(v)
            adj[v].add(u)

    for prefix in range(n >> 2):
        add_cycle(prefix << 2, 0)
    for level in range(1, d + 1):
        # special suffix "11" followed by 2*level-2 zeros
        suffix = 0b11 << (2 * level - 2)
        for prefix in range(1 << (2 * (d - level))):
            add_cycle((prefix << (2 * level + 2)) | suffix, 2 * level)

    return Graph(labels, tuple(frozenset(s) for s in adj))


class CanonicalPartition(NamedTuple):
    """The three-way vertex split behind the canonical seed construction."""

    seeds: VertexSet  # suffix "01": the power-dominating seeds
    forced: VertexSet  # suffix "10": degree-2 twins reached by propagation
    covered: VertexSet  # suffixes "00"/"11": dominated directly by the seeds


def canonical_power_dominating_set(d: int, max_dimension: int = DEFAULT_MAX_DIMENSION) -> VertexSet:
    """The canonical minimum power-dominating seed set of FCN(d).

    For d >= 1 these are the 4^d vertices with suffix "01"; for d = 0 the
    singleton {00} (any single vertex power-dominates the 4-cycle).
    """
    _check_dimension(d, max_dimension)
    if d == 0:
        return frozenset({0})
    return frozenset(range(1, 1 << (2 * d + 2), 4))


def canonical_partition(d: int, max_dimension: int = DEFAULT_MAX_DIMENSION) -> CanonicalPartition:
    """Split V(FCN(d)), d >= 1, into seeds / forced / covered by label suffix."""
    _check_dimension(d, max_dimension)
    if d < 1:
        raise GraphError(f"canonical partition requires dimension >= 1, got {d}")
    n = 1 << (2 * d + 2)
    seeds = frozenset(range(1, n, 4))
    forced = frozenset(range(2, n, 4))
    covered = frozenset(v for v in range(n) if v % 4 in (0, 3))
    return CanonicalPartition(seeds, forced, covered)
