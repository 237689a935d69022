"""Simple undirected graphs and color multiplicity vectors.

Vertices are 0-based integers. Edges are stored with the smaller endpoint
first and globally sorted lexicographically; the position of an edge in
``Graph.edges`` is its canonical index, which the weight storage and the
file formats rely on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidGraphError, InvalidMultiplicityError


@dataclass(frozen=True)
class Graph:
    """Validated simple undirected graph.

    ``edges`` is the canonically ordered tuple of (u, v) pairs with u < v;
    ``adjacency[v]`` lists the neighbors of v. Instances are immutable and
    safe to share across threads.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class MultiplicityVector:
    """Prescribed color class sizes (mu_1, ..., mu_k) summing to |V|.

    Zero entries are accepted but flagged via ``has_zero_entries``: the
    certified zero-free guarantees are only claimed when every entry is
    positive, so callers may want to warn.
    """

    counts: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def has_zero_entries(self) -> bool:
        return 0 in self.counts


def _canonical_edges(vertex_count: int, edge_list: Iterable[Sequence[int]],
                     require_nonempty: bool = True) -> tuple[tuple[int, int], ...]:
    seen: set[tuple[int, int]] = set()
    canon = []
    for pos, edge in enumerate(edge_list):
        pair = tuple(edge)
        if len(pair) != 2:
            raise InvalidGraphError(f"edges[{pos}]: expected a pair, got {pair!r}")
        u, v = pair
        if not (isinstance(u, int) and isinstance(v, int)):
            raise InvalidGraphError(f"edges[{pos}]: endpoints must be integers, got {pair!r}")
        if u == v:
            raise InvalidGraphError(f"edges[{pos}]: loop edge ({u}, {v}) is not allowed")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise InvalidGraphError(
                f"edges[{pos}]: endpoint out of range for {vertex_count} vertices: ({u}, {v})")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise InvalidGraphError(f"edges[{pos}]: duplicate edge ({u}, {v})")
        seen.add((u, v))
        canon.append((u, v))
    if require_nonempty and not canon:
        raise InvalidGraphError("edge list is empty; at least one edge is required")
    canon.sort()
    return tuple(canon)


def _build(vertex_count: int, edge_list, require_nonempty: bool) -> Graph:
    if vertex_count < 1:
        raise InvalidGraphError(f"vertex_count must be >= 1, got {vertex_count}")
    edges = _canonical_edges(vertex_count, edge_list, require_nonempty)
    nbrs: list[list[int]] = [[] for _ in range(vertex_count)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    adjacency = tuple(tuple(sorted(ns)) for ns in nbrs)
    return Graph(vertex_count, edges, adjacency)


def build_graph(vertex_count: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validate and canonicalize a graph with at least one edge.

    Raises InvalidGraphError on loops, duplicate edges, out-of-range
    endpoints, or an empty edge list.
    """
    return _build(vertex_count, edge_list, require_nonempty=True)


def build_host_graph(vertex_count: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Like build_graph but edgeless graphs are allowed.

    Host graphs only supply adjacency data for weight construction; they are
    never handed to the partition-function engines, so the at-least-one-edge
    invariant does not apply.
    """
    return _build(vertex_count, edge_list, require_nonempty=False)


def max_degree(g: Graph) -> int:
    """Largest vertex degree of the graph."""
    return max(len(ns) for ns in g.adjacency)


def validate_multiplicities(g: Graph, counts: Sequence[int]) -> MultiplicityVector:
    """Check a multiplicity vector against the graph's vertex count.

    Zero entries are accepted (see MultiplicityVector.has_zero_entries);
    negative entries and a wrong total are rejected.
    """
    if len(counts) == 0:
        raise InvalidMultiplicityError("multiplicity vector must be non-empty")
    for i, c in enumerate(counts):
        if not isinstance(c, int):
            raise InvalidMultiplicityError(f"counts[{i}]: expected an integer, got {c!r}")
        if c < 0:
            raise InvalidMultiplicityError(f"counts[{i}]: negative entry {c}")
    total = sum(counts)
    if total != g.vertex_count:
        raise InvalidMultiplicityError(
            f"multiplicities sum to {total}, expected |V| = {g.vertex_count}")
    return MultiplicityVector(tuple(counts))


def graph_from_json(data: dict, require_edges: bool = True) -> Graph:
    """Parse the {"vertices": n, "edges": [[u, v], ...]} wire format."""
    if not isinstance(data, dict):
        raise InvalidGraphError(f"graph document must be an object, got {type(data).__name__}")
    if "vertices" not in data:
        raise InvalidGraphError('graph document: missing "vertices" field')
    n = data["vertices"]
    if not isinstance(n, int) or n < 1:
        raise InvalidGraphError(f'"vertices": expected a positive integer, got {n!r}')
    if "edges" not in data:
        raise InvalidGraphError('graph document: missing "edges" field')
    raw = data["edges"]
    if not isinstance(raw, list):
        raise InvalidGraphError('"edges": expected a list of pairs')
    for pos, e in enumerate(raw):
        if not isinstance(e, list) or len(e) != 2:
            raise InvalidGraphError(f"edges[{pos}]: expected a two-element list, got {e!r}")
    return _build(n, [tuple(e) for e in raw], require_nonempty=require_edges)


def graph_to_json(g: Graph) -> dict:
    return {"vertices": g.vertex_count, "edges": [list(e) for e in g.edges]}
