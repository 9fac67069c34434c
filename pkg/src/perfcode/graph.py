"""Immutable simple undirected graphs on dense integer vertex ids.

Vertices are always 0..n-1. Adjacency is kept both as sorted tuples (for
deterministic iteration) and as integer bitmasks (for fast set algebra);
all operations are pure and return new graphs.
"""

from __future__ import annotations

import logging
from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, Sequence

logger = logging.getLogger(__name__)

INFINITY = float("inf")


class Graph:
    """A simple undirected graph: no loops, no multi-edges, ids 0..n-1."""

    __slots__ = ("n", "_adj", "_mask", "_closed")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        """Build from a full adjacency listing; prefer :func:`from_edge_list`.

        The listing must already be symmetric, loop-free and in range;
        this constructor only normalizes ordering.
        """
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows for n={n}")
        rows = []
        masks = []
        closed = []
        for v in range(n):
            neighbors = tuple(sorted(set(adj[v])))
            mask = 0
            for u in neighbors:
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if not 0 <= u < n:
                    raise ValueError(f"neighbor {u} of vertex {v} out of range [0, {n})")
                mask |= 1 << u
            rows.append(neighbors)
            masks.append(mask)
            closed.append(mask | (1 << v))
        for v in range(n):
            for u in rows[v]:
                if not (masks[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency: {v} lists {u} but not vice versa")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_adj", tuple(rows))
        object.__setattr__(self, "_mask", tuple(masks))
        object.__setattr__(self, "_closed", tuple(closed))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- basic accessors ---------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted open neighborhood of v."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def adjacent(self, u: int, v: int) -> bool:
        return (self._mask[u] >> v) & 1 == 1

    def neighbor_mask(self, v: int) -> int:
        """Open neighborhood as a bitmask."""
        return self._mask[v]

    def closed_mask(self, v: int) -> int:
        """Closed neighborhood N[v] as a bitmask."""
        return self._closed[v]

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in ascending lexicographic order."""
        for u in range(self.n):
            for v in self._adj[u]:
                if v > u:
                    yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self._adj) // 2

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, collapsing duplicate edges.

    Self-loops and out-of-range ids are rejected with the offending pair;
    duplicates (in either orientation) are collapsed with a logged warning
    count, since the model is a simple graph.
    """
    adj: list[set[int]] = [set() for _ in range(n)]
    duplicates = 0
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range [0, {n})")
        if v in adj[u]:
            duplicates += 1
            continue
        adj[u].add(v)
        adj[v].add(u)
    if duplicates:
        logger.warning("collapsed %d duplicate edge(s)", duplicates)
    return Graph(n, adj)


def distance(g: Graph, u: int, v: int) -> int | float:
    """Shortest-path distance between u and v; INFINITY when disconnected."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertex pair ({u}, {v}) out of range [0, {g.n})")
    if u == v:
        return 0
    seen = 1 << u
    frontier = deque([(u, 0)])
    while frontier:
        x, d = frontier.popleft()
        for y in g.neighbors(x):
            if y == v:
                return d + 1
            if not (seen >> y) & 1:
                seen |= 1 << y
                frontier.append((y, d + 1))
    return INFINITY


def square(g: Graph) -> Graph:
    """The square: same vertices, u~v iff their distance in g is 1 or 2."""
    adj = []
    for v in range(g.n):
        reach = g.neighbor_mask(v)
        for u in g.neighbors(v):
            reach |= g.neighbor_mask(u)
        reach &= ~(1 << v)
        adj.append(_mask_to_list(reach))
    return Graph(g.n, adj)


def closed_neighborhood_weights(g: Graph) -> tuple[int, ...]:
    """Per-vertex |N[v]| = degree + 1."""
    return tuple(g.degree(v) + 1 for v in range(g.n))


def complement(g: Graph) -> Graph:
    """Edge u~v in the output iff u != v and u~v not in g; involutive."""
    full = (1 << g.n) - 1
    adj = []
    for v in range(g.n):
        adj.append(_mask_to_list(full & ~g.neighbor_mask(v) & ~(1 << v)))
    return Graph(g.n, adj)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by the given vertex set, plus the old->new id map.

    The new graph relabels the (deduplicated, sorted) vertex set to 0..k-1.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range [0, {g.n})")
    remap = {old: new for new, old in enumerate(keep)}
    adj = [[remap[u] for u in g.neighbors(old) if u in remap] for old in keep]
    return Graph(len(keep), adj), remap


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex partition into connected components.

    Components are sorted by their smallest vertex; each is a sorted tuple.
    """
    seen = 0
    components = []
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        mask = 1 << start
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if not (mask >> y) & 1:
                    mask |= 1 << y
                    stack.append(y)
        seen |= mask
        components.append(_mask_to_tuple(mask))
    return components


def is_independent_set(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff no edge of g joins two members of the set."""
    mask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range [0, {g.n})")
        mask |= 1 << v
    v_mask = mask
    while v_mask:
        low = v_mask & -v_mask
        v = low.bit_length() - 1
        if g.neighbor_mask(v) & mask:
            return False
        v_mask ^= low
    return True


# -- small helpers shared across modules ------------------------------------

def _mask_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(_mask_to_list(mask))


def cycle_graph(k: int) -> Graph:
    """C_k for k >= 3; handy for corpora and demos."""
    if k < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    """P_k on vertices 0..k-1 in path order."""
    return from_edge_list(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> Graph:
    return from_edge_list(k, list(combinations(range(k), 2)))


def complete_sun(k: int) -> Graph:
    """Complete k-sun: a clique 0..k-1, plus outer vertex k+i seeing i, i+1.

    The complete 4-sun is the standard witness that squaring a chordal
    graph can create an induced C4.
    """
    edges = list(combinations(range(k), 2))
    for i in range(k):
        edges.append((i, k + i))
        edges.append(((i + 1) % k, k + i))
    return from_edge_list(2 * k, edges)
