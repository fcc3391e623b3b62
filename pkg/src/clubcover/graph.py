"""Undirected simple graphs on dense integer vertices.

This module is the substrate for everything else: BFS distances, diameter,
distance balls, induced subgraphs, and the s-club test (does a vertex set
induce a subgraph of diameter at most s?).  Graphs are immutable after
construction and all operations are pure functions, so they are safe to
share across threads.

Internally adjacency is kept both as frozensets (for iteration) and as
integer bitmasks (for the set-spreading tricks the exact solvers rely on).
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable

VertexSet = frozenset[int]

#: Distance sentinel for unreachable pairs (and disconnected diameters).
INF = math.inf


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    Rejects self-loops and out-of-range endpoints; duplicate edges collapse
    (edges form a set of unordered pairs).
    """

    __slots__ = ("n", "edges", "_adj", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        canon: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            canon.add((u, v) if u < v else (v, u))
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges: frozenset[tuple[int, int]] = frozenset(canon)
        self._adj = tuple(frozenset(s) for s in adj)
        masks = []
        for u in range(n):
            m = 0
            for v in adj[u]:
                m |= 1 << v
            masks.append(m)
        self._masks = tuple(masks)

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks (bit v of mask u set iff u~v)."""
        return self._masks

    def closed_neighborhood_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._masks[v] | (1 << v)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def _bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _spread_within(masks: tuple[int, ...], start: int, allowed: int, rounds: int) -> int:
    """Vertices reachable from ``start`` (a bitmask) in at most ``rounds``
    hops, never leaving the ``allowed`` vertex set."""
    reach = start & allowed
    frontier = reach
    for _ in range(rounds):
        nxt = 0
        for u in _bits(frontier):
            nxt |= masks[u]
        nxt &= allowed & ~reach
        if not nxt:
            break
        reach |= nxt
        frontier = nxt
    return reach


def bfs_distances(g: Graph, v: int) -> list[int | float]:
    """Shortest-path distances from ``v`` to every vertex; INF if unreachable."""
    g._check_vertex(v)
    dist: list[int | float] = [INF] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g._adj[u]:
            if dist[w] == INF:
                dist[w] = du + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> list[list[int | float]]:
    """Convenience wrapper: one BFS per vertex."""
    return [bfs_distances(g, v) for v in range(g.n)]


def eccentricity(g: Graph, v: int) -> int | float:
    return max(bfs_distances(g, v), default=0)


def diameter(g: Graph) -> int | float:
    """Largest distance between any two vertices.

    The empty graph has diameter 0 by convention; a disconnected graph has
    diameter INF (the sentinel, never a numeric stand-in).
    """
    if g.n == 0:
        return 0
    worst: int | float = 0
    for v in range(g.n):
        ecc = eccentricity(g, v)
        if ecc == INF:
            return INF
        if ecc > worst:
            worst = ecc
    return worst


def ball(g: Graph, v: int, radius: int) -> VertexSet:
    """All vertices within distance ``radius`` of ``v`` (the closed ball).

    ``ball(g, v, 0) == {v}`` and ``ball(g, v, 1)`` is the closed
    neighborhood N[v].
    """
    g._check_vertex(v)
    if radius < 0:
        raise ValueError("radius must be non-negative")
    full = (1 << g.n) - 1
    reach = _spread_within(g._masks, 1 << v, full, radius)
    return frozenset(_bits(reach))


def induced_subgraph(g: Graph, members: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``members`` plus the old->new relabeling map.

    Vertices are relabeled to ``0..len(members)-1`` in ascending order of
    their original index.
    """
    order = sorted(set(members))
    for v in order:
        g._check_vertex(v)
    relabel = {v: i for i, v in enumerate(order)}
    keep = set(order)
    edges = [
        (relabel[u], relabel[v])
        for u, v in g.edges
        if u in keep and v in keep
    ]
    return Graph(len(order), edges), relabel


def _mask_of(members: Iterable[int], n: int) -> int:
    mask = 0
    for v in members:
        if not (0 <= v < n):
            raise ValueError(f"vertex {v} out of range for n={n}")
        mask |= 1 << v
    return mask


def is_s_club(g: Graph, members: Iterable[int], club_s: int) -> bool:
    """True iff the nonempty set ``members`` induces a subgraph of diameter
    at most ``club_s``.

    A disconnected induced subgraph is never an s-club.  The empty set is
    rejected: covers are built from nonempty clubs.
    """
    if club_s < 1:
        raise ValueError("club_s must be at least 1")
    mask = _mask_of(members, g.n)
    if mask == 0:
        raise ValueError("the empty set is not an s-club candidate")
    return _mask_is_club(g._masks, mask, club_s)


def _mask_is_club(masks: tuple[int, ...], mask: int, club_s: int) -> bool:
    for u in _bits(mask):
        if _spread_within(masks, 1 << u, mask, club_s) != mask:
            return False
    return True


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, each sorted, ordered by
    smallest member."""
    seen = 0
    out: list[list[int]] = []
    full = (1 << g.n) - 1
    for v in range(g.n):
        if seen & (1 << v):
            continue
        reach = _spread_within(g._masks, 1 << v, full, g.n)
        seen |= reach
        out.append(list(_bits(reach)))
    return out
