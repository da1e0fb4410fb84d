"""Immutable simple graphs on dense integer ids with bitset adjacency rows.

Every other module consumes this one.  A row is a Python int used as a
bitmask over 0..n-1, which gives O(n/word) adjacency tests and set algebra.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import ConstructionError, DisconnectedError, MissingEdgeError

VERTEX_CAP = 65535


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex ids into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph, immutable after construction.

    Vertices are 0..n-1; ``row(v)`` is the neighborhood of v as a bitmask.
    No loops, no parallel edges; rows are always symmetric.
    """

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, rows: Sequence[int]):
        self.n = n
        self._rows = tuple(rows)

    def row(self, v: int) -> int:
        return self._rows[v]

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self._rows[v])

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            high = self._rows[u] >> (u + 1) << (u + 1)
            for v in bits(high):
                yield u, v

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, deduplicating symmetric pairs."""
    if n < 0 or n > VERTEX_CAP:
        raise ConstructionError(f"vertex count {n} outside 0..{VERTEX_CAP}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ConstructionError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ConstructionError(f"edge ({u},{v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def bfs_levels(g: Graph, src: int) -> list[int]:
    """BFS distance from ``src`` to every vertex; -1 for unreachable."""
    dist = [-1] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        d = dist[u] + 1
        for v in g.neighbors(u):
            if dist[v] < 0:
                dist[v] = d
                queue.append(v)
    return dist


def distance(g: Graph, u: int, v: int) -> int | None:
    """Shortest-path distance, or None when u and v are in different components."""
    d = bfs_levels(g, u)[v]
    return None if d < 0 else d


def diameter(g: Graph) -> int:
    """Maximum pairwise distance of a connected graph."""
    if g.n == 0:
        raise DisconnectedError("diameter of the empty graph is undefined")
    best = 0
    for u in range(g.n):
        dist = bfs_levels(g, u)
        far = max(dist)
        if min(dist) < 0:
            raise DisconnectedError("graph is disconnected")
        best = max(best, far)
    return best


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for forests.

    BFS from every vertex; a non-tree edge seen at levels (d1, d2) closes a
    cycle of length d1 + d2 + 1, and the minimum over all roots is exact.
    """
    best: int | None = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for v in g.neighbors(u):
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    cyc = dist[u] + dist[v] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


def is_c3c4_free(g: Graph) -> bool:
    """True iff the graph has no 3-cycle and no 4-cycle.

    Equivalent characterization: every neighborhood is independent and any
    two distinct vertices share at most one neighbor.
    """
    rows = g._rows
    for u in range(g.n):
        ru = rows[u]
        for v in bits(ru):
            if v > u and ru & rows[v]:
                return False
    for u in range(g.n):
        ru = rows[u]
        for v in range(u + 1, g.n):
            if (ru & rows[v]).bit_count() >= 2:
                return False
    return True


class GraphStats(NamedTuple):
    min_degree: int
    max_degree: int
    connected: bool
    bipartite: bool


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return min(bfs_levels(g, 0)) >= 0


def is_bipartite(g: Graph) -> bool:
    """2-colorability via BFS; vacuously true for the empty graph."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if color[v] < 0:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def stats(g: Graph) -> GraphStats:
    degs = [g.degree(v) for v in range(g.n)]
    return GraphStats(
        min_degree=min(degs, default=0),
        max_degree=max(degs, default=0),
        connected=is_connected(g),
        bipartite=is_bipartite(g),
    )


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabeled 0..k-1 in ascending id order."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    mask = mask_of(keep)
    rows = []
    for v in keep:
        r = 0
        for u in bits(g.row(v) & mask):
            r |= 1 << index[u]
        rows.append(r)
    return Graph(len(keep), rows)


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Merge the endpoints of ``e``; parallels collapse, the loop is dropped."""
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise MissingEdgeError(f"({u},{v}) is not an edge")
    lo, hi = min(u, v), max(u, v)
    old = [w for w in range(g.n) if w != hi]
    index = {w: i for i, w in enumerate(old)}
    rows = [0] * (g.n - 1)
    for w in old:
        merged = g.row(w) | (g.row(hi) if w == lo else 0)
        r = 0
        for x in bits(merged):
            x = lo if x == hi else x
            if x != w:
                r |= 1 << index[x]
        rows[index[w]] = r
    return Graph(g.n - 1, rows)


def components(g: Graph) -> list[list[int]]:
    """Connected components as ascending vertex lists, ordered by minimum id."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        queue = deque([s])
        seen[s] = True
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        out.append(sorted(comp))
    return out
