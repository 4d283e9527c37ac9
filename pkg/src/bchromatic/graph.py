"""Immutable simple undirected graphs on dense integer vertices.

Adjacency is stored as one integer bitmask per vertex, so neighbourhood
intersections in the solver are single ``&`` operations.  Vertices are the
integers ``0..n-1``.  Unreachable distances and the girth of a forest are
reported as ``None``.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph construction or out-of-range vertex."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph with bitmask adjacency.

    Instances are immutable and hashable; two graphs compare equal when they
    have the same vertex count and the same labelled edge set.
    """

    __slots__ = ("n", "_adj", "_hash")

    def __init__(self, n: int, adjacency: Iterable[int] = ()):
        adj = tuple(adjacency)
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        if not adj:
            adj = (0,) * n
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for v, mask in enumerate(adj):
            if mask & ~full or mask < 0:
                raise GraphError(f"vertex {v} has neighbours outside 0..{n - 1}")
            if mask >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(mask):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self._adj = adj
        self._hash = hash((n, adj))

    @classmethod
    def _trusted(cls, n: int, adjacency: tuple[int, ...]) -> "Graph":
        # Internal constructor for masks already known to be valid.
        g = cls.__new__(cls)
        g.n = n
        g._adj = adjacency
        g._hash = hash((n, adjacency))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)])

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    # -- basic queries ---------------------------------------------------

    @property
    def adjacency(self) -> tuple[int, ...]:
        """Per-vertex neighbour bitmasks."""
        return self._adj

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"vertex {v!r} out of range for n={self.n}")

    def mask(self, v: int) -> int:
        self.check_vertex(v)
        return self._adj[v]

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.mask(v)))

    def degree(self, v: int) -> int:
        return self.mask(v).bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.mask(u) >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self._adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def is_clique(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if (mask & ~(1 << v)) & ~self._adj[v]:
                return False
        return True

    def is_independent(self, mask: int) -> bool:
        return all(not (self._adj[v] & mask) for v in iter_bits(mask))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def neighbors(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("maximum degree of the empty graph is undefined")
    return max(g.degrees())


def _bfs_layers(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        for w in iter_bits(adj[u]):
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> int | None:
    """Length of a shortest ``u``-``v`` path, or ``None`` if unreachable."""
    g.check_vertex(u)
    g.check_vertex(v)
    return _bfs_layers(g, u)[v]


def second_neighborhood(g: Graph, v: int) -> frozenset[int]:
    g.check_vertex(v)
    adj = g.adjacency
    first = adj[v]
    reach = 0
    for u in iter_bits(first):
        reach |= adj[u]
    return frozenset(iter_bits(reach & ~first & ~(1 << v)))


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for a forest.

    Runs a BFS from every root; a non-tree edge between layers ``d(a)`` and
    ``d(b)`` closes a closed walk of length ``d(a) + d(b) + 1`` and the
    minimum over all roots is exactly the girth.
    """
    best: int | None = None
    adj = g.adjacency
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in iter_bits(adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def delete_vertex(g: Graph, x: int) -> tuple[Graph, dict[int, int]]:
    """Return ``G - x`` and the old-to-new vertex map.

    Vertices above ``x`` shift down by one.
    """
    g.check_vertex(x)
    if g.n < 2:
        raise GraphError("cannot delete the only vertex of a graph")
    keep = [v for v in range(g.n) if v != x]
    return induced_subgraph(g, keep)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``vertices`` with order-preserving relabelling."""
    chosen = sorted(set(vertices))
    for v in chosen:
        g.check_vertex(v)
    mapping = {old: new for new, old in enumerate(chosen)}
    adj = g.adjacency
    masks = []
    for old in chosen:
        m = 0
        for w in iter_bits(adj[old]):
            new = mapping.get(w)
            if new is not None:
                m |= 1 << new
        masks.append(m)
    return Graph._trusted(len(chosen), tuple(masks)), mapping


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    return component_mask(g, 0) == (1 << g.n) - 1


def component_mask(g: Graph, v: int, allowed: int | None = None) -> int:
    """Bitmask of the vertices reachable from ``v`` inside ``allowed``."""
    adj = g.adjacency
    if allowed is None:
        allowed = (1 << g.n) - 1
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen
