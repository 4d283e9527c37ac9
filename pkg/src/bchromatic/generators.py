"""Instance families: classic graphs, seeded random models, and the two
extremal constructions for vertex deletion (apex over a chordal graph, and
the path of cliques).

Every random generator is a pure function of its parameters and seed; the
stream comes from :class:`bchromatic.rng.SplitMix64`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import Graph, GraphError, iter_bits
from .rng import SplitMix64

FAMILIES = (
    "gnp", "chordal-ktree", "line-graph", "high-girth", "G0", "G1",
    "cycle", "path", "complete", "star", "petersen",
)

# 2**C(n,2) labelled graphs; n <= 6 stays within this many.
LABELED_LIMIT = 32768


def complete_graph(n: int) -> Graph:
    return Graph.complete(n)


def empty_graph(n: int) -> Graph:
    return Graph.empty(n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """Star with centre 0 and leaves ``1..leaves``."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); pairs are drawn in lexicographic order."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = SplitMix64(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def gen_random_chordal(n: int, width: int, seed: int) -> Graph:
    """Random ``width``-tree on ``n`` vertices.

    Starts from a clique on ``0..width`` and attaches each further vertex to
    a uniformly chosen ``width``-clique among those created so far.
    """
    if not 1 <= width < n:
        raise ValueError(f"need 1 <= width < n, got width={width}, n={n}")
    rng = SplitMix64(seed)
    base = list(range(width + 1))
    edges = list(combinations(base, 2))
    faces = [tuple(c) for c in combinations(base, width)]
    for v in range(width + 1, n):
        face = faces[rng.below(len(faces))]
        edges.extend((u, v) for u in face)
        for drop in range(width):
            faces.append(tuple(sorted(face[:drop] + face[drop + 1:] + (v,))))
    return Graph.from_edges(n, edges)


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` in lexicographic order."""
    edges = g.edges()
    if not edges:
        raise GraphError("line graph of an edgeless graph is empty")
    index_edges = []
    for a, (u, v) in enumerate(edges):
        for b in range(a + 1, len(edges)):
            s, t = edges[b]
            if u in (s, t) or v in (s, t):
                index_edges.append((a, b))
    return Graph.from_edges(len(edges), index_edges)


def gen_high_girth(n: int, g_min: int, seed: int) -> Graph:
    """Saturated random graph with girth at least ``g_min`` (or a forest).

    All pairs are shuffled once; a pair is added only if its endpoints are
    currently at distance ``>= g_min - 1``, so no shorter cycle is closed.
    One pass leaves the graph maximal for the girth constraint.
    """
    if g_min not in (5, 6, 7):
        raise ValueError(f"g_min must be 5, 6 or 7, got {g_min}")
    rng = SplitMix64(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    adj = [0] * n
    depth = g_min - 2
    for u, v in pairs:
        seen = frontier = 1 << u
        close = False
        for _ in range(depth):
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= adj[w]
            nxt &= ~seen
            if nxt >> v & 1:
                close = True
                break
            seen |= nxt
            frontier = nxt
            if not frontier:
                break
        if not close:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, adj)


def gen_G0(h: Graph) -> tuple[Graph, int]:
    """Add a universal vertex to the chordal graph ``h``; returns (graph, apex)."""
    from .recognizers import is_chordal

    if not is_chordal(h):
        raise GraphError("the base graph must be chordal")
    apex = h.n
    edges = h.edges() + [(v, apex) for v in range(h.n)]
    return Graph.from_edges(h.n + 1, edges), apex


def gen_G1(omega: int) -> tuple[Graph, list[int]]:
    """Path ``x_0 .. x_{p+1}`` (p = 2*omega - 1) with every edge blown up
    into a clique of order ``omega``.

    Path vertices are ``0..p+1``; the ``omega - 2`` private vertices of each
    clique follow, clique by clique.  Returns the graph and the path vertices.
    """
    if omega < 3:
        raise ValueError(f"omega must be at least 3, got {omega}")
    p = 2 * omega - 1
    junctions = list(range(p + 2))
    edges = []
    nxt = p + 2
    for i in range(p + 1):
        members = [i, i + 1] + list(range(nxt, nxt + omega - 2))
        nxt += omega - 2
        edges.extend(combinations(members, 2))
    return Graph.from_edges(nxt, edges), junctions


def enumerate_labeled(n: int, *, limit: int = LABELED_LIMIT) -> Iterator[Graph]:
    """All labelled graphs on ``n`` vertices.

    The edge bitmask is the graph6 body bit string (pairs (0,1), (0,2),
    (1,2), (0,3), ...) read as a big-endian binary number; graphs come out in
    increasing bitmask order.  ``limit`` caps ``2**C(n, 2)``.
    """
    if n < 0:
        raise ValueError("negative vertex count")
    total = 1 << (n * (n - 1) // 2)
    if total > limit:
        raise ValueError(f"{total} labelled graphs on {n} vertices exceeds limit {limit}")
    if n <= 1:
        yield Graph._trusted(n, (0,) * n)
        return
    yield from _extend_columns(n, 1, [0] * n)


def _extend_columns(n: int, j: int, adj: list[int]) -> Iterator[Graph]:
    bit = 1 << j
    if j == n - 1:
        head = tuple(adj[:j])
        for col in range(1 << j):
            yield Graph._trusted(
                n,
                tuple(m | bit if col >> (j - 1 - i) & 1 else m for i, m in enumerate(head)) + (_reverse_col(col, j),),
            )
        return
    for col in range(1 << j):
        nxt = list(adj)
        lower = _reverse_col(col, j)
        nxt[j] = lower
        for i in iter_bits(lower):
            nxt[i] |= bit
        yield from _extend_columns(n, j + 1, nxt)


def _reverse_col(col: int, j: int) -> int:
    # Column value bit (j-1-i) marks the pair (i, j): graph6 order is
    # most-significant first within the big-endian mask.
    out = 0
    for i in range(j):
        if col >> (j - 1 - i) & 1:
            out |= 1 << i
    return out


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: tuple = ()
    seed: int = 0

    def build(self) -> Graph:
        return generate(self.family, self.params, self.seed)


def generate(family: str, params: tuple | list = (), seed: int = 0) -> Graph:
    """Dispatch a family name plus positional parameters to a generator."""
    p = list(params)
    if family == "complete":
        return complete_graph(int(p[0]))
    if family == "cycle":
        return cycle_graph(int(p[0]))
    if family == "path":
        return path_graph(int(p[0]))
    if family == "star":
        return star_graph(int(p[0]))
    if family == "petersen":
        return petersen_graph()
    if family == "gnp":
        return gen_gnp(int(p[0]), float(p[1]), seed)
    if family == "chordal-ktree":
        return gen_random_chordal(int(p[0]), int(p[1]), seed)
    if family == "high-girth":
        return gen_high_girth(int(p[0]), int(p[1]), seed)
    if family == "line-graph":
        # line graph of G(n, p)
        return line_graph(gen_gnp(int(p[0]), float(p[1]), seed))
    if family == "G0":
        # apex over a random chordal graph (n, width)
        return gen_G0(gen_random_chordal(int(p[0]), int(p[1]), seed))[0]
    if family == "G1":
        return gen_G1(int(p[0]))[0]
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
