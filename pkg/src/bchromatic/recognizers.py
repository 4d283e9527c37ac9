"""Graph class recognition: chordal, quasi-line, claw-free; clique number.

Positive answers come with certificates (elimination ordering, per-vertex
two-clique covers) and negative ones with witnesses (chordless cycle,
uncoverable vertex, claw).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .graph import Graph, component_mask, girth, iter_bits


class PreconditionError(ValueError):
    def __init__(self, message: str, condition: str):
        super().__init__(message)
        self.condition = condition


# -- chordality ---------------------------------------------------------


def mcs_order(g: Graph) -> list[int]:
    """Maximum-cardinality search visit order, smallest id on ties."""
    adj = g.adjacency
    weight = [0] * g.n
    unvisited = (1 << g.n) - 1
    order = []
    for _ in range(g.n):
        best = -1
        pick = -1
        for v in iter_bits(unvisited):
            if weight[v] > best:
                best, pick = weight[v], v
        order.append(pick)
        unvisited &= ~(1 << pick)
        for w in iter_bits(adj[pick] & unvisited):
            weight[w] += 1
    return order


def _is_peo(adj: Sequence[int], order: Sequence[int]) -> bool:
    later = 0
    for v in order:
        later |= 1 << v
    for v in order:
        later &= ~(1 << v)
        nb = adj[v] & later
        for u in iter_bits(nb):
            if (nb & ~(1 << u)) & ~adj[u]:
                return False
    return True


def perfect_elimination_ordering(g: Graph) -> list[int] | None:
    """An ordering whose every vertex has a clique of later neighbours, or
    ``None`` when ``g`` is not chordal.  Built by reversing an MCS order."""
    order = mcs_order(g)[::-1]
    return order if _is_peo(g.adjacency, order) else None


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


def chordless_cycle(g: Graph) -> list[int] | None:
    """A chordless cycle of length at least 4, or ``None`` if chordal.

    For each vertex ``v`` and non-adjacent neighbours ``a, b`` a shortest
    ``a``-``b`` path avoiding the rest of ``N[v]`` closes an induced cycle.
    """
    adj = g.adjacency
    full = (1 << g.n) - 1
    for v in range(g.n):
        closed = adj[v] | (1 << v)
        for a, b in combinations(list(iter_bits(adj[v])), 2):
            if adj[a] >> b & 1:
                continue
            allowed = full & ~closed | (1 << a) | (1 << b)
            path = _shortest_path(adj, a, b, allowed)
            if path is not None:
                return [v] + path
    return None


def _shortest_path(adj: Sequence[int], s: int, t: int, allowed: int) -> list[int] | None:
    parent = {s: s}
    frontier = [s]
    while frontier:
        nxt = []
        for u in frontier:
            for w in iter_bits(adj[u] & allowed):
                if w not in parent:
                    parent[w] = u
                    if w == t:
                        path = [t]
                        while path[-1] != s:
                            path.append(parent[path[-1]])
                        return path[::-1]
                    nxt.append(w)
        frontier = nxt
    return None


# -- cliques ------------------------------------------------------------


def max_clique(g: Graph) -> int:
    """Bitmask of a maximum clique (branch and bound with greedy-coloring
    bounds; intended for desk-scale graphs)."""
    adj = g.adjacency
    best = [0, 0]

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # greedy sequential coloring; returns (vertex, color count so far)
        out = []
        rest = cand
        color = 0
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~adj[v] & ~(1 << v)
                rest &= ~(1 << v)
                out.append((v, color))
        return out

    def expand(clique: int, size: int, cand: int) -> None:
        for v, bound in reversed(color_bound(cand)):
            if size + bound <= best[1]:
                return
            nc = clique | (1 << v)
            sub = cand & adj[v]
            if sub:
                expand(nc, size + 1, sub)
            elif size + 1 > best[1]:
                best[0], best[1] = nc, size + 1
            cand &= ~(1 << v)

    if g.n:
        expand(0, 0, (1 << g.n) - 1)
    return best[0]


def clique_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    order = perfect_elimination_ordering(g)
    if order is None:
        return max_clique(g).bit_count()
    adj = g.adjacency
    later = (1 << g.n) - 1
    best = 1
    for v in order:
        later &= ~(1 << v)
        best = max(best, 1 + (adj[v] & later).bit_count())
    return best


# -- quasi-line and claw-free ------------------------------------------


def two_clique_cover(g: Graph, v: int) -> tuple[frozenset[int], frozenset[int]] | None:
    """Split ``N(v)`` into at most two cliques, or return ``None``.

    The complement of the neighbourhood must be bipartite.  Components of
    that complement are taken lowest vertex first; the lowest vertex of each
    component goes to the first clique.
    """
    g.check_vertex(v)
    adj = g.adjacency
    nb = adj[v]
    side: dict[int, int] = {}
    for root in iter_bits(nb):
        if root in side:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in iter_bits(nb & ~adj[u] & ~(1 << u)):
                if w not in side:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    first = frozenset(u for u, s in side.items() if s == 0)
    second = frozenset(u for u, s in side.items() if s == 1)
    return first, second


def quasi_line_covers(g: Graph) -> dict[int, tuple[frozenset[int], frozenset[int]]] | None:
    covers = {}
    for v in range(g.n):
        cover = two_clique_cover(g, v)
        if cover is None:
            return None
        covers[v] = cover
    return covers


def is_quasi_line(g: Graph) -> bool:
    return all(two_clique_cover(g, v) is not None for v in range(g.n))


def find_claw(g: Graph) -> tuple[int, tuple[int, int, int]] | None:
    """A centre and three pairwise non-adjacent neighbours, if any."""
    adj = g.adjacency
    for c in range(g.n):
        nbrs = list(iter_bits(adj[c]))
        for a, b, d in combinations(nbrs, 3):
            if not (adj[a] >> b & 1 or adj[a] >> d & 1 or adj[b] >> d & 1):
                return c, (a, b, d)
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


# -- the adjacency lemma for chordal graphs ------------------------------


def _validate_cycle(g: Graph, cycle: Sequence[int]) -> None:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise PreconditionError("cycle must list at least 3 distinct vertices", "cycle")
    for v in cycle:
        g.check_vertex(v)
    for i, v in enumerate(cycle):
        if not g.has_edge(v, cycle[(i + 1) % len(cycle)]):
            raise PreconditionError(f"{v} and {cycle[(i + 1) % len(cycle)]} are not adjacent", "cycle")


def check_chordal_triple(g: Graph, cycle: Sequence[int], a: int, x: int, b: int) -> bool:
    """Whether ``a`` and ``b`` are adjacent, after checking that ``g`` is
    chordal, ``a, x, b`` are consecutive on ``cycle`` and ``x`` has no other
    neighbour on it.  On chordal graphs the answer is always ``True``."""
    if not is_chordal(g):
        raise PreconditionError("graph is not chordal", "chordal")
    _validate_cycle(g, cycle)
    L = len(cycle)
    if x not in cycle:
        raise PreconditionError(f"{x} is not on the cycle", "consecutive")
    pos = list(cycle).index(x)
    if {cycle[(pos - 1) % L], cycle[(pos + 1) % L]} != {a, b} or a == b:
        raise PreconditionError(f"{a}, {x}, {b} are not consecutive on the cycle", "consecutive")
    for w in cycle:
        if w not in (a, b, x) and g.has_edge(x, w):
            raise PreconditionError(f"{x} has the further cycle neighbour {w}", "isolated-middle")
    return g.has_edge(a, b)


def enumerate_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every cycle once, starting at its smallest vertex, with the second
    vertex smaller than the last."""
    adj = g.adjacency
    for start in range(g.n):
        allowed = ((1 << g.n) - 1) & ~((1 << start) - 1)
        path = [start]
        on_path = 1 << start

        def dfs(u: int) -> Iterator[tuple[int, ...]]:
            nonlocal on_path
            for w in iter_bits(adj[u] & allowed):
                if w == start and len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                elif not on_path >> w & 1:
                    path.append(w)
                    on_path |= 1 << w
                    yield from dfs(w)
                    on_path &= ~(1 << w)
                    path.pop()

        yield from dfs(start)


def qualifying_triples(g: Graph) -> Iterator[tuple[int, int, int, bool]]:
    """All ``(a, x, b, adjacent)`` with ``a < b`` such that some cycle
    passes ``a, x, b`` consecutively and meets ``N(x)`` only in ``a, b``.

    Such a cycle exists iff ``a ~ b`` (a triangle) or ``a`` reaches ``b``
    outside ``N[x] - {a, b}``; no cycle enumeration is needed.
    """
    adj = g.adjacency
    full = (1 << g.n) - 1
    for x in range(g.n):
        closed = adj[x] | (1 << x)
        for a, b in combinations(list(iter_bits(adj[x])), 2):
            if adj[a] >> b & 1:
                yield a, x, b, True
            else:
                allowed = full & ~closed | (1 << a) | (1 << b)
                if component_mask(g, a, allowed) >> b & 1:
                    yield a, x, b, False


# -- report -------------------------------------------------------------


@dataclass
class ClassReport:
    chordal: bool
    elimination_ordering: list[int] | None
    chordless_cycle: list[int] | None
    quasi_line: bool
    clique_covers: dict[int, tuple[list[int], list[int]]] | None
    uncoverable_vertex: int | None
    claw_free: bool
    claw: tuple[int, tuple[int, int, int]] | None
    girth: int | None
    clique_number: int
    max_clique: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "chordal": self.chordal,
            "elimination_ordering": self.elimination_ordering,
            "chordless_cycle": self.chordless_cycle,
            "quasi_line": self.quasi_line,
            "clique_covers": (
                {str(v): [a, b] for v, (a, b) in self.clique_covers.items()}
                if self.clique_covers is not None else None
            ),
            "uncoverable_vertex": self.uncoverable_vertex,
            "claw_free": self.claw_free,
            "claw": {"center": self.claw[0], "leaves": list(self.claw[1])} if self.claw else None,
            "girth": self.girth,
            "clique_number": self.clique_number,
            "max_clique": self.max_clique,
        }


def classify(g: Graph) -> ClassReport:
    peo = perfect_elimination_ordering(g)
    covers: dict[int, tuple[list[int], list[int]]] | None = {}
    uncoverable = None
    for v in range(g.n):
        cover = two_clique_cover(g, v)
        if cover is None:
            covers, uncoverable = None, v
            break
        covers[v] = (sorted(cover[0]), sorted(cover[1]))
    claw = find_claw(g)
    clique = max_clique(g)
    return ClassReport(
        chordal=peo is not None,
        elimination_ordering=peo,
        chordless_cycle=None if peo is not None else chordless_cycle(g),
        quasi_line=covers is not None,
        clique_covers=covers,
        uncoverable_vertex=uncoverable,
        claw_free=claw is None,
        claw=claw,
        girth=girth(g),
        clique_number=clique.bit_count(),
        max_clique=list(iter_bits(clique)),
    )
