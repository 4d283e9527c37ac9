"""Exact chromatic number, m-degree and b-chromatic number.

``b_chromatic`` walks ``k`` down from the m-degree and stops at the first
level admitting a b-coloring.  A level is decided by ``find_b_coloring``:
pick one dominating vertex per color (candidate sets are enumerated
lexicographically among vertices of degree at least ``k - 1``, the ``j``-th
candidate receiving color ``j``), then complete the coloring by
backtracking with forward checking on the domination requirements.

``brute_force_b_chromatic`` is an independent oracle: it enumerates every
proper coloring up to renaming and keeps the largest b-coloring.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .coloring import Coloring, is_b_coloring
from .graph import Graph, GraphError, iter_bits
from .recognizers import max_clique

BRUTE_FORCE_LIMIT = 9


@dataclass(frozen=True)
class BResult:
    b: int
    witness: Coloring
    bounds_used: tuple[int, int]  # (chromatic number, m-degree)

    def to_dict(self) -> dict:
        return {"b": self.b, "witness": self.witness.to_json(), "chi": self.bounds_used[0], "m": self.bounds_used[1]}


def m_degree(g: Graph) -> int:
    """Largest ``m`` such that ``m`` vertices have degree at least ``m - 1``."""
    if g.n == 0:
        raise GraphError("m-degree of the empty graph is undefined")
    return m_degree_of_sequence(g.degrees())


def m_degree_of_sequence(degrees: list[int]) -> int:
    m = 0
    for rank, d in enumerate(sorted(degrees, reverse=True), start=1):
        if d < rank - 1:
            break
        m = rank
    return m


# -- chromatic number ---------------------------------------------------


def _dsatur(adj: tuple[int, ...], n: int) -> list[int]:
    colors = [-1] * n
    seen = [0] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (seen[u].bit_count(), adj[u].bit_count(), -u),
        )
        free = ~seen[v]
        c = (free & -free).bit_length() - 1
        colors[v] = c
        for w in iter_bits(adj[v]):
            seen[w] |= 1 << c
    return colors


def _k_coloring(adj: tuple[int, ...], n: int, k: int, clique: int) -> list[int] | None:
    colors = [-1] * n
    seen = [0] * n
    used = 0
    for c, v in enumerate(iter_bits(clique)):
        colors[v] = c
        used = c + 1
        for w in iter_bits(adj[v]):
            seen[w] |= 1 << c
    full = (1 << k) - 1

    def rec(remaining: int, used: int) -> bool:
        if not remaining:
            return True
        v = max(iter_bits(remaining), key=lambda u: ((seen[u] & full).bit_count(), (adj[u] & remaining).bit_count(), -u))
        avail = full & ~seen[v]
        # a fresh color is interchangeable with any other unused one
        if used < k:
            avail &= (1 << (used + 1)) - 1
        for c in iter_bits(avail):
            saved = [seen[w] for w in iter_bits(adj[v])]
            colors[v] = c
            for w in iter_bits(adj[v]):
                seen[w] |= 1 << c
            if rec(remaining & ~(1 << v), max(used, c + 1)):
                return True
            for w, s in zip(iter_bits(adj[v]), saved):
                seen[w] = s
            colors[v] = -1
        return False

    remaining = ((1 << n) - 1) & ~clique
    return colors if rec(remaining, used) else None


def optimal_coloring(g: Graph) -> Coloring:
    """A proper coloring with the minimum number of colors."""
    n = g.n
    if n == 0:
        raise GraphError("chromatic number of the empty graph is undefined")
    adj = g.adjacency
    best = _dsatur(adj, n)
    upper = max(best) + 1
    clique = max_clique(g)
    for k in range(clique.bit_count(), upper):
        found = _k_coloring(adj, n, k, clique)
        if found is not None:
            return Coloring(tuple(found))
    return Coloring(tuple(best))


def chromatic_number(g: Graph) -> int:
    return optimal_coloring(g).k


# -- b-colorings --------------------------------------------------------


def find_b_coloring(g: Graph, k: int) -> Coloring | None:
    """A b-coloring of ``g`` with exactly ``k`` colors, or ``None``."""
    n = g.n
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    adj = g.adjacency
    if k == 1:
        return Coloring((0,) * n) if not any(adj) else None
    degs = g.degrees()
    cands = [v for v in range(n) if degs[v] >= k - 1]
    if len(cands) < k:
        return None
    everyone = (1 << n) - 1
    for subset in combinations(cands, k):
        found = _complete(adj, n, k, subset, everyone)
        if found is not None:
            coloring = Coloring(tuple(found))
            if not is_b_coloring(g, coloring):
                raise AssertionError(f"search produced a non b-coloring {found}")
            return coloring
    return None


def _complete(adj: tuple[int, ...], n: int, k: int, subset: tuple[int, ...], everyone: int) -> list[int] | None:
    full = (1 << k) - 1
    colors = [-1] * n
    dom = [full] * n
    present = [0] * n
    uncolored = everyone
    for c, v in enumerate(subset):
        bit = 1 << c
        if not dom[v] & bit:
            return None
        colors[v] = c
        uncolored &= ~(1 << v)
        for w in iter_bits(adj[v]):
            dom[w] &= ~bit
            present[w] |= bit
    for v in iter_bits(uncolored):
        if not dom[v]:
            return None
    targets = [(v, full & ~(1 << c)) for c, v in enumerate(subset)]
    if _search(adj, colors, dom, present, uncolored, targets):
        return colors
    return None


def _search(
    adj: tuple[int, ...],
    colors: list[int],
    dom: list[int],
    present: list[int],
    uncolored: int,
    targets: list[tuple[int, int]],
) -> bool:
    # targets: (candidate, colors its neighbourhood must show)
    focus = 0
    needs = []
    for v, want in targets:
        need = want & ~present[v]
        if need:
            free = adj[v] & uncolored
            if need.bit_count() > free.bit_count():
                return False
            avail = 0
            for u in iter_bits(free):
                avail |= dom[u]
            if need & ~avail:
                return False
            focus |= free
            needs.append((v, need))
    if not uncolored:
        return True
    pool = focus or uncolored
    pick = -1
    pick_key = None
    for u in iter_bits(pool):
        d = dom[u].bit_count()
        key = (d, -(adj[u] & focus).bit_count())
        if pick_key is None or key < pick_key:
            pick, pick_key = u, key
    v = pick
    wanted = 0
    for w, need in needs:
        if adj[v] >> w & 1:
            wanted |= need
    order = list(iter_bits(dom[v] & wanted)) + list(iter_bits(dom[v] & ~wanted))
    nbrs = list(iter_bits(adj[v]))
    rest = uncolored & ~(1 << v)
    for c in order:
        bit = 1 << c
        new_dom = dom[:]
        new_present = present[:]
        ok = True
        for w in nbrs:
            new_present[w] |= bit
            if rest >> w & 1:
                d = new_dom[w] & ~bit
                if not d:
                    ok = False
                    break
                new_dom[w] = d
        if not ok:
            continue
        colors[v] = c
        if _search(adj, colors, new_dom, new_present, rest, targets):
            return True
        colors[v] = -1
    return False


def b_chromatic(g: Graph) -> BResult:
    """Exact b-chromatic number with a certified witness coloring."""
    if g.n == 0:
        raise GraphError("b-chromatic number of the empty graph is undefined")
    chi_coloring = optimal_coloring(g)
    chi = chi_coloring.k
    m = m_degree(g)
    for k in range(m, chi, -1):
        found = find_b_coloring(g, k)
        if found is not None:
            return BResult(k, found, (chi, m))
    # every minimum coloring is a b-coloring: a class without a dominating
    # vertex could be eliminated
    if not is_b_coloring(g, chi_coloring):
        raise AssertionError("minimum coloring is not a b-coloring")
    return BResult(chi, chi_coloring, (chi, m))


# -- brute-force oracle -------------------------------------------------


def enumerate_proper_colorings(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every proper coloring up to color renaming (restricted growth strings)."""
    n = g.n
    adj = g.adjacency
    colors = [0] * n

    def rec(v: int, used: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(colors)
            return
        earlier = adj[v] & ((1 << v) - 1)
        for c in range(used + 1):
            if any(colors[u] == c for u in iter_bits(earlier)):
                continue
            colors[v] = c
            yield from rec(v + 1, max(used, c + 1))

    if n:
        yield from rec(0, 0)


def enumerate_b_colorings(g: Graph) -> Iterator[Coloring]:
    _check_brute_size(g)
    for colors in enumerate_proper_colorings(g):
        if is_b_coloring(g, colors):
            yield Coloring(colors)


def brute_force_b_chromatic(g: Graph) -> int:
    _check_brute_size(g)
    return max(c.k for c in enumerate_b_colorings(g))


def _check_brute_size(g: Graph) -> None:
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_LIMIT}, got n={g.n}")
    if g.n == 0:
        raise GraphError("brute force needs at least one vertex")
