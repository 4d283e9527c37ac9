"""Turn a b-coloring of G into a b-coloring of G - x.

Deleting ``x`` (color ``i``) can only hurt dominating vertices that relied
on ``x`` for color ``i``.  Both procedures repair the coloring by promoting
such a vertex ``y`` to color ``i`` (legal, since ``i`` is now missing at
``y``) and moving the rest of its old class onto missing colors.  Every
repair removes one color; the general procedure loses at most ``d(x)``
colors, the quasi-line one at most two.

Vertex labels in traces are those of G; certificates carry colorings of G
(before) and of G - x (after, relabelled by ``delete_vertex``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coloring import (
    Coloring,
    ColoringError,
    RecolorTrace,
    as_coloring,
    eliminate_in_place,
    is_b_coloring,
)
from .graph import Graph, GraphError, delete_vertex, iter_bits
from .graphio import write_graph6
from .recognizers import two_clique_cover


class BoundViolation(AssertionError):
    """A procedure broke its guarantee; ``artifact`` replays the instance."""

    def __init__(self, message: str, artifact: dict):
        super().__init__(message)
        self.artifact = artifact


@dataclass
class DeletionCertificate:
    x: int
    procedure: str
    before: Coloring
    after: Coloring
    trace: RecolorTrace
    colors_lost: int
    bound: int

    def replay(self) -> Coloring:
        colors = self.trace.apply(self.before.colors)
        del colors[self.x]
        return Coloring(tuple(self.trace.renaming[c] for c in colors))

    def to_dict(self) -> dict:
        return {
            "x": self.x,
            "procedure": self.procedure,
            "before": self.before.to_json(),
            "after": self.after.to_json(),
            "colors_lost": self.colors_lost,
            "bound": self.bound,
            "trace": self.trace.to_dict(),
        }


def _dominated(adj: Sequence[int], colors: Sequence[int], live: int) -> int:
    out = 0
    for v, cv in enumerate(colors):
        bit = 1 << cv
        if out & bit:
            continue
        seen = bit
        for u in iter_bits(adj[v]):
            seen |= 1 << colors[u]
        if seen & live == live:
            out |= bit
    return out


class _Repair:
    """Shared state: coloring of G - x in G's color labels."""

    def __init__(self, g: Graph, c: Coloring, x: int, procedure: str):
        if g.n < 2:
            raise GraphError("need at least two vertices to delete one")
        g.check_vertex(x)
        if not is_b_coloring(g, c):
            raise ColoringError("input is not a b-coloring")
        self.g, self.c, self.x, self.procedure = g, c, x, procedure
        self.h, self.to_new = delete_vertex(g, x)
        self.to_old = {new: old for old, new in self.to_new.items()}
        self.k = c.k
        self.i = c[x]
        self.colors = [c[self.to_old[v]] for v in range(self.h.n)]
        self.live = (1 << self.k) - 1
        self.gone: list[int] = []
        self.trace = RecolorTrace()
        full = self.live
        dominating = set()
        for v in range(g.n):
            seen = 1 << c[v]
            for u in iter_bits(g.adjacency[v]):
                seen |= 1 << c[u]
            if seen == full:
                dominating.add(v)
        self.neighbors_of_x = sorted(self.to_new[u] for u in iter_bits(g.adjacency[x]))
        self.was_dominating = {self.to_new[v] for v in dominating if v != x}

    def violation(self, message: str) -> BoundViolation:
        return BoundViolation(message, {
            "graph6": write_graph6(self.g).decode("ascii"),
            "coloring": self.c.to_json(),
            "x": self.x,
            "procedure": self.procedure,
            "reason": message,
        })

    def lost(self) -> int:
        return self.live & ~_dominated(self.h.adjacency, self.colors, self.live)

    def promote(self, y: int) -> None:
        old = self.colors[y]
        for u in iter_bits(self.h.adjacency[y]):
            if self.colors[u] == self.i:
                raise self.violation(f"vertex {self.to_old[y]} cannot take color {self.i}")
        self.trace.record(self.to_old[y], old, self.i, "promote-dominating")
        self.colors[y] = self.i

    def eliminate(self, s: int) -> None:
        local = RecolorTrace()
        try:
            eliminate_in_place(self.h.adjacency, self.colors, self.k, s, local, self.gone)
        except ColoringError as err:
            raise self.violation(f"eliminating color {s}: {err}") from None
        for step in local.steps:
            self.trace.record(self.to_old[step.vertex], step.old, step.new, step.reason)
        self.gone.append(s)
        self.live &= ~(1 << s)

    def stranded(self, s: int) -> list[int]:
        """Formerly dominating neighbours of x still colored ``s``."""
        return [y for y in self.neighbors_of_x if y in self.was_dominating and self.colors[y] == s]

    def finish(self, bound: int) -> DeletionCertificate:
        survivors = [col for col in range(self.k) if col not in self.gone]
        self.trace.renaming = {col: new for new, col in enumerate(survivors)}
        after = Coloring(tuple(self.trace.renaming[col] for col in self.colors))
        if not is_b_coloring(self.h, after):
            raise self.violation("result is not a b-coloring")
        if len(self.gone) > bound:
            raise self.violation(f"lost {len(self.gone)} colors, bound is {bound}")
        return DeletionCertificate(self.x, self.procedure, self.c, after, self.trace, len(self.gone), bound)


def recolor_general(g: Graph, c: Coloring | Sequence[int], x: int) -> DeletionCertificate:
    """b-coloring of ``G - x`` with at least ``k - d(x)`` colors.

    While some color has no dominating vertex: if it is the color of ``x``,
    eliminate it; otherwise (smallest such color ``s`` first) promote the
    smallest formerly dominating neighbour of ``x`` colored ``s`` and
    eliminate ``s``.  Domination is recomputed after every elimination.
    """
    rep = _Repair(g, as_coloring(c), x, "general")
    bound = g.degree(x)
    while True:
        lost = rep.lost()
        if not lost:
            break
        if lost >> rep.i & 1:
            rep.eliminate(rep.i)
        else:
            s = (lost & -lost).bit_length() - 1
            ys = rep.stranded(s)
            if not ys:
                raise rep.violation(f"color {s} lost domination away from N(x)")
            rep.promote(ys[0])
            rep.eliminate(s)
        if len(rep.gone) > bound:
            raise rep.violation(f"lost {len(rep.gone)} colors, bound is {bound}")
    return rep.finish(bound)


def recolor_quasi_line(g: Graph, c: Coloring | Sequence[int], x: int) -> DeletionCertificate:
    """b-coloring of ``G - x`` losing at most two colors, for quasi-line G.

    ``N(x)`` splits into cliques ``K1, K2``, so a color has at most one
    vertex in each.  A stranded color with vertices in both cliques is
    repaired by promoting both, which restores every other color.  With a
    single stranded vertex in one clique, promoting it restores every color
    stranded in that clique; at most one more repair, in the other clique,
    is then needed.
    """
    g.check_vertex(x)
    cover = two_clique_cover(g, x)
    if cover is None:
        raise GraphError(f"N({x}) is not covered by two cliques")
    for v in range(g.n):
        if two_clique_cover(g, v) is None:
            raise GraphError(f"graph is not quasi-line (vertex {v})")
    rep = _Repair(g, as_coloring(c), x, "quasi-line")
    side = {rep.to_new[u]: 0 for u in cover[0]}
    side.update({rep.to_new[u]: 1 for u in cover[1]})
    used_sides: set[int] = set()
    while True:
        lost = rep.lost()
        if not lost:
            break
        if lost >> rep.i & 1:
            rep.eliminate(rep.i)
            continue
        s = (lost & -lost).bit_length() - 1
        ws = rep.stranded(s)
        if not ws:
            raise rep.violation(f"color {s} lost domination away from N(x)")
        if len(ws) > 2 or len({side[w] for w in ws}) != len(ws):
            raise rep.violation(f"color {s} has {len(ws)} stranded vertices not split by the cover")
        sides = {side[w] for w in ws}
        if sides & used_sides:
            raise rep.violation(f"color {s} stranded in an already repaired clique")
        used_sides |= sides
        for w in ws:
            rep.promote(w)
        rep.eliminate(s)
        if len(rep.gone) > 2:
            raise rep.violation(f"lost {len(rep.gone)} colors, bound is 2")
    return rep.finish(2)
