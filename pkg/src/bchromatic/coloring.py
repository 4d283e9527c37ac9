"""Vertex colorings, color domination, and color elimination.

A coloring is a tuple of dense color identifiers ``0..k-1``.  A vertex is
*color-dominating* when every other color of the palette occurs in its
neighbourhood; the colors that do not occur are its *missing colors*.  A
b-coloring is a proper coloring whose every class holds a dominating vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph, iter_bits

REASONS = ("eliminate-missing", "promote-dominating", "exchange")


class ColoringError(ValueError):
    """Invalid coloring, or a recoloring precondition that does not hold.

    ``vertex`` names the witness vertex when there is one.
    """

    def __init__(self, message: str, vertex: int | None = None):
        super().__init__(message)
        self.vertex = vertex


@dataclass(frozen=True)
class Coloring:
    """Total assignment of dense colors ``0..k-1`` to the vertices."""

    colors: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        if colors and set(colors) != set(range(max(colors) + 1)):
            raise ColoringError(f"palette {sorted(set(colors))} is not dense 0..k-1")

    @property
    def k(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __iter__(self):
        return iter(self.colors)

    def to_json(self) -> list[int]:
        return list(self.colors)

    @classmethod
    def normalized(cls, colors: Sequence[int]) -> "Coloring":
        """Rename colors order-preservingly onto ``0..k-1``."""
        rename = {c: i for i, c in enumerate(sorted(set(colors)))}
        return cls(tuple(rename[c] for c in colors))


def as_coloring(c: Coloring | Sequence[int]) -> Coloring:
    return c if isinstance(c, Coloring) else Coloring(tuple(c))


@dataclass(frozen=True)
class RecolorStep:
    vertex: int
    old: int
    new: int
    reason: str

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, "old": self.old, "new": self.new, "reason": self.reason}


@dataclass
class RecolorTrace:
    """Ordered recoloring steps plus the final palette renaming.

    Steps use the color labels of the starting coloring; ``renaming`` maps
    each surviving label onto the dense output palette.
    """

    steps: list[RecolorStep] = field(default_factory=list)
    renaming: dict[int, int] = field(default_factory=dict)

    def record(self, vertex: int, old: int, new: int, reason: str) -> None:
        if reason not in REASONS:
            raise ValueError(f"unknown reason tag {reason!r}")
        self.steps.append(RecolorStep(vertex, old, new, reason))

    def apply(self, initial: Sequence[int]) -> list[int]:
        """Run the steps on a copy of ``initial``; labels are not renamed."""
        colors = list(initial)
        for step in self.steps:
            if colors[step.vertex] != step.old:
                raise ColoringError(
                    f"trace expects vertex {step.vertex} colored {step.old}, found {colors[step.vertex]}",
                    step.vertex,
                )
            colors[step.vertex] = step.new
        return colors

    def replay(self, initial: Sequence[int]) -> Coloring:
        return Coloring(tuple(self.renaming[c] for c in self.apply(initial)))

    def to_dict(self) -> dict:
        return {
            "steps": [s.to_dict() for s in self.steps],
            "renaming": {str(k): v for k, v in sorted(self.renaming.items())},
        }


def _check_size(g: Graph, c: Coloring) -> None:
    if len(c) != g.n:
        raise ColoringError(f"coloring has {len(c)} entries for {g.n} vertices")


def color_class(g: Graph, c: Coloring | Sequence[int], i: int) -> frozenset[int]:
    c = as_coloring(c)
    _check_size(g, c)
    if not 0 <= i < c.k:
        raise ColoringError(f"unknown color {i} (palette 0..{c.k - 1})")
    return frozenset(v for v, col in enumerate(c.colors) if col == i)


def _proper(adj: tuple[int, ...], colors: Sequence[int]) -> bool:
    for v, m in enumerate(adj):
        cv = colors[v]
        for u in iter_bits(m >> (v + 1) << (v + 1)):
            if colors[u] == cv:
                return False
    return True


def is_proper(g: Graph, c: Coloring | Sequence[int]) -> bool:
    c = as_coloring(c)
    _check_size(g, c)
    return _proper(g.adjacency, c.colors)


def _seen_colors(adj: tuple[int, ...], colors: Sequence[int], v: int) -> int:
    seen = 0
    for u in iter_bits(adj[v]):
        seen |= 1 << colors[u]
    return seen


def _require_proper(g: Graph, c: Coloring) -> None:
    _check_size(g, c)
    if not _proper(g.adjacency, c.colors):
        raise ColoringError("coloring is not proper")


def missing_colors(g: Graph, c: Coloring | Sequence[int], v: int) -> frozenset[int]:
    c = as_coloring(c)
    _require_proper(g, c)
    g.check_vertex(v)
    absent = ((1 << c.k) - 1) & ~_seen_colors(g.adjacency, c.colors, v) & ~(1 << c.colors[v])
    return frozenset(iter_bits(absent))


def is_color_dominating(g: Graph, c: Coloring | Sequence[int], v: int) -> bool:
    return not missing_colors(g, c, v)


def dominating_vertices(adj: tuple[int, ...], colors: Sequence[int], k: int) -> list[int]:
    """Color-dominating vertices of a proper coloring (no properness check)."""
    full = (1 << k) - 1
    return [v for v in range(len(colors)) if _seen_colors(adj, colors, v) | (1 << colors[v]) == full]


def dominated_classes(adj: tuple[int, ...], colors: Sequence[int], k: int) -> int:
    """Bitmask of the colors owning at least one dominating vertex."""
    full = (1 << k) - 1
    out = 0
    for v, cv in enumerate(colors):
        bit = 1 << cv
        if not out & bit and _seen_colors(adj, colors, v) | bit == full:
            out |= bit
    return out


def is_b_coloring(g: Graph, c: Coloring | Sequence[int]) -> bool:
    colors = tuple(c)
    if len(colors) != g.n:
        return False
    if not colors:
        return True
    k = max(colors) + 1
    if min(colors) < 0 or len(set(colors)) != k:
        return False
    if not _proper(g.adjacency, colors):
        return False
    return dominated_classes(g.adjacency, colors, k) == (1 << k) - 1


def eliminate_color(g: Graph, c: Coloring | Sequence[int], i: int) -> tuple[Coloring, RecolorTrace]:
    """Move every vertex of class ``i`` to its smallest missing color.

    Class ``i`` is independent, so the moves do not interact and the result
    stays proper.  The output palette is renormalized; the trace keeps the
    renaming.
    """
    c = as_coloring(c)
    _require_proper(g, c)
    if not 0 <= i < c.k:
        raise ColoringError(f"unknown color {i} (palette 0..{c.k - 1})")
    colors = list(c.colors)
    trace = RecolorTrace()
    eliminate_in_place(g.adjacency, colors, c.k, i, trace, set())
    survivors = [col for col in range(c.k) if col != i]
    trace.renaming = {col: new for new, col in enumerate(survivors)}
    return Coloring(tuple(trace.renaming[col] for col in colors)), trace


def eliminate_in_place(
    adj: tuple[int, ...],
    colors: list[int],
    k: int,
    i: int,
    trace: RecolorTrace,
    gone: Iterable[int],
) -> None:
    """Recolor every vertex of class ``i`` onto a missing color, in place.

    ``colors`` keeps the original labels; labels in ``gone`` are already
    eliminated and are never chosen.  Raises :class:`ColoringError` with a
    witness if some vertex has no missing color; nothing is modified then.
    """
    allowed = ((1 << k) - 1) & ~(1 << i)
    for col in gone:
        allowed &= ~(1 << col)
    members = [v for v, col in enumerate(colors) if col == i]
    member_mask = 0
    for v in members:
        member_mask |= 1 << v
    for v in members:
        if adj[v] & member_mask:
            raise ColoringError(f"class {i} is not independent", v)
    moves = []
    for v in members:
        free = allowed & ~_seen_colors(adj, colors, v)
        if not free:
            raise ColoringError(f"vertex {v} of color {i} has no missing color", v)
        moves.append((v, (free & -free).bit_length() - 1))
    for v, new in moves:
        trace.record(v, i, new, "eliminate-missing")
        colors[v] = new

