"""Readers and writers for graph6, DIMACS ``p edge`` and plain edge lists.

graph6 layout: a size header (one byte ``n + 63`` for ``n <= 62``; ``~``
followed by three 6-bit groups for ``n <= 258047``; ``~~`` followed by six
groups beyond that), then the upper triangle in column order
``(0,1), (0,2), (1,2), (0,3), ...`` packed six bits per byte, most
significant bit first, each byte offset by 63 and zero padded.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph

log = logging.getLogger(__name__)

GRAPH6_HEADER = b">>graph6<<"
# Text formats allocate n adjacency masks up front.
MAX_TEXT_VERTICES = 1 << 16


class ParseError(ValueError):
    """Malformed input; ``line`` is 1-based, ``offset`` a 0-based byte index."""

    def __init__(self, message: str, *, line: int | None = None, offset: int | None = None):
        self.message = message
        self.line = line
        self.offset = offset
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    source: str
    format: str


# -- graph6 -------------------------------------------------------------


def _as_bytes(line: bytes | str) -> bytes:
    if isinstance(line, str):
        try:
            return line.encode("ascii")
        except UnicodeEncodeError as exc:
            raise ParseError("non-ASCII character", offset=exc.start) from None
    return bytes(line)


def parse_graph6(line: bytes | str, *, lineno: int | None = None) -> Graph:
    data = _as_bytes(line)
    if data.endswith(b"\n"):
        data = data[:-1]
        if data.endswith(b"\r"):
            data = data[:-1]
    start = len(GRAPH6_HEADER) if data.startswith(GRAPH6_HEADER) else 0

    def fail(msg: str, pos: int) -> ParseError:
        return ParseError(msg, line=lineno, offset=pos)

    for pos in range(start, len(data)):
        if not 63 <= data[pos] <= 126:
            raise fail(f"byte {data[pos]} outside graph6 range 63..126", pos)
    if start >= len(data):
        raise fail("missing size header", start)
    pos = start
    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    else:
        if pos + 1 < len(data) and data[pos + 1] == 126:
            width, pos = 6, pos + 2
        else:
            width, pos = 3, pos + 1
        if pos + width > len(data):
            raise fail("truncated size header", len(data))
        n = 0
        for b in data[pos:pos + width]:
            n = (n << 6) | (b - 63)
        pos += width
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise fail(f"truncated adjacency: need {nbytes} bytes, got {len(body)}", len(data))
    if len(body) > nbytes:
        raise fail("trailing bytes after adjacency", pos + nbytes)

    adj = [0] * n
    value = 0
    for b in body:
        value = (value << 6) | (b - 63)
    pad = nbytes * 6 - nbits
    if value & ((1 << pad) - 1):
        raise fail("nonzero padding bits", len(data) - 1)
    value >>= pad
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph._trusted(n, tuple(adj))


def write_graph6(g: Graph) -> bytes:
    n = g.n
    if n < 0 or n > 68719476735:
        raise ValueError(f"graph6 cannot encode n={n}")
    if n <= 62:
        out = bytearray([n + 63])
    elif n <= 258047:
        out = bytearray([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    else:
        out = bytearray([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    adj = g.adjacency
    bits = []
    for j in range(1, n):
        col = adj[j]
        bits.extend(col >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    for p in range(0, len(bits), 6):
        v = 0
        for b in bits[p:p + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return bytes(out)


def read_graph6_stream(lines: Iterable[bytes | str]) -> Iterator[tuple[int, Graph | ParseError]]:
    """Yield ``(index, graph_or_error)`` for each non-blank line.

    Errors are yielded, not raised, so a sweep can log and continue.
    """
    for idx, raw in enumerate(lines):
        text = raw.strip() if isinstance(raw, (bytes, str)) else raw
        if not text:
            continue
        try:
            yield idx, parse_graph6(text, lineno=idx + 1)
        except ParseError as err:
            log.warning("skipping record %d: %s", idx + 1, err)
            yield idx, err


# -- DIMACS -------------------------------------------------------------


def parse_dimacs_col(text: str) -> Graph:
    n: int | None = None
    adj: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise ParseError("duplicate problem line", line=lineno)
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise ParseError("expected 'p edge <n> <m>'", line=lineno)
            try:
                n, _m = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError("non-integer size in problem line", line=lineno) from None
            if n < 0 or _m < 0:
                raise ParseError("negative size in problem line", line=lineno)
            if n > MAX_TEXT_VERTICES:
                raise ParseError(f"vertex count above {MAX_TEXT_VERTICES}", line=lineno)
            adj = [0] * n
        elif tag == "e":
            if n is None:
                raise ParseError("edge line before problem line", line=lineno)
            if len(fields) != 3:
                raise ParseError("expected 'e <u> <v>'", line=lineno)
            try:
                u, v = int(fields[1]) - 1, int(fields[2]) - 1
            except ValueError:
                raise ParseError("non-integer vertex", line=lineno) from None
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"vertex out of range 1..{n}", line=lineno)
            if u == v:
                raise ParseError("self-loop", line=lineno)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        else:
            raise ParseError(f"unknown line type {tag!r}", line=lineno)
    if n is None:
        raise ParseError("missing problem line")
    return Graph._trusted(n, tuple(adj))


def write_dimacs_col(g: Graph) -> str:
    edges = g.edges()
    lines = [f"p edge {g.n} {len(edges)}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


# -- edge list ----------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    n: int | None = None
    first = next((i for i, l in enumerate(lines) if l.strip()), None)
    if first is not None and lines[first].strip().startswith("n="):
        try:
            n = int(lines[first].strip()[2:])
        except ValueError:
            raise ParseError("bad vertex count header", line=first + 1) from None
        if n < 0:
            raise ParseError("negative vertex count", line=first + 1)
        lines = lines[first + 1:]
        offset = first + 1
    else:
        offset = 0
    tokens: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, start=offset + 1):
        for tok in raw.split():
            try:
                val = int(tok)
            except ValueError:
                raise ParseError(f"non-integer token {tok!r}", line=lineno) from None
            if val < 0:
                raise ParseError(f"negative vertex {val}", line=lineno)
            tokens.append((val, lineno))
    if len(tokens) % 2:
        raise ParseError("odd number of vertex tokens", line=tokens[-1][1])
    edges = [(tokens[i][0], tokens[i + 1][0], tokens[i][1]) for i in range(0, len(tokens), 2)]
    top = max((max(u, v) for u, v, _ in edges), default=-1) + 1
    if max(n or 0, top) > MAX_TEXT_VERTICES:
        raise ParseError(f"vertex count above {MAX_TEXT_VERTICES}")
    if n is None:
        n = top
    elif top > n:
        raise ParseError(f"vertex {top - 1} exceeds declared n={n}")
    adj = [0] * n
    for u, v, lineno in edges:
        if u == v:
            raise ParseError("self-loop", line=lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, tuple(adj))


def write_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- files --------------------------------------------------------------

_EXTENSIONS = {".g6": "graph6", ".graph6": "graph6", ".col": "dimacs", ".dimacs": "dimacs"}


def guess_format(path: str) -> str:
    for ext, fmt in _EXTENSIONS.items():
        if path.endswith(ext):
            return fmt
    return "edgelist"


def parse_text(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        first = next((l for l in text.splitlines() if l.strip()), "")
        return parse_graph6(first.strip(), lineno=1)
    if fmt == "dimacs":
        return parse_dimacs_col(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}")


def load_graph(path: str, fmt: str | None = None) -> GraphDocument:
    fmt = fmt or guess_format(path)
    with open(path, encoding="ascii", errors="strict") as fh:
        text = fh.read()
    return GraphDocument(parse_text(text, fmt), path, fmt)


def write_text(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return write_graph6(g).decode("ascii") + "\n"
    if fmt == "dimacs":
        return write_dimacs_col(g)
    if fmt == "edgelist":
        return write_edge_list(g)
    raise ValueError(f"unknown format {fmt!r}")

