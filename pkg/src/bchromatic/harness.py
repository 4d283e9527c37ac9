"""Batch verification of the vertex-deletion inequalities.

For a graph G and every vertex x the exact values b(G) and b(G - x) are
checked against these inequalities (identifiers are stable report keys):

``general-lower``         b(G-x) >= b(G) - d(x)                    any graph
``rb-window``             b(G) - (ceil(n/2)-2) <= b(G-x)
                          <= b(G) + (floor(n/2)-2)                 connected, n >= 5
``quasi-line-lower``      b(G-x) >= b(G) - 2                       quasi-line
``quasi-line-upper``      b(G-x) <= b(G) + 2                       quasi-line
``chordal-lower``         b(G-x) >= b(G) - omega                   chordal
``chordal-upper-degree``  b(G-x) <= b(G) + 1 + sqrt(d(x) - 1)      chordal, d(x) >= 1
``chordal-upper-omega``   b(G-x) <= b(G) + 1 + sqrt(omega - 1)     chordal
``girth5-lower``          b(G-x) >= b(G) - 2                       girth >= 5 or forest
``girth5-upper``          b(G-x) <= b(G) + 1                       girth >= 5 or forest

Square-root bounds are compared in integers: with ``e = b(G-x) - b(G) - 1``
the bound holds iff ``e <= 0`` or ``e * e <= radicand``.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import IO, Iterable, Iterator

from .coloring import Coloring, is_b_coloring
from .graph import Graph, delete_vertex, girth, is_connected
from .graphio import ParseError, parse_graph6, write_graph6
from .recolor import BoundViolation, recolor_general, recolor_quasi_line
from .recognizers import clique_number, is_chordal, is_quasi_line
from .solver import b_chromatic, enumerate_b_colorings

log = logging.getLogger(__name__)

INEQUALITIES = (
    "general-lower",
    "rb-window",
    "quasi-line-lower",
    "quasi-line-upper",
    "chordal-lower",
    "chordal-upper-degree",
    "chordal-upper-omega",
    "girth5-lower",
    "girth5-upper",
)

DEFAULT_CAP = 22
CHECKS = ("bounds", "constructive")
CSV_COLUMNS = ("record", "graph6", "n", "x", "check", "verdict", "b", "b_minus_x", "degree", "omega", "detail")

PASS, FAIL, NA = "pass", "fail", "n/a"


@lru_cache(maxsize=1 << 17)
def b_number(g: Graph) -> int:
    """Memoized exact b-chromatic number."""
    return b_chromatic(g).b


def _sqrt_upper(bx: int, b: int, radicand: int) -> str:
    if radicand < 0:
        return NA
    excess = bx - b - 1
    return PASS if excess <= 0 or excess * excess <= radicand else FAIL


def evaluate(
    *, n: int, connected: bool, quasi_line: bool, chordal: bool, girth_value: int | None,
    omega: int, b: int, bx: int, d: int,
) -> dict[str, str]:
    """Verdict per inequality identifier for one deletion."""
    ok = lambda cond: PASS if cond else FAIL  # noqa: E731
    high_girth = girth_value is None or girth_value >= 5
    out = {"general-lower": ok(bx >= b - d)}
    if connected and n >= 5:
        out["rb-window"] = ok(b - (-(-n // 2) - 2) <= bx <= b + (n // 2 - 2))
    else:
        out["rb-window"] = NA
    out["quasi-line-lower"] = ok(bx >= b - 2) if quasi_line else NA
    out["quasi-line-upper"] = ok(bx <= b + 2) if quasi_line else NA
    out["chordal-lower"] = ok(bx >= b - omega) if chordal else NA
    out["chordal-upper-degree"] = _sqrt_upper(bx, b, d - 1) if chordal else NA
    out["chordal-upper-omega"] = _sqrt_upper(bx, b, omega - 1) if chordal else NA
    out["girth5-lower"] = ok(bx >= b - 2) if high_girth else NA
    out["girth5-upper"] = ok(bx <= b + 1) if high_girth else NA
    return out


@dataclass
class VertexRecord:
    x: int
    degree: int
    b_minus_x: int
    verdicts: dict[str, str]


@dataclass
class BoundsReport:
    graph6: str
    n: int
    connected: bool = False
    chordal: bool = False
    quasi_line: bool = False
    girth: int | None = None
    b: int | None = None
    chi: int | None = None
    m: int | None = None
    omega: int | None = None
    vertices: list[VertexRecord] = field(default_factory=list)
    skipped: str | None = None

    @property
    def girth_ge5(self) -> bool:
        return self.girth is None or self.girth >= 5

    @property
    def girth_ge7(self) -> bool:
        return self.girth is None or self.girth >= 7

    @property
    def failures(self) -> list[dict]:
        out = []
        for rec in self.vertices:
            for ineq, verdict in rec.verdicts.items():
                if verdict == FAIL:
                    out.append({
                        "graph6": self.graph6, "x": rec.x, "inequality": ineq,
                        "b": self.b, "b_minus_x": rec.b_minus_x, "degree": rec.degree, "omega": self.omega,
                    })
        return out

    @property
    def passed(self) -> bool:
        return self.skipped is None and not self.failures

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6, "n": self.n, "connected": self.connected,
            "chordal": self.chordal, "quasi_line": self.quasi_line, "girth": self.girth,
            "girth_ge5": self.girth_ge5, "girth_ge7": self.girth_ge7,
            "b": self.b, "chi": self.chi, "m": self.m, "omega": self.omega,
            "skipped": self.skipped,
            "vertices": [
                {"x": r.x, "degree": r.degree, "b_minus_x": r.b_minus_x, "verdicts": r.verdicts}
                for r in self.vertices
            ],
            "failures": self.failures,
        }


def check_bounds(g: Graph, *, cap: int = DEFAULT_CAP) -> BoundsReport:
    """Exact b(G) and b(G - x) for every x, judged against every applicable
    inequality.  Graphs above ``cap`` vertices are skipped, never estimated."""
    report = BoundsReport(write_graph6(g).decode("ascii"), g.n)
    if g.n < 2:
        report.skipped = "need at least two vertices"
        return report
    if g.n > cap:
        report.skipped = f"n={g.n} exceeds exact-solver cap {cap}"
        return report
    result = b_chromatic(g)
    report.connected = is_connected(g)
    report.chordal = is_chordal(g)
    report.quasi_line = is_quasi_line(g)
    report.girth = girth(g)
    report.b = result.b
    report.chi, report.m = result.bounds_used
    report.omega = clique_number(g)
    for x in range(g.n):
        h, _ = delete_vertex(g, x)
        bx = b_number(h)
        d = g.degree(x)
        verdicts = evaluate(
            n=g.n, connected=report.connected, quasi_line=report.quasi_line,
            chordal=report.chordal, girth_value=report.girth, omega=report.omega,
            b=report.b, bx=bx, d=d,
        )
        report.vertices.append(VertexRecord(x, d, bx, verdicts))
    return report


@dataclass
class ConstructiveReport:
    graph6: str
    colorings: int = 0
    certificates: dict[str, int] = field(default_factory=lambda: {"general": 0, "quasi-line": 0})
    failures: list[dict] = field(default_factory=list)
    skipped: str | None = None

    @property
    def passed(self) -> bool:
        return self.skipped is None and not self.failures

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6, "colorings": self.colorings, "certificates": self.certificates,
            "failures": self.failures, "skipped": self.skipped,
        }


def check_constructive(
    g: Graph, *, exhaustive_max_n: int = 6, cap: int = DEFAULT_CAP, archive_dir: str | None = None,
) -> ConstructiveReport:
    """Run both recoloring procedures from every available b-coloring and
    every deleted vertex, validating each certificate.

    Colorings: the solver witness, plus every b-coloring when
    ``n <= exhaustive_max_n``.  Failures are collected (and written to
    ``archive_dir`` as JSON when given).
    """
    g6 = write_graph6(g).decode("ascii")
    report = ConstructiveReport(g6)
    if g.n < 2:
        report.skipped = "need at least two vertices"
        return report
    if g.n > cap:
        report.skipped = f"n={g.n} exceeds exact-solver cap {cap}"
        return report
    witness = b_chromatic(g).witness
    colorings: list[Coloring] = [witness]
    if g.n <= exhaustive_max_n:
        colorings.extend(c for c in enumerate_b_colorings(g) if c != witness)
    quasi = is_quasi_line(g)
    sub_b = [b_number(delete_vertex(g, x)[0]) for x in range(g.n)]
    procedures = [("general", recolor_general)] + ([("quasi-line", recolor_quasi_line)] if quasi else [])
    for c in colorings:
        report.colorings += 1
        for x in range(g.n):
            for name, proc in procedures:
                problem = None
                try:
                    cert = proc(g, c, x)
                except BoundViolation as err:
                    problem = err.artifact
                else:
                    h, _ = delete_vertex(g, x)
                    if not is_b_coloring(h, cert.after):
                        problem = "after is not a b-coloring"
                    elif cert.replay() != cert.after:
                        problem = "trace replay differs"
                    elif cert.after.k < c.k - cert.bound:
                        problem = f"{cert.after.k} colors left, guarantee is {c.k - cert.bound}"
                    elif cert.after.k > sub_b[x]:
                        problem = f"{cert.after.k} colors exceeds b(G-x)={sub_b[x]}"
                if problem is None:
                    report.certificates[name] += 1
                    continue
                failure = problem if isinstance(problem, dict) else {
                    "graph6": g6, "coloring": c.to_json(), "x": x, "procedure": name, "reason": problem,
                }
                report.failures.append(failure)
                _archive(failure, archive_dir)
    return report


def _archive(failure: dict, archive_dir: str | None) -> None:
    if archive_dir is None:
        return
    os.makedirs(archive_dir, exist_ok=True)
    name = f"counterexample-{abs(hash(json.dumps(failure, sort_keys=True))):x}.json"
    with open(os.path.join(archive_dir, name), "w") as fh:
        json.dump(failure, fh, indent=2, sort_keys=True)
    log.error("counterexample archived: %s", name)


# -- sweeps -------------------------------------------------------------


def _process_line(args: tuple[int, str, tuple[str, ...], int]) -> dict:
    index, line, checks, cap = args
    try:
        g = parse_graph6(line, lineno=index + 1)
    except ParseError as err:
        return {"record": index, "line": index + 1, "error": str(err)}
    out: dict = {"record": index}
    if "bounds" in checks:
        out["bounds"] = check_bounds(g, cap=cap).to_dict()
    if "constructive" in checks:
        out["constructive"] = check_constructive(g, cap=cap).to_dict()
    return out


def record_status(rec: dict) -> str:
    if "error" in rec:
        return "error"
    failed = False
    skipped = False
    for key in ("bounds", "constructive"):
        part = rec.get(key)
        if part is None:
            continue
        failed |= bool(part["failures"])
        skipped |= part["skipped"] is not None
    return FAIL if failed else ("skipped" if skipped else PASS)


def csv_rows(rec: dict) -> Iterator[dict]:
    base = {"record": rec["record"]}
    if "error" in rec:
        yield {**base, "check": "summary", "verdict": "error", "detail": rec["error"]}
        return
    bounds = rec.get("bounds")
    cons = rec.get("constructive")
    g6 = (bounds or cons)["graph6"]
    base["graph6"] = g6
    if bounds:
        base["n"] = bounds["n"]
        for v in bounds["vertices"]:
            for ineq in INEQUALITIES:
                yield {
                    **base, "x": v["x"], "check": ineq, "verdict": v["verdicts"][ineq],
                    "b": bounds["b"], "b_minus_x": v["b_minus_x"], "degree": v["degree"], "omega": bounds["omega"],
                }
    if cons:
        for name, count in cons["certificates"].items():
            yield {**base, "check": f"certificates-{name}", "verdict": FAIL if cons["failures"] else PASS,
                   "detail": f"{count} valid, {len(cons['failures'])} failures"}
    yield {**base, "check": "summary", "verdict": record_status(rec),
           "b": bounds["b"] if bounds else "", "omega": bounds["omega"] if bounds else "",
           "detail": (bounds or cons)["skipped"] or ""}


def sweep(
    lines: Iterable[str | bytes],
    out: IO[str],
    *,
    checks: Iterable[str] = CHECKS,
    fmt: str = "json",
    strict: bool = False,
    jobs: int = 1,
    cap: int = DEFAULT_CAP,
) -> int:
    """Check every graph6 line; write one record per non-blank input line in
    input order.  Returns the exit status: 0 clean, 1 any failed check,
    2 a parse error under ``strict``."""
    checks = tuple(checks)
    for name in checks:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}")
    tasks = (
        (i, raw.decode("ascii", "replace") if isinstance(raw, bytes) else raw, checks, cap)
        for i, raw in enumerate(lines)
    )
    tasks = ((i, line.strip(), c, k) for i, line, c, k in tasks if line.strip())
    writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, restval="") if fmt == "csv" else None
    if writer:
        writer.writeheader()
    status = 0
    pool = None
    if jobs > 1:
        import multiprocessing

        pool = multiprocessing.Pool(jobs)
        results: Iterable[dict] = pool.imap(_process_line, tasks, chunksize=8)
    else:
        results = map(_process_line, tasks)
    try:
        for rec in results:
            if writer:
                writer.writerows(csv_rows(rec))
            else:
                out.write(json.dumps(rec, sort_keys=True) + "\n")
            state = record_status(rec)
            if state == "error":
                log.warning("record %d: %s", rec["record"], rec["error"])
                if strict:
                    log.error("strict mode: stopping at line %d", rec["line"])
                    return 2
            elif state == FAIL:
                status = 1
    finally:
        if pool is not None:
            pool.terminate()
    return status


def sweep_text(text: str, **kwargs) -> tuple[int, str]:
    """Convenience wrapper returning ``(status, output)``."""
    buf = io.StringIO()
    status = sweep(text.splitlines(), buf, **kwargs)
    return status, buf.getvalue()
