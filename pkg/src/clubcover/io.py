"""Text formats for graphs, formulas, covers, partitions, and assignments.

Graphs travel in a DIMACS-like edge list (``p edge n m`` then ``e u v``
lines), formulas in DIMACS CNF.  Everything on disk is 1-indexed; the
in-memory model is 0-indexed for graph vertices and clause positions and
1-indexed for SAT variables.  Emitters produce canonical text (sorted
edges, one clause per line), so emit(parse(x)) is a fixed point.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .cover import ClubCover
from .exact import CliquePartition
from .graph import Graph
from .reductions import Label, LabeledGraph, Provenance
from .sat import Assignment, CnfFormula, Literal


class ParseError(ValueError):
    """Malformed input text; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("c"):
            continue
        yield lineno, stripped


# ---------------------------------------------------------------------------
# Graphs


def parse_graph(text: str) -> Graph:
    """Parse a DIMACS-like edge list; rejects self-loops, duplicate edges,
    out-of-range endpoints, and edge-count mismatches, naming the line."""
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in _content_lines(text):
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError("expected 'p edge <n> <m>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("vertex/edge counts must be integers", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("counts must be non-negative", lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            if len(parts) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("endpoints must be integers", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"endpoint out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            pair = (u - 1, v - 1) if u < v else (v - 1, u - 1)
            if pair in seen:
                raise ParseError(f"duplicate edge {u} {v}", lineno)
            seen.add(pair)
            edges.append(pair)
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise ParseError("missing problem line 'p edge <n> <m>'")
    if m != len(edges):
        raise ParseError(f"problem line declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def emit_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {len(g.edges)}"]
    for u, v in sorted(g.edges):
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# CNF formulas


def parse_cnf(text: str) -> CnfFormula:
    """Parse DIMACS CNF with one zero-terminated clause per line."""
    num_vars = None
    declared = None
    clauses: list[list[int]] = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if parts[0] == "p":
            if num_vars is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("expected 'p cnf <vars> <clauses>'", lineno)
            try:
                num_vars, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("counts must be integers", lineno) from None
        else:
            if num_vars is None:
                raise ParseError("clause before problem line", lineno)
            try:
                codes = [int(tok) for tok in parts]
            except ValueError:
                raise ParseError("literals must be integers", lineno) from None
            if not codes or codes[-1] != 0:
                raise ParseError("clause must end with 0", lineno)
            body = codes[:-1]
            if any(c == 0 for c in body):
                raise ParseError("literal 0 inside a clause", lineno)
            if any(abs(c) > num_vars for c in body):
                raise ParseError(f"variable out of range 1..{num_vars}", lineno)
            clauses.append(body)
    if num_vars is None:
        raise ParseError("missing problem line 'p cnf <vars> <clauses>'")
    if declared != len(clauses):
        raise ParseError(f"problem line declares {declared} clauses, found {len(clauses)}")
    try:
        return CnfFormula(
            num_vars,
            tuple(tuple(Literal.from_int(c) for c in clause) for clause in clauses),
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def emit_cnf(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    for clause in f.clauses:
        lines.append(" ".join(str(lit.to_int()) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Label sidecars


def emit_labels(lg: LabeledGraph) -> str:
    """Sidecar table for a labeled graph: provenance header comments, then
    one '<vertex index> TAB <label>' row per vertex, 1-indexed."""
    lines = [
        f"# construction: {lg.provenance.construction}",
        f"# source-digest: {lg.provenance.source_digest}",
    ]
    for v, lab in enumerate(lg.labels):
        lines.append(f"{v + 1}\t{lab.text()}")
    return "\n".join(lines) + "\n"


def parse_labels(text: str, graph: Graph) -> LabeledGraph:
    """Recombine a graph with its sidecar label table."""
    construction = None
    digest = None
    rows: dict[int, Label] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            if body.startswith("construction:"):
                construction = body.partition(":")[2].strip()
            elif body.startswith("source-digest:"):
                digest = body.partition(":")[2].strip()
            continue
        idx_text, _, label_text = line.partition("\t")
        if not label_text:
            parts = line.split(None, 1)
            if len(parts) != 2:
                raise ParseError("expected '<vertex> <label>'", lineno)
            idx_text, label_text = parts
        try:
            v = int(idx_text) - 1
        except ValueError:
            raise ParseError("vertex index must be an integer", lineno) from None
        if not (0 <= v < graph.n):
            raise ParseError(f"vertex index out of range 1..{graph.n}", lineno)
        if v in rows:
            raise ParseError(f"duplicate label row for vertex {v + 1}", lineno)
        try:
            rows[v] = Label.parse(label_text)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    if construction is None or digest is None:
        raise ParseError("missing '# construction:' or '# source-digest:' header")
    if len(rows) != graph.n:
        raise ParseError(f"expected {graph.n} label rows, found {len(rows)}")
    labels = tuple(rows[v] for v in range(graph.n))
    return LabeledGraph(graph, labels, Provenance(construction, digest))


# ---------------------------------------------------------------------------
# Covers, partitions, assignments (JSON, 1-indexed on disk)


def cover_to_json(cover: ClubCover) -> str:
    payload: dict[str, Any] = {
        "s": cover.club_s,
        "sets": [sorted(v + 1 for v in members) for members in cover.sets],
    }
    if cover.centers is not None:
        payload["centers"] = [v + 1 for v in cover.centers]
    return json.dumps(payload, sort_keys=True, indent=None, separators=(",", ":")) + "\n"


def cover_from_json(text: str) -> ClubCover:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    try:
        club_s = int(payload["s"])
        sets = tuple(frozenset(int(v) - 1 for v in members) for members in payload["sets"])
        centers = payload.get("centers")
        if centers is not None:
            centers = tuple(int(v) - 1 for v in centers)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed cover JSON: {exc}") from None
    return ClubCover(club_s=club_s, sets=sets, centers=centers)


def partition_to_json(partition: CliquePartition) -> str:
    payload = {"parts": [sorted(v + 1 for v in part) for part in partition.parts]}
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def partition_from_json(text: str) -> CliquePartition:
    try:
        payload = json.loads(text)
        parts = tuple(frozenset(int(v) - 1 for v in part) for part in payload["parts"])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed partition JSON: {exc}") from None
    return CliquePartition(parts)


def assignment_to_json(assignment: Assignment) -> str:
    payload = {
        "true": sorted(v for v, val in assignment.items() if val),
        "false": sorted(v for v, val in assignment.items() if not val),
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def assignment_from_json(text: str) -> Assignment:
    try:
        payload = json.loads(text)
        true_vars = [int(v) for v in payload.get("true", [])]
        false_vars = [int(v) for v in payload.get("false", [])]
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed assignment JSON: {exc}") from None
    overlap = set(true_vars) & set(false_vars)
    if overlap:
        raise ParseError(f"variable {min(overlap)} listed as both true and false")
    assignment: Assignment = {v: True for v in true_vars}
    assignment.update({v: False for v in false_vars})
    return assignment


# ---------------------------------------------------------------------------
# Instance digests (identifiers for reports)


def text_digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]
