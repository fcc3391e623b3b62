"""Hardness-reduction instance builders and their solution mappings.

Three graph constructions are materialized as labeled graphs:

* ``cp-cover2``: a graph whose 2-club covers correspond to clique
  partitions of the source graph (one vertex per source vertex, one per
  source edge).
* ``dsat5-cover32``: a graph coverable by two 3-clubs exactly when the
  source five-literal double-SAT instance is double-satisfiable.
* ``cp-cover3-pendant``: the source graph with a pendant hung on every
  vertex; its 3-club covers correspond to clique partitions.

Every vertex of a constructed graph carries a semantic label, so solutions
can be mapped in both directions and the construction can be re-checked
from the labels alone.  All builders are deterministic: identical sources
yield identical vertex numbering.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import combinations

from .cover import ClubCover, validate_cover
from .exact import CliquePartition, partition_violations
from .graph import Graph, VertexSet, all_pairs_distances, ball
from .sat import (
    Assignment,
    CnfFormula,
    FiveDSatInstance,
    FiveDSatViolation,
    Literal,
    formula_double_satisfied,
    has_two_variable_double_cover,
    validate_5dsat,
)

CP_COVER2 = "cp-cover2"
DSAT5_COVER32 = "dsat5-cover32"
CP_COVER3_PENDANT = "cp-cover3-pendant"

_PLAIN_KINDS = ("r", "rp", "rt", "rpt", "rst", "rf", "rpf", "y", "y1", "y2")
_VERTEX_KINDS = ("w", "u", "pend")  # carry a source vertex index (0-based)
_VARIABLE_KINDS = ("xt1", "xt2", "xf")  # carry a variable index (1-based)


@dataclass(frozen=True, order=True)
class Label:
    """Semantic tag of one vertex in a constructed graph.

    Indices follow the conventions of the source object: graph vertices and
    clause positions are 0-based, SAT variables 1-based.  The on-disk text
    form (``w:3``, ``wp:1,4``, ``xt1:2``, ...) is uniformly 1-based for
    graph vertices and clause positions, matching the file formats.
    """

    kind: str
    a: int | None = None
    b: int | None = None

    def __post_init__(self) -> None:
        if self.kind in _PLAIN_KINDS:
            if self.a is not None or self.b is not None:
                raise ValueError(f"label kind {self.kind!r} takes no indices")
        elif self.kind in _VERTEX_KINDS or self.kind in _VARIABLE_KINDS or self.kind == "vc":
            if self.a is None or self.b is not None:
                raise ValueError(f"label kind {self.kind!r} takes exactly one index")
            low = 1 if self.kind in _VARIABLE_KINDS else 0
            if self.a < low:
                raise ValueError(f"label index {self.a} out of range for {self.kind!r}")
        elif self.kind == "wp":
            if self.a is None or self.b is None:
                raise ValueError("label kind 'wp' takes two indices")
            if not 0 <= self.a < self.b:
                raise ValueError("'wp' indices must be ordered: a < b")
        else:
            raise ValueError(f"unknown label kind {self.kind!r}")

    def text(self) -> str:
        if self.kind in _PLAIN_KINDS:
            return self.kind
        if self.kind == "wp":
            return f"wp:{self.a + 1},{self.b + 1}"
        if self.kind in _VARIABLE_KINDS:
            return f"{self.kind}:{self.a}"
        return f"{self.kind}:{self.a + 1}"  # w, u, pend, vc

    @staticmethod
    def parse(text: str) -> "Label":
        text = text.strip()
        if ":" not in text:
            return Label(text)
        kind, _, rest = text.partition(":")
        try:
            if kind == "wp":
                first, _, second = rest.partition(",")
                return Label("wp", int(first) - 1, int(second) - 1)
            if kind in _VARIABLE_KINDS:
                return Label(kind, int(rest))
            return Label(kind, int(rest) - 1)
        except ValueError as exc:
            raise ValueError(f"malformed label {text!r}: {exc}") from None


@dataclass(frozen=True)
class Provenance:
    """Which construction produced a labeled graph, plus a digest of the
    source instance for cross-checking."""

    construction: str
    source_digest: str


class LabeledGraph:
    """A constructed graph together with a label for every vertex."""

    __slots__ = ("graph", "labels", "provenance", "_index")

    def __init__(
        self, graph: Graph, labels: tuple[Label, ...], provenance: Provenance
    ) -> None:
        if len(labels) != graph.n:
            raise ValueError("need exactly one label per vertex")
        index: dict[Label, int] = {}
        for v, lab in enumerate(labels):
            if lab in index:
                raise ValueError(f"duplicate label {lab.text()}")
            index[lab] = v
        self.graph = graph
        self.labels = labels
        self.provenance = provenance
        self._index = index

    def vertex(self, label: Label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"no vertex labeled {label.text()}") from None

    def has_label(self, label: Label) -> bool:
        return label in self._index

    def label_of(self, v: int) -> Label:
        self.graph._check_vertex(v)
        return self.labels[v]

    def __repr__(self) -> str:
        return f"LabeledGraph({self.provenance.construction}, n={self.graph.n})"


def graph_digest(g: Graph) -> str:
    body = f"graph;{g.n};" + ";".join(f"{u},{v}" for u, v in sorted(g.edges))
    return hashlib.sha256(body.encode()).hexdigest()[:16]


def formula_digest(f: CnfFormula) -> str:
    clause_texts = []
    for clause in f.clauses:
        clause_texts.append(",".join(str(lit.to_int()) for lit in sorted(clause)))
    body = f"cnf;{f.num_vars};" + ";".join(clause_texts)
    return hashlib.sha256(body.encode()).hexdigest()[:16]


def _require_construction(lg: LabeledGraph, expected: str) -> None:
    if lg.provenance.construction != expected:
        raise ValueError(
            f"labeled graph was produced by {lg.provenance.construction!r}, "
            f"expected {expected!r}"
        )


# ---------------------------------------------------------------------------
# Clique partition -> 2-club cover


def reduce_cp_to_cover2(gp: Graph) -> LabeledGraph:
    """Image of a graph under the 2-club-cover construction.

    One vertex per source vertex, one per source edge; a vertex-vertex edge
    never exists, a vertex meets exactly its incident edge-vertices, and two
    edge-vertices meet iff their source edges share an endpoint.
    """
    pair_labels = [Label("wp", i, j) for i, j in sorted(gp.edges)]
    labels = tuple([Label("w", i) for i in range(gp.n)] + pair_labels)
    n_w = gp.n
    edges: set[tuple[int, int]] = set()
    touching: dict[int, list[int]] = {i: [] for i in range(gp.n)}
    for offset, lab in enumerate(pair_labels):
        pv = n_w + offset
        touching[lab.a].append(pv)
        touching[lab.b].append(pv)
    for i in range(gp.n):
        incident = touching[i]
        for pv in incident:
            edges.add((i, pv))
        for x, y in combinations(incident, 2):
            edges.add((x, y) if x < y else (y, x))
    graph = Graph(n_w + len(pair_labels), edges)
    return LabeledGraph(graph, labels, Provenance(CP_COVER2, graph_digest(gp)))


def source_graph_from_cover2_image(lg: LabeledGraph) -> Graph:
    """Rebuild the source graph from a ``cp-cover2`` image's labels."""
    _require_construction(lg, CP_COVER2)
    w_ids = sorted(lab.a for lab in lg.labels if lab.kind == "w")
    pairs = [(lab.a, lab.b) for lab in lg.labels if lab.kind == "wp"]
    if any(lab.kind not in ("w", "wp") for lab in lg.labels):
        raise ValueError("unexpected label kind in a cp-cover2 image")
    n = len(w_ids)
    if w_ids != list(range(n)):
        raise ValueError("source vertex labels are not 0..n-1")
    return Graph(n, pairs)


def map_cliques_to_clubs2(partition: CliquePartition, lg: LabeledGraph) -> ClubCover:
    """Turn a clique partition of the source into a 2-club cover of the
    image: each part takes its member vertices plus every edge-vertex whose
    lower-indexed endpoint lies in the part."""
    gp = source_graph_from_cover2_image(lg)
    problems = partition_violations(gp, partition)
    if problems:
        raise ValueError(f"partition does not fit the source graph: {problems[0]}")
    sets: list[VertexSet] = []
    for part in partition.parts:
        members = {lg.vertex(Label("w", j)) for j in part}
        for lab in lg.labels:
            if lab.kind == "wp" and lab.a in part:
                members.add(lg.vertex(lab))
        sets.append(frozenset(members))
    return ClubCover(club_s=2, sets=tuple(sets))


def map_clubs2_to_cliques(
    cover: ClubCover, lg: LabeledGraph, gp: Graph
) -> CliquePartition:
    """Project a 2-club cover of the image back to a clique partition of the
    source, assigning each source vertex to its first containing club."""
    source = source_graph_from_cover2_image(lg)
    if source != gp:
        raise ValueError("labeled graph was not produced from this source graph")
    if cover.club_s != 2:
        raise ValueError("cover must consist of 2-clubs")
    problems = validate_cover(lg.graph, cover)
    if problems:
        raise ValueError(f"cover is not valid for the image: {problems[0]}")
    raw_parts: list[list[int]] = []
    for club in cover.sets:
        chosen = sorted(lab.a for lab in (lg.label_of(v) for v in club) if lab.kind == "w")
        for u, v in combinations(chosen, 2):
            if v not in gp.neighbors(u):
                raise RuntimeError(
                    f"club projects to a non-clique ({u}, {v} not adjacent); "
                    "construction invariant broken"
                )
        raw_parts.append(chosen)
    assigned: set[int] = set()
    parts: list[VertexSet] = []
    for raw in raw_parts:
        fresh = [v for v in raw if v not in assigned]
        if fresh:
            parts.append(frozenset(fresh))
            assigned.update(fresh)
    if assigned != set(range(gp.n)):
        raise RuntimeError("cover left a source vertex unassigned")
    return CliquePartition(tuple(parts))


# ---------------------------------------------------------------------------
# Double-SAT -> two 3-clubs


def prepare_5dsat(f: CnfFormula) -> FiveDSatInstance:
    """Gate a formula for the two-3-club construction.

    Checks the double-SAT instance shape (which subsumes single-polarity
    normalization: a valid instance has no forcible variables) and rejects
    instances that some two-variable partial assignment already
    double-covers.
    """
    checked = validate_5dsat(f)
    if isinstance(checked, FiveDSatViolation):
        raise ValueError(f"not a valid double-SAT instance: {checked}")
    shortcut = has_two_variable_double_cover(checked)
    if shortcut is not None:
        raise ValueError(
            "instance is double-covered by fixing at most two variables "
            f"({shortcut}); the construction assumes no such shortcut"
        )
    return checked


def reduce_5dsat_to_cover3(inst: FiveDSatInstance) -> LabeledGraph:
    """Image of a double-SAT instance under the two-3-club construction.

    Vertex order is fixed: the seven-root block, then a (xt1, xt2, xf)
    triple per variable, then one vertex per clause, then the y block;
    3q + p + 10 vertices in total.
    """
    f = prepare_5dsat(inst.formula).formula
    q = f.num_vars
    p = len(f.clauses)
    labels: list[Label] = [Label(k) for k in ("r", "rp", "rt", "rpt", "rst", "rf", "rpf")]
    for i in range(1, q + 1):
        labels += [Label("xt1", i), Label("xt2", i), Label("xf", i)]
    labels += [Label("vc", j) for j in range(p)]
    labels += [Label("y"), Label("y1"), Label("y2")]

    at = {lab: v for v, lab in enumerate(labels)}
    r, rp, rt, rpt, rst, rf, rpf = (at[Label(k)] for k in ("r", "rp", "rt", "rpt", "rst", "rf", "rpf"))
    y, y1, y2 = at[Label("y")], at[Label("y1")], at[Label("y2")]
    xt1 = {i: at[Label("xt1", i)] for i in range(1, q + 1)}
    xt2 = {i: at[Label("xt2", i)] for i in range(1, q + 1)}
    xf = {i: at[Label("xf", i)] for i in range(1, q + 1)}
    vc = {j: at[Label("vc", j)] for j in range(p)}

    edges: list[tuple[int, int]] = [(r, rp), (rp, rt), (rp, rst), (rp, rf)]
    for i in range(1, q + 1):
        edges += [
            (rt, xt1[i]),
            (rf, xf[i]),
            (rpt, xt1[i]),
            (rpf, xf[i]),
            (xt1[i], xt2[i]),
            (rst, xt2[i]),
            (y1, xt2[i]),
        ]
    for i in range(1, q + 1):
        for j in range(1, q + 1):
            if i != j:
                edges.append((xt2[i], xf[j]))
    for j, clause in enumerate(f.clauses):
        for lit in clause:
            if lit.positive:
                edges.append((xt1[lit.variable], vc[j]))
            else:
                edges.append((xf[lit.variable], vc[j]))
        edges.append((vc[j], y))
    edges += [(y, y2), (y1, y2), (y1, rpt), (y1, rpf)]

    graph = Graph(len(labels), edges)
    return LabeledGraph(graph, tuple(labels), Provenance(DSAT5_COVER32, formula_digest(f)))


def formula_from_cover3_image(lg: LabeledGraph) -> CnfFormula:
    """Rebuild the source instance from a ``dsat5-cover32`` image: clause j
    contains variable i positively iff xt1:i meets vc:j, negatively iff
    xf:i meets vc:j.  Literals come back sorted by variable."""
    _require_construction(lg, DSAT5_COVER32)
    variables = sorted(lab.a for lab in lg.labels if lab.kind == "xt1")
    clause_ids = sorted(lab.a for lab in lg.labels if lab.kind == "vc")
    q = len(variables)
    if variables != list(range(1, q + 1)):
        raise ValueError("variable labels are not 1..q")
    if clause_ids != list(range(len(clause_ids))):
        raise ValueError("clause labels are not 0..p-1")
    clauses = []
    for j in clause_ids:
        cv = lg.vertex(Label("vc", j))
        lits = []
        for i in range(1, q + 1):
            if lg.vertex(Label("xt1", i)) in lg.graph.neighbors(cv):
                lits.append(Literal(i, True))
            if lg.vertex(Label("xf", i)) in lg.graph.neighbors(cv):
                lits.append(Literal(i, False))
        if len(lits) != 5:
            raise ValueError(f"clause vertex {j} touches {len(lits)} literals, expected 5")
        clauses.append(tuple(sorted(lits)))
    return CnfFormula(q, tuple(clauses))


def map_assignment_to_clubs3(
    inst: FiveDSatInstance, assignment: Assignment, lg: LabeledGraph
) -> ClubCover:
    """Turn a double-satisfying assignment into the two covering 3-clubs:
    the root-side club keeps the false variables' T-vertices and the true
    variables' F-vertices; the clause-side club takes the rest."""
    _require_construction(lg, DSAT5_COVER32)
    if lg.provenance.source_digest != formula_digest(inst.formula):
        raise ValueError("labeled graph was not produced from this instance")
    if not formula_double_satisfied(inst.formula, assignment):
        raise ValueError("assignment does not double-satisfy the instance")
    q = inst.formula.num_vars
    p = len(inst.formula.clauses)
    side1 = [lg.vertex(Label(k)) for k in ("r", "rp", "rt", "rst", "rf")]
    side2 = [lg.vertex(Label(k)) for k in ("rpt", "rpf", "y", "y1", "y2")]
    for i in range(1, q + 1):
        t_side = side2 if assignment[i] else side1
        f_side = side1 if assignment[i] else side2
        t_side.append(lg.vertex(Label("xt1", i)))
        t_side.append(lg.vertex(Label("xt2", i)))
        f_side.append(lg.vertex(Label("xf", i)))
    for j in range(p):
        side2.append(lg.vertex(Label("vc", j)))
    return ClubCover(club_s=3, sets=(frozenset(side1), frozenset(side2)))


def map_clubs3_to_assignment(cover: ClubCover, lg: LabeledGraph) -> Assignment:
    """Read a truth assignment off a two-3-club cover of the image: the club
    holding the y vertex decides, a variable being true exactly when its
    xt1 vertex sits there."""
    _require_construction(lg, DSAT5_COVER32)
    if cover.club_s != 3 or len(cover.sets) != 2:
        raise ValueError("expected a cover made of exactly two 3-clubs")
    problems = validate_cover(lg.graph, cover)
    if problems:
        raise ValueError(f"cover is not valid for the image: {problems[0]}")
    f = formula_from_cover3_image(lg)
    y_vertex = lg.vertex(Label("y"))
    holding = [k for k, club in enumerate(cover.sets) if y_vertex in club]
    if len(holding) != 1:
        raise RuntimeError(
            "the y vertex lies in both clubs; construction invariant broken"
        )
    clause_side = cover.sets[holding[0]]
    assignment: Assignment = {}
    for i in range(1, f.num_vars + 1):
        t_in = lg.vertex(Label("xt1", i)) in clause_side
        f_in = lg.vertex(Label("xf", i)) in clause_side
        if t_in == f_in:
            raise RuntimeError(
                f"variable {i} has both or neither side in the clause club; "
                "construction invariant broken"
            )
        assignment[i] = t_in
    if not formula_double_satisfied(f, assignment):
        raise RuntimeError(
            "extracted assignment fails to double-satisfy the source; "
            "construction invariant broken"
        )
    return assignment


# ---------------------------------------------------------------------------
# Clique partition -> 3-club cover (pendants)


def reduce_cp_to_cover3_pendant(gp: Graph) -> LabeledGraph:
    """Copy the source graph and hang a degree-one pendant on every vertex;
    2n vertices, originals first."""
    labels = tuple(
        [Label("u", i) for i in range(gp.n)] + [Label("pend", i) for i in range(gp.n)]
    )
    edges = list(gp.edges) + [(i, gp.n + i) for i in range(gp.n)]
    graph = Graph(2 * gp.n, edges)
    return LabeledGraph(graph, labels, Provenance(CP_COVER3_PENDANT, graph_digest(gp)))


def source_graph_from_pendant_image(lg: LabeledGraph) -> Graph:
    """Rebuild the source graph from a ``cp-cover3-pendant`` image."""
    _require_construction(lg, CP_COVER3_PENDANT)
    u_ids = sorted(lab.a for lab in lg.labels if lab.kind == "u")
    if any(lab.kind not in ("u", "pend") for lab in lg.labels):
        raise ValueError("unexpected label kind in a pendant image")
    n = len(u_ids)
    if u_ids != list(range(n)):
        raise ValueError("source vertex labels are not 0..n-1")
    at = {i: lg.vertex(Label("u", i)) for i in range(n)}
    back = {v: i for i, v in at.items()}
    edges = []
    for u, v in lg.graph.edges:
        if u in back and v in back:
            edges.append((back[u], back[v]))
    return Graph(n, edges)


def map_cliques_to_clubs3(partition: CliquePartition, lg: LabeledGraph) -> ClubCover:
    """Each clique of the source becomes a 3-club of the pendant image: the
    clique's vertices together with their pendants."""
    gp = source_graph_from_pendant_image(lg)
    problems = partition_violations(gp, partition)
    if problems:
        raise ValueError(f"partition does not fit the source graph: {problems[0]}")
    sets = []
    for part in partition.parts:
        members = set()
        for j in part:
            members.add(lg.vertex(Label("u", j)))
            members.add(lg.vertex(Label("pend", j)))
        sets.append(frozenset(members))
    return ClubCover(club_s=3, sets=tuple(sets))


def map_clubs3_to_cliques(
    cover: ClubCover, lg: LabeledGraph, gp: Graph
) -> CliquePartition:
    """Project a 3-club cover of the pendant image back to a clique
    partition of the source via pendant membership, first-club-wins."""
    source = source_graph_from_pendant_image(lg)
    if source != gp:
        raise ValueError("labeled graph was not produced from this source graph")
    if cover.club_s != 3:
        raise ValueError("cover must consist of 3-clubs")
    problems = validate_cover(lg.graph, cover)
    if problems:
        raise ValueError(f"cover is not valid for the image: {problems[0]}")
    raw_parts: list[list[int]] = []
    for club in cover.sets:
        chosen = sorted(
            lab.a for lab in (lg.label_of(v) for v in club) if lab.kind == "pend"
        )
        for u, v in combinations(chosen, 2):
            if v not in gp.neighbors(u):
                raise RuntimeError(
                    f"club projects to a non-clique ({u}, {v} not adjacent); "
                    "construction invariant broken"
                )
        raw_parts.append(chosen)
    assigned: set[int] = set()
    parts: list[VertexSet] = []
    for raw in raw_parts:
        fresh = [v for v in raw if v not in assigned]
        if fresh:
            parts.append(frozenset(fresh))
            assigned.update(fresh)
    if assigned != set(range(gp.n)):
        raise RuntimeError("cover left a source vertex unassigned")
    return CliquePartition(tuple(parts))


# ---------------------------------------------------------------------------
# Structural re-checks (used by tests and the check-lemmas command)


def check_cover2_image(lg: LabeledGraph) -> list[str]:
    """Re-derive the ``cp-cover2`` construction from the labels and check
    the image against it, including the distance law: source-adjacent
    vertex pairs sit at distance exactly 2, all others at 3 or more."""
    failures: list[str] = []
    try:
        gp = source_graph_from_cover2_image(lg)
    except ValueError as exc:
        return [str(exc)]
    expected = reduce_cp_to_cover2(gp)
    if expected.graph != lg.graph or expected.labels != lg.labels:
        failures.append("image does not match the construction rebuilt from labels")
    if lg.graph.n != gp.n + len(gp.edges):
        failures.append("vertex count is not |V| + |E| of the source")
    dist = all_pairs_distances(lg.graph)
    for i in range(gp.n):
        wi = lg.vertex(Label("w", i))
        for j in range(i + 1, gp.n):
            wj = lg.vertex(Label("w", j))
            d = dist[wi][wj]
            if j in gp.neighbors(i):
                if d != 2:
                    failures.append(f"adjacent source pair ({i},{j}) at distance {d}, expected 2")
            elif d < 3:
                failures.append(f"non-adjacent source pair ({i},{j}) at distance {d}, expected >= 3")
    return failures


def check_cover3_image(lg: LabeledGraph) -> list[str]:
    """Re-check the two-3-club construction: exact edge set, vertex count
    3q + p + 10, the far-apart root/clause distances, the radius-2 ball of
    the r vertex, and per-variable separation of xt1 and xf."""
    failures: list[str] = []
    try:
        f = formula_from_cover3_image(lg)
        expected = reduce_5dsat_to_cover3(FiveDSatInstance(f))
    except ValueError as exc:
        return [str(exc)]
    if expected.graph != lg.graph or expected.labels != lg.labels:
        failures.append("image does not match the construction rebuilt from labels")
    q = f.num_vars
    p = len(f.clauses)
    if lg.graph.n != 3 * q + p + 10:
        failures.append(f"vertex count {lg.graph.n} != 3q + p + 10 = {3 * q + p + 10}")
    dist = all_pairs_distances(lg.graph)
    r = lg.vertex(Label("r"))
    rp = lg.vertex(Label("rp"))
    y = lg.vertex(Label("y"))
    for name, a, b in (
        ("d(rp, y)", rp, y),
        ("d(r, y)", r, y),
        ("d(r, rpf)", r, lg.vertex(Label("rpf"))),
        ("d(r, rpt)", r, lg.vertex(Label("rpt"))),
    ):
        if dist[a][b] <= 3:
            failures.append(f"{name} = {dist[a][b]}, expected > 3")
    for j in range(p):
        cv = lg.vertex(Label("vc", j))
        if dist[r][cv] <= 3:
            failures.append(f"d(r, vc:{j + 1}) = {dist[r][cv]}, expected > 3")
    expected_ball = frozenset(
        lg.vertex(Label(k)) for k in ("r", "rp", "rst", "rt", "rf")
    )
    if ball(lg.graph, r, 2) != expected_ball:
        failures.append("radius-2 ball of r is not the five-vertex root block")
    for i in range(1, q + 1):
        ti = lg.vertex(Label("xt1", i))
        fi = lg.vertex(Label("xf", i))
        if dist[ti][fi] <= 3:
            failures.append(f"d(xt1:{i}, xf:{i}) = {dist[ti][fi]}, expected > 3")
    return failures


def check_pendant_image(lg: LabeledGraph) -> list[str]:
    """Re-check the pendant construction: exact edge set, 2n vertices, and
    every pendant of degree one hanging on its own anchor."""
    failures: list[str] = []
    try:
        gp = source_graph_from_pendant_image(lg)
    except ValueError as exc:
        return [str(exc)]
    expected = reduce_cp_to_cover3_pendant(gp)
    if expected.graph != lg.graph or expected.labels != lg.labels:
        failures.append("image does not match the construction rebuilt from labels")
    if lg.graph.n != 2 * gp.n:
        failures.append(f"vertex count {lg.graph.n} != 2 * {gp.n}")
    for i in range(gp.n):
        pend = lg.vertex(Label("pend", i))
        anchor = lg.vertex(Label("u", i))
        if lg.graph.neighbors(pend) != frozenset({anchor}):
            failures.append(f"pendant {i} is not a degree-one neighbor of its anchor")
    return failures
