"""Club covers: the greedy 2-club cover heuristic, cover validation, and the
closed-form bounds that accompany the greedy guarantee."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

from .graph import Graph, VertexSet, _bits, _mask_is_club, _mask_of, _spread_within


@dataclass(frozen=True)
class ClubCover:
    """A collection of vertex sets meant to cover a host graph with s-clubs.

    ``centers`` is present for greedy output, where set k is exactly the
    closed neighborhood of ``centers[k]``.  Feasibility against a concrete
    graph is checked by :func:`validate_cover`, not at construction.
    """

    club_s: int
    sets: tuple[VertexSet, ...]
    centers: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.club_s < 1:
            raise ValueError("club_s must be at least 1")
        if self.centers is not None and len(self.centers) != len(self.sets):
            raise ValueError("centers must pair up with sets one-to-one")

    def size(self) -> int:
        return len(self.sets)


@dataclass(frozen=True)
class CoverViolation:
    """One defect of a cover: an empty set, a set that is not an s-club
    (with a witnessing far pair), an out-of-range member, or an uncovered
    vertex.  Violations are data, not exceptions."""

    kind: str  # "empty-set" | "not-a-club" | "out-of-range" | "uncovered"
    set_index: int | None = None
    vertices: tuple[int, ...] = field(default_factory=tuple)

    def __str__(self) -> str:
        if self.kind == "empty-set":
            return f"set {self.set_index} is empty"
        if self.kind == "not-a-club":
            u, v = self.vertices
            return f"set {self.set_index} is not a club: {u} and {v} are too far apart"
        if self.kind == "out-of-range":
            return f"set {self.set_index} contains out-of-range vertex {self.vertices[0]}"
        return f"vertex {self.vertices[0]} is uncovered"


def _far_pair(masks: tuple[int, ...], mask: int, club_s: int) -> tuple[int, int] | None:
    """Lowest-indexed pair of ``mask`` members at induced distance > club_s."""
    for u in _bits(mask):
        reach = _spread_within(masks, 1 << u, mask, club_s)
        missing = mask & ~reach
        if missing:
            v = (missing & -missing).bit_length() - 1
            return u, v
    return None


def validate_cover(g: Graph, cover: ClubCover) -> list[CoverViolation]:
    """Every reason ``cover`` fails to be a feasible s-club cover of ``g``.

    An empty report means the cover is feasible: all sets are nonempty
    s-clubs of ``g`` and their union is the whole vertex set.
    """
    violations: list[CoverViolation] = []
    masks = g.adjacency_masks()
    covered = 0
    for k, members in enumerate(cover.sets):
        if not members:
            violations.append(CoverViolation("empty-set", k))
            continue
        bad = sorted(v for v in members if not (0 <= v < g.n))
        if bad:
            violations.append(CoverViolation("out-of-range", k, (bad[0],)))
            continue
        mask = _mask_of(members, g.n)
        covered |= mask
        pair = _far_pair(masks, mask, cover.club_s)
        if pair is not None:
            violations.append(CoverViolation("not-a-club", k, pair))
    uncovered = ((1 << g.n) - 1) & ~covered
    for v in _bits(uncovered):
        violations.append(CoverViolation("uncovered", vertices=(v,)))
    return violations


def greedy_club_cover(g: Graph) -> ClubCover:
    """Greedily cover ``g`` with closed neighborhoods (each a 2-club).

    Repeatedly picks the vertex, from all of V (a covered vertex may still
    be a center), whose closed neighborhood contains the most uncovered
    vertices; ties break toward the smallest vertex index so output is
    deterministic.  The chosen centers always form a dominating set.
    """
    if g.n == 0:
        warnings.warn("greedy cover of the empty graph is empty", stacklevel=2)
        return ClubCover(club_s=2, sets=(), centers=())
    closed = [g.closed_neighborhood_mask(v) for v in range(g.n)]
    uncovered = (1 << g.n) - 1
    sets: list[VertexSet] = []
    centers: list[int] = []
    while uncovered:
        best_v = 0
        best_gain = -1
        for v in range(g.n):
            gain = (closed[v] & uncovered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_v = v
        chosen = closed[best_v]
        sets.append(frozenset(_bits(chosen)))
        centers.append(best_v)
        uncovered &= ~chosen
    return ClubCover(club_s=2, sets=tuple(sets), centers=tuple(centers))


def cover_from_dominating_set(g: Graph, dominators: VertexSet | set[int]) -> ClubCover:
    """The 2-club cover made of the closed neighborhoods of a dominating set.

    Raises if ``dominators`` leaves some vertex undominated, naming it.
    """
    order = sorted(set(dominators))
    dominated = 0
    for v in order:
        dominated |= g.closed_neighborhood_mask(v)
    missing = ((1 << g.n) - 1) & ~dominated
    if missing:
        v = (missing & -missing).bit_length() - 1
        raise ValueError(f"vertex {v} is not dominated")
    sets = tuple(frozenset(_bits(g.closed_neighborhood_mask(v))) for v in order)
    return ClubCover(club_s=2, sets=sets, centers=tuple(order))


def greedy_factor_bound(n: int) -> float:
    """Guaranteed approximation ratio of the greedy 2-club cover on an
    n-vertex graph: ``2 * sqrt(n) * log2(n) ** 1.5``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return 2.0 * math.sqrt(n) * math.log2(n) ** 1.5


def dominating_set_size_bound(n: int) -> float:
    """Upper bound on the minimum dominating set of any 2-club on n
    vertices: ``1 + sqrt(n + ln n)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return 1.0 + math.sqrt(n + math.log(n))
