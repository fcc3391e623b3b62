"""Exact brute-force oracles for small instances.

Everything here is provably optimal and therefore slow: club enumeration by
connected-subset scan, minimum club covers by branch and bound over
violated vertex pairs, clique partitions by complement coloring, dominating
sets by subset search, and (double-)satisfiability by exhaustive
backtracking.  These are the ground truths the fast paths are tested
against.

Instance sizes are capped; exceeding a cap raises ResourceLimitError rather
than silently truncating.  The graph cap can be overridden per call or via
the CLUBCOVER_MAX_EXACT_N environment variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations

from .cover import ClubCover
from .graph import (
    Graph,
    VertexSet,
    _bits,
    _mask_is_club,
    _spread_within,
    connected_components,
    induced_subgraph,
)
from .sat import Assignment, CnfFormula

MAX_EXACT_N = 22
MAX_SAT_VARS = 24
CAP_ENV_VAR = "CLUBCOVER_MAX_EXACT_N"


class ResourceLimitError(RuntimeError):
    """An exact oracle was asked to exceed its configured instance cap."""


def _graph_cap(override: int | None) -> int:
    if override is not None:
        return override
    env = os.environ.get(CAP_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {env!r}") from None
    return MAX_EXACT_N


def _require_graph_cap(n: int, override: int | None) -> None:
    cap = _graph_cap(override)
    if n > cap:
        raise ResourceLimitError(f"instance has {n} vertices, exact cap is {cap}")


def _require_sat_cap(num_vars: int, override: int | None) -> None:
    cap = MAX_SAT_VARS if override is None else override
    if num_vars > cap:
        raise ResourceLimitError(f"formula has {num_vars} variables, exact cap is {cap}")


# ---------------------------------------------------------------------------
# Clique partitions


@dataclass(frozen=True)
class CliquePartition:
    """Disjoint vertex sets, each inducing a complete subgraph, jointly
    exhausting the host graph's vertices."""

    parts: tuple[VertexSet, ...]

    def size(self) -> int:
        return len(self.parts)


def partition_violations(g: Graph, partition: CliquePartition) -> list[str]:
    """Reasons ``partition`` fails to be a clique partition of ``g``."""
    problems: list[str] = []
    seen = 0
    for k, part in enumerate(partition.parts):
        if not part:
            problems.append(f"part {k} is empty")
            continue
        mask = 0
        for v in part:
            if not (0 <= v < g.n):
                problems.append(f"part {k} contains out-of-range vertex {v}")
                break
            mask |= 1 << v
        else:
            if mask & seen:
                w = ((mask & seen) & -(mask & seen)).bit_length() - 1
                problems.append(f"vertex {w} appears in more than one part")
            seen |= mask
            members = sorted(part)
            for u, v in combinations(members, 2):
                if v not in g.neighbors(u):
                    problems.append(f"part {k} is not a clique: {u} and {v} not adjacent")
                    break
    missing = ((1 << g.n) - 1) & ~seen
    for v in _bits(missing):
        problems.append(f"vertex {v} is in no part")
    return problems


# ---------------------------------------------------------------------------
# s-club enumeration


def _connected_subsets(masks: tuple[int, ...], n: int) -> list[int]:
    """All nonempty connected vertex subsets, one bitmask each.

    Standard minimum-vertex anchored growth: every subset is produced
    exactly once, anchored at its smallest member.
    """
    out: list[int] = []
    full = (1 << n) - 1

    def rec(s: int, ext: int, banned: int, allowed: int) -> None:
        out.append(s)
        while ext:
            b = ext & -ext
            ext ^= b
            u = b.bit_length() - 1
            grow = masks[u] & allowed & ~s & ~banned & ~ext
            rec(s | b, ext | grow, banned | b, allowed)
            banned |= b

    for v in range(n):
        allowed = full & ~((1 << (v + 1)) - 1)
        rec(1 << v, masks[v] & allowed, 0, allowed)
    return out


def enumerate_s_clubs(
    g: Graph, club_s: int, maximal_only: bool = False, max_n: int | None = None
) -> list[VertexSet]:
    """All nonempty vertex sets inducing an s-club, optionally only those to
    which no single vertex can be added while remaining an s-club."""
    _require_graph_cap(g.n, max_n)
    if club_s < 1:
        raise ValueError("club_s must be at least 1")
    masks = g.adjacency_masks()
    clubs = [m for m in _connected_subsets(masks, g.n) if _mask_is_club(masks, m, club_s)]
    if maximal_only:
        club_set = set(clubs)
        clubs = [
            m
            for m in clubs
            if not any(
                (m | (1 << u)) in club_set for u in range(g.n) if not m & (1 << u)
            )
        ]
    result = [frozenset(_bits(m)) for m in clubs]
    result.sort(key=sorted)
    return result


# ---------------------------------------------------------------------------
# Minimum s-club cover


def _far_pair_finder(masks: tuple[int, ...], club_s: int):
    """Cached search for a lowest-indexed member pair at induced distance
    greater than club_s inside a candidate mask."""
    cache: dict[int, tuple[int, int] | None] = {}

    def far_pair(mask: int) -> tuple[int, int] | None:
        hit = cache.get(mask, False)
        if hit is not False:
            return hit
        found = None
        for u in _bits(mask):
            reach = _spread_within(masks, 1 << u, mask, club_s)
            missing = mask & ~reach
            if missing:
                v = (missing & -missing).bit_length() - 1
                found = (u, v)
                break
        cache[mask] = found
        return found

    return far_pair


def _cover_search(
    masks: tuple[int, ...], n: int, club_s: int, h: int
) -> list[int] | None:
    """Find up to ``h`` s-club masks jointly covering ``0..n-1``, or None.

    Branch and bound: every candidate starts as the full vertex set; a pair
    at induced distance > s inside a candidate forces one endpoint out of
    it, and a vertex may only leave a candidate while another still holds
    it.  Sound and complete because induced distances only grow as vertices
    are removed.
    """
    far_pair = _far_pair_finder(masks, club_s)
    seen: set[tuple[int, ...]] = set()

    def elsewhere(cands: list[int], k: int, v: int) -> bool:
        bit = 1 << v
        return any(i != k and cands[i] & bit for i in range(len(cands)))

    def search(cands: list[int]) -> list[int] | None:
        while True:
            key = tuple(sorted(cands))
            if key in seen:
                return None
            seen.add(key)
            violation = None
            for k, mask in enumerate(cands):
                pair = far_pair(mask)
                if pair is not None:
                    violation = (k, pair)
                    break
            if violation is None:
                return list(cands)
            k, (u, v) = violation
            can_drop_u = elsewhere(cands, k, u)
            can_drop_v = elsewhere(cands, k, v)
            if not can_drop_u and not can_drop_v:
                return None
            if can_drop_u and can_drop_v:
                break
            cands[k] &= ~(1 << (u if can_drop_u else v))
        for drop in (u, v):
            child = list(cands)
            child[k] &= ~(1 << drop)
            result = search(child)
            if result is not None:
                return result
        return None

    full = (1 << n) - 1
    return search([full] * h)


def _conflict_lower_bound(masks: tuple[int, ...], n: int, club_s: int) -> int:
    """Greedy clique in the conflict graph (vertex pairs at distance beyond
    club_s); no s-club holds two conflicting vertices, so its size bounds
    every cover from below."""
    full = (1 << n) - 1
    conflict = []
    for u in range(n):
        reach = _spread_within(masks, 1 << u, full, club_s)
        conflict.append(full & ~reach)
    order = sorted(range(n), key=lambda v: (-conflict[v].bit_count(), v))
    clique = 0
    size = 0
    for v in order:
        if clique & ~conflict[v]:
            continue
        clique |= 1 << v
        size += 1
    return max(size, 1)


def min_s_club_cover_exact(
    g: Graph, club_s: int, max_n: int | None = None
) -> ClubCover:
    """A minimum-cardinality s-club cover, solved exactly per connected
    component (clubs are connected, so components are independent)."""
    _require_graph_cap(g.n, max_n)
    if club_s < 1:
        raise ValueError("club_s must be at least 1")
    if g.n == 0:
        return ClubCover(club_s=club_s, sets=())
    sets: list[VertexSet] = []
    for comp in connected_components(g):
        sub, relabel = induced_subgraph(g, comp)
        back = {new: old for old, new in relabel.items()}
        submasks = sub.adjacency_masks()
        solution = None
        for h in range(_conflict_lower_bound(submasks, sub.n, club_s), sub.n + 1):
            solution = _cover_search(submasks, sub.n, club_s, h)
            if solution is not None:
                break
        assert solution is not None  # h = n (singletons) is always feasible
        for mask in solution:
            if mask:
                sets.append(frozenset(back[b] for b in _bits(mask)))
    sets.sort(key=sorted)
    return ClubCover(club_s=club_s, sets=tuple(sets))


def has_h_cover(
    g: Graph, club_s: int, h: int, max_n: int | None = None
) -> ClubCover | None:
    """A witness cover with at most ``h`` s-clubs, or None when none exists."""
    if h < 1:
        raise ValueError("h must be at least 1")
    cover = min_s_club_cover_exact(g, club_s, max_n=max_n)
    return cover if cover.size() <= h else None


# ---------------------------------------------------------------------------
# Minimum clique partition (coloring of the complement)


def min_clique_partition_exact(g: Graph, max_n: int | None = None) -> CliquePartition:
    """A minimum partition of the vertices into cliques, found as an optimal
    proper coloring of the complement graph."""
    _require_graph_cap(g.n, max_n)
    n = g.n
    if n == 0:
        return CliquePartition(())
    full = (1 << n) - 1
    adj = g.adjacency_masks()
    comp_adj = tuple((full & ~adj[v]) & ~(1 << v) for v in range(n))
    order = sorted(range(n), key=lambda v: (-comp_adj[v].bit_count(), v))
    colors = [-1] * n

    def assign(idx: int, used: int, k: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        forbidden = 0
        for w in _bits(comp_adj[v]):
            c = colors[w]
            if c >= 0:
                forbidden |= 1 << c
        # new colors are introduced in order, killing color symmetry
        for c in range(min(k, used + 1)):
            if forbidden & (1 << c):
                continue
            colors[v] = c
            if assign(idx + 1, max(used, c + 1), k):
                return True
            colors[v] = -1
        return False

    for k in range(1, n + 1):
        for i in range(n):
            colors[i] = -1
        if assign(0, 0, k):
            classes: list[list[int]] = [[] for _ in range(k)]
            for v in range(n):
                classes[colors[v]].append(v)
            parts = [frozenset(c) for c in classes if c]
            parts.sort(key=sorted)
            return CliquePartition(tuple(parts))
    raise AssertionError("n singleton cliques always partition the graph")


# ---------------------------------------------------------------------------
# Minimum dominating set


def min_dominating_set_exact(g: Graph, max_n: int | None = None) -> VertexSet:
    """A minimum vertex set whose closed neighborhoods cover the graph."""
    _require_graph_cap(g.n, max_n)
    if g.n == 0:
        return frozenset()
    closed = [g.closed_neighborhood_mask(v) for v in range(g.n)]
    full = (1 << g.n) - 1
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            reach = 0
            for v in combo:
                reach |= closed[v]
            if reach == full:
                return frozenset(combo)
    raise AssertionError("the full vertex set always dominates")


# ---------------------------------------------------------------------------
# Satisfiability search


def sat_brute(f: CnfFormula, max_vars: int | None = None) -> Assignment | None:
    """A satisfying assignment found by exhaustive backtracking, or None.

    Branches variables in index order, abandoning any branch with a fully
    falsified clause; the first witness in that order is returned, so output
    is deterministic.
    """
    _require_sat_cap(f.num_vars, max_vars)
    values: Assignment = {}
    q = f.num_vars

    def state() -> str:
        all_sat = True
        for clause in f.clauses:
            sat = False
            has_open = False
            for lit in clause:
                val = values.get(lit.variable)
                if val is None:
                    has_open = True
                elif val == lit.positive:
                    sat = True
                    break
            if sat:
                continue
            if not has_open:
                return "dead"
            all_sat = False
        return "all" if all_sat else "open"

    def search(next_var: int) -> bool:
        st = state()
        if st == "dead":
            return False
        if st == "all":
            for v in range(next_var, q + 1):
                values.setdefault(v, False)
            return True
        for val in (True, False):
            values[next_var] = val
            if search(next_var + 1):
                return True
            del values[next_var]
        return False

    return dict(values) if search(1) else None


def double_sat_brute(f: CnfFormula, max_vars: int | None = None) -> Assignment | None:
    """An assignment double-satisfying every clause, found by exhaustive
    backtracking, or None.

    A branch dies as soon as some clause can no longer gain a true positive
    literal or a false negative literal.
    """
    _require_sat_cap(f.num_vars, max_vars)
    values: Assignment = {}
    q = f.num_vars

    def state() -> str:
        all_done = True
        for clause in f.clauses:
            pos_sat = pos_open = neg_sat = neg_open = False
            for lit in clause:
                val = values.get(lit.variable)
                if lit.positive:
                    if val is None:
                        pos_open = True
                    elif val:
                        pos_sat = True
                else:
                    if val is None:
                        neg_open = True
                    elif not val:
                        neg_sat = True
            if (not pos_sat and not pos_open) or (not neg_sat and not neg_open):
                return "dead"
            if not (pos_sat and neg_sat):
                all_done = False
        return "all" if all_done else "open"

    def search(next_var: int) -> bool:
        st = state()
        if st == "dead":
            return False
        if st == "all":
            for v in range(next_var, q + 1):
                values.setdefault(v, False)
            return True
        for val in (True, False):
            values[next_var] = val
            if search(next_var + 1):
                return True
            del values[next_var]
        return False

    return dict(values) if search(1) else None
