"""Seeded instance generators.

All generators draw from ``random.Random`` (Mersenne Twister) with an
explicit seed, so the same arguments always reproduce the same instance
within this implementation.  The generator name is recorded in benchmark
reports as ``mt19937``.
"""

from __future__ import annotations

import random

from .graph import Graph
from .sat import CnfFormula, FiveDSatInstance, Literal, has_two_variable_double_cover, validate_5dsat, FiveDSatViolation

RNG_NAME = "mt19937"


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p): every vertex pair becomes an edge independently
    with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def gen_planted_clubs(n: int, k: int, seed: int) -> tuple[Graph, int]:
    """A graph built as k closed-neighborhood clusters covering all
    vertices, certifying that a 2-club cover of size k exists.

    Every non-center vertex is attached to one of k centers; extra edges
    inside a cluster are sprinkled in but never break the certificate
    (each cluster stays inside its center's closed neighborhood).  With
    k = n there are no non-centers and the graph is edgeless.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    rng = random.Random(seed)
    centers = sorted(rng.sample(range(n), k))
    cluster: dict[int, list[int]] = {c: [c] for c in centers}
    edges: list[tuple[int, int]] = []
    for v in range(n):
        if v in cluster:
            continue
        home = rng.choice(centers)
        cluster[home].append(v)
        edges.append((home, v))
    for members in cluster.values():
        satellites = members[1:]
        for i in range(len(satellites)):
            for j in range(i + 1, len(satellites)):
                if rng.random() < 0.3:
                    edges.append((satellites[i], satellites[j]))
    return Graph(n, edges), k


def gen_random_3sat(q: int, num_clauses: int, seed: int) -> CnfFormula:
    """Random 3-CNF: each clause picks three distinct variables and random
    polarities."""
    if q < 3:
        raise ValueError("need at least 3 variables")
    if num_clauses < 0:
        raise ValueError("clause count must be non-negative")
    rng = random.Random(seed)
    clauses = []
    for _ in range(num_clauses):
        variables = sorted(rng.sample(range(1, q + 1), 3))
        clauses.append(tuple(Literal(v, rng.random() < 0.5) for v in variables))
    return CnfFormula(q, tuple(clauses))


def gen_valid_5dsat(
    q: int, num_clauses: int, seed: int, max_tries: int = 10_000
) -> FiveDSatInstance:
    """A random five-literal double-SAT instance passing all construction
    gates, found by rejection sampling.

    Needs q >= 5 (five distinct variables per clause) and enough literal
    slots for every variable to occur with both polarities, i.e.
    5 * num_clauses >= 2 * q; in particular a single clause is never
    enough.
    """
    if q < 5:
        raise ValueError("need at least 5 variables for five-literal clauses")
    if 5 * num_clauses < 2 * q:
        raise ValueError(
            f"{num_clauses} clauses give {5 * num_clauses} literal slots, but "
            f"{q} variables need {2 * q} to occur with both polarities"
        )
    rng = random.Random(seed)
    for _ in range(max_tries):
        clauses = []
        for _ in range(num_clauses):
            variables = sorted(rng.sample(range(1, q + 1), 5))
            signs = [rng.random() < 0.5 for _ in range(5)]
            if all(signs) or not any(signs):
                signs[rng.randrange(5)] = not signs[0]
            clauses.append(
                tuple(Literal(v, s) for v, s in zip(variables, signs))
            )
        formula = CnfFormula(q, tuple(clauses))
        checked = validate_5dsat(formula)
        if isinstance(checked, FiveDSatViolation):
            continue
        if has_two_variable_double_cover(checked) is not None:
            continue
        return checked
    raise RuntimeError(
        f"no gate-passing instance with q={q}, p={num_clauses} found "
        f"in {max_tries} samples"
    )
