"""Benchmark reports: one JSON line per solved instance."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from .cover import greedy_club_cover, validate_cover
from .exact import min_s_club_cover_exact
from .generators import RNG_NAME, gen_gnp
from .graph import Graph
from .io import emit_graph, text_digest


@dataclass(frozen=True)
class ExperimentReport:
    """One solver run on one instance.  ``ratio`` is present exactly when
    the exact optimum is, and is never below 1."""

    instance: str
    solver: str
    cover_size: int
    exact_optimum: int | None
    ratio: float | None
    wall_time_s: float
    seed: int
    rng: str = RNG_NAME

    def __post_init__(self) -> None:
        if (self.ratio is None) != (self.exact_optimum is None):
            raise ValueError("ratio must accompany the exact optimum")
        if self.ratio is not None and self.ratio < 1.0:
            raise ValueError("ratio below 1 means the 'exact' optimum was not optimal")

    def to_json_line(self) -> str:
        payload = {
            "instance": self.instance,
            "solver": self.solver,
            "cover_size": self.cover_size,
            "exact_optimum": self.exact_optimum,
            "ratio": self.ratio,
            "wall_time_s": self.wall_time_s,
            "seed": self.seed,
            "rng": self.rng,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def run_instance(g: Graph, seed: int, exact_max_n: int | None = None) -> ExperimentReport:
    """Greedy-solve one graph; also solve exactly when it is small enough."""
    digest = text_digest(emit_graph(g))
    start = time.perf_counter()
    cover = greedy_club_cover(g)
    elapsed = time.perf_counter() - start
    if validate_cover(g, cover):
        raise RuntimeError("greedy produced an invalid cover")
    optimum = None
    ratio = None
    if exact_max_n is not None and g.n <= exact_max_n:
        optimum = min_s_club_cover_exact(g, 2, max_n=exact_max_n).size()
        ratio = cover.size() / optimum if optimum else 1.0
    return ExperimentReport(
        instance=digest,
        solver="greedy",
        cover_size=cover.size(),
        exact_optimum=optimum,
        ratio=ratio,
        wall_time_s=elapsed,
        seed=seed,
    )


def bench_gnp_sweep(
    n_values: list[int],
    p_values: list[float],
    count: int,
    seed: int,
    exact_max_n: int | None = None,
) -> list[ExperimentReport]:
    """Seeded sweep over G(n, p) instances; instance seeds derive from the
    base seed so the whole sweep is reproducible."""
    reports = []
    index = 0
    for n in n_values:
        for p in p_values:
            for _ in range(count):
                instance_seed = seed + index
                index += 1
                g = gen_gnp(n, p, instance_seed)
                reports.append(run_instance(g, instance_seed, exact_max_n))
    return reports
