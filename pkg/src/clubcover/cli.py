"""Command-line entry points.

Graphs are DIMACS-like edge lists and formulas DIMACS CNF, both 1-indexed
on disk (vertex 1 in a file is vertex 0 in memory).  Decision subcommands
print a witness and exit 0, or print "no" and exit 1; malformed input,
unknown constructions, and provenance mismatches exit 2.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import bench as bench_mod
from . import io as fmt
from .cover import greedy_club_cover, validate_cover
from .exact import (
    ResourceLimitError,
    has_h_cover,
    min_clique_partition_exact,
    min_dominating_set_exact,
    min_s_club_cover_exact,
    double_sat_brute,
    sat_brute,
)
from .generators import gen_gnp, gen_planted_clubs, gen_random_3sat
from .reductions import (
    CP_COVER2,
    CP_COVER3_PENDANT,
    DSAT5_COVER32,
    check_cover2_image,
    check_cover3_image,
    check_pendant_image,
    formula_from_cover3_image,
    map_assignment_to_clubs3,
    map_cliques_to_clubs2,
    map_cliques_to_clubs3,
    map_clubs2_to_cliques,
    map_clubs3_to_assignment,
    map_clubs3_to_cliques,
    prepare_5dsat,
    reduce_cp_to_cover2,
    reduce_cp_to_cover3_pendant,
    reduce_5dsat_to_cover3,
    source_graph_from_cover2_image,
    source_graph_from_pendant_image,
)
from .sat import (
    FiveDSatInstance,
    lift_assignment,
    reduce_3sat_to_5dsat,
    restrict_assignment,
)

SAT3_DSAT5 = "sat3-dsat5"
GRAPH_CONSTRUCTIONS = (CP_COVER2, DSAT5_COVER32, CP_COVER3_PENDANT)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write_out(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _load_graph(path: str):
    return fmt.parse_graph(_read(path))


def _load_image(base: str):
    g = fmt.parse_graph(_read(base + ".graph"))
    return fmt.parse_labels(_read(base + ".labels"), g)


# ---------------------------------------------------------------------------
# Subcommand handlers


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    start = time.perf_counter()
    if args.algo == "greedy":
        if args.s != 2:
            raise ValueError("the greedy solver covers with 2-clubs only")
        cover = greedy_club_cover(g)
        optimum = None
    else:
        cover = min_s_club_cover_exact(g, args.s, max_n=args.max_n)
        optimum = cover.size()
    elapsed = time.perf_counter() - start
    _write_out(fmt.cover_to_json(cover), args.out)
    if args.report:
        report = bench_mod.ExperimentReport(
            instance=fmt.text_digest(fmt.emit_graph(g)),
            solver=args.algo,
            cover_size=cover.size(),
            exact_optimum=optimum,
            ratio=None if optimum is None else cover.size() / optimum,
            wall_time_s=elapsed,
            seed=args.seed,
        )
        with open(args.report, "a", encoding="utf-8") as handle:
            handle.write(report.to_json_line() + "\n")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    cover = fmt.cover_from_json(_read(args.cover))
    problems = validate_cover(g, cover)
    if problems:
        for problem in problems:
            print(problem)
        return 1
    print("ok")
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    if args.construction == SAT3_DSAT5:
        f3 = fmt.parse_cnf(_read(args.infile))
        instance, _ = reduce_3sat_to_5dsat(f3)
        _write_out(fmt.emit_cnf(instance.formula), args.out + ".cnf")
        print(f"wrote {args.out}.cnf")
        return 0
    if args.construction == CP_COVER2:
        lg = reduce_cp_to_cover2(_load_graph(args.infile))
    elif args.construction == CP_COVER3_PENDANT:
        lg = reduce_cp_to_cover3_pendant(_load_graph(args.infile))
    else:
        instance = prepare_5dsat(fmt.parse_cnf(_read(args.infile)))
        lg = reduce_5dsat_to_cover3(instance)
    _write_out(fmt.emit_graph(lg.graph), args.out + ".graph")
    _write_out(fmt.emit_labels(lg), args.out + ".labels")
    print(f"wrote {args.out}.graph and {args.out}.labels")
    return 0


def _cmd_map_solution(args: argparse.Namespace) -> int:
    construction = args.construction
    if construction == SAT3_DSAT5:
        if args.source is None:
            raise ValueError("map-solution with sat3-dsat5 needs --source")
        f3 = fmt.parse_cnf(_read(args.source))
        _, aux = reduce_3sat_to_5dsat(f3)
        assignment = fmt.assignment_from_json(_read(args.solution))
        if args.direction == "forward":
            result = lift_assignment(f3, assignment, aux)
        else:
            result = restrict_assignment(assignment, aux)
        _write_out(fmt.assignment_to_json(result), args.out)
        return 0
    if args.image is None:
        raise ValueError(f"map-solution with {construction} needs --image")
    lg = _load_image(args.image)
    if construction in (CP_COVER2, CP_COVER3_PENDANT):
        forward = map_cliques_to_clubs2 if construction == CP_COVER2 else map_cliques_to_clubs3
        backward = map_clubs2_to_cliques if construction == CP_COVER2 else map_clubs3_to_cliques
        rebuild = (
            source_graph_from_cover2_image
            if construction == CP_COVER2
            else source_graph_from_pendant_image
        )
        if args.direction == "forward":
            partition = fmt.partition_from_json(_read(args.solution))
            cover = forward(partition, lg)
            _write_out(fmt.cover_to_json(cover), args.out)
        else:
            cover = fmt.cover_from_json(_read(args.solution))
            gp = _load_graph(args.source) if args.source else rebuild(lg)
            partition = backward(cover, lg, gp)
            _write_out(fmt.partition_to_json(partition), args.out)
        return 0
    # dsat5-cover32
    if args.direction == "forward":
        assignment = fmt.assignment_from_json(_read(args.solution))
        if args.source:
            instance = prepare_5dsat(fmt.parse_cnf(_read(args.source)))
        else:
            instance = FiveDSatInstance(formula_from_cover3_image(lg))
        cover = map_assignment_to_clubs3(instance, assignment, lg)
        _write_out(fmt.cover_to_json(cover), args.out)
    else:
        cover = fmt.cover_from_json(_read(args.solution))
        assignment = map_clubs3_to_assignment(cover, lg)
        _write_out(fmt.assignment_to_json(assignment), args.out)
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    if args.problem in ("sat", "dsat"):
        f = fmt.parse_cnf(_read(args.infile))
        solve = sat_brute if args.problem == "sat" else double_sat_brute
        witness = solve(f, max_vars=args.max_vars)
        if witness is None:
            print("no")
            return 1
        _write_out(fmt.assignment_to_json(witness), args.out)
        return 0
    g = _load_graph(args.infile)
    if args.problem == "cover":
        if args.s is None:
            raise ValueError("--problem cover requires --s")
        if args.h is not None:
            witness = has_h_cover(g, args.s, args.h, max_n=args.max_n)
            if witness is None:
                print("no")
                return 1
            _write_out(fmt.cover_to_json(witness), args.out)
            return 0
        cover = min_s_club_cover_exact(g, args.s, max_n=args.max_n)
        _write_out(fmt.cover_to_json(cover), args.out)
        return 0
    if args.problem == "partition":
        partition = min_clique_partition_exact(g, max_n=args.max_n)
        _write_out(fmt.partition_to_json(partition), args.out)
        return 0
    dominators = min_dominating_set_exact(g, max_n=args.max_n)
    _write_out(
        '{"dominating_set":' + str(sorted(v + 1 for v in dominators)) + "}\n", args.out
    )
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    def need(option: str, value):
        if value is None:
            raise ValueError(f"gen --kind {args.kind} requires {option}")
        return value

    if args.kind == "gnp":
        g = gen_gnp(need("--n", args.n), need("--p", args.p), args.seed)
        _write_out(fmt.emit_graph(g), args.out)
    elif args.kind == "planted":
        g, certified = gen_planted_clubs(need("--n", args.n), need("--k", args.k), args.seed)
        _write_out(fmt.emit_graph(g), args.out)
        print(f"certified 2-club cover size: {certified}", file=sys.stderr)
    else:
        f = gen_random_3sat(need("--q", args.q), need("--clauses", args.clauses), args.seed)
        _write_out(fmt.emit_cnf(f), args.out)
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    n_values = [int(tok) for tok in args.n.split(",")]
    p_values = [float(tok) for tok in args.p.split(",")]
    reports = bench_mod.bench_gnp_sweep(
        n_values, p_values, args.count, args.seed, exact_max_n=args.exact_max_n
    )
    lines = "".join(report.to_json_line() + "\n" for report in reports)
    if args.out is None:
        sys.stdout.write(lines)
    else:
        with open(args.out, "a", encoding="utf-8") as handle:
            handle.write(lines)
    print(f"{len(reports)} instances benchmarked", file=sys.stderr)
    return 0


def _cmd_check_lemmas(args: argparse.Namespace) -> int:
    if args.image:
        lg = _load_image(args.image)
    elif args.infile:
        if args.construction == CP_COVER2:
            lg = reduce_cp_to_cover2(_load_graph(args.infile))
        elif args.construction == CP_COVER3_PENDANT:
            lg = reduce_cp_to_cover3_pendant(_load_graph(args.infile))
        else:
            lg = reduce_5dsat_to_cover3(prepare_5dsat(fmt.parse_cnf(_read(args.infile))))
    else:
        raise ValueError("check-lemmas needs --in (a source) or --image (a built instance)")
    if args.construction == CP_COVER2:
        failures = check_cover2_image(lg)
    elif args.construction == CP_COVER3_PENDANT:
        failures = check_pendant_image(lg)
    else:
        failures = check_cover3_image(lg)
    if failures:
        for failure in failures:
            print(f"FAIL: {failure}")
        return 1
    print(f"ok: all structural checks hold for {args.construction}")
    return 0


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clubcover",
        description=(
            "Cover graphs with few s-clubs: greedy and exact solvers, "
            "instance generators, and hardness-reduction constructions. "
            "Files are 1-indexed (DIMACS style); in-memory vertices are 0-indexed."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="cover a graph with s-clubs")
    p.add_argument("--graph", required=True)
    p.add_argument("--algo", choices=("greedy", "exact"), default="greedy")
    p.add_argument("--s", type=int, choices=(2, 3), default=2)
    p.add_argument("--out", default=None, help="cover JSON path (default stdout)")
    p.add_argument("--report", default=None, help="append a report JSON line here")
    p.add_argument("--seed", type=int, default=0, help="seed recorded in the report")
    p.add_argument("--max-n", type=int, default=None, help="exact-solver size cap override")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="validate a cover file against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--cover", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reduce", help="build a hardness-reduction instance")
    p.add_argument(
        "--construction",
        required=True,
        choices=(CP_COVER2, SAT3_DSAT5, DSAT5_COVER32, CP_COVER3_PENDANT),
    )
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True, help="output base path (suffixes added)")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("map-solution", help="map a solution across a construction")
    p.add_argument(
        "--construction",
        required=True,
        choices=(CP_COVER2, SAT3_DSAT5, DSAT5_COVER32, CP_COVER3_PENDANT),
    )
    p.add_argument("--direction", required=True, choices=("forward", "back"))
    p.add_argument("--image", default=None, help="base path of the built instance")
    p.add_argument("--source", default=None, help="source instance file")
    p.add_argument("--solution", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_map_solution)

    p = sub.add_parser("oracle", help="exact solvers for small instances")
    p.add_argument(
        "--problem", required=True, choices=("cover", "partition", "dominating", "sat", "dsat")
    )
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--h", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None, help="graph size cap override")
    p.add_argument("--max-vars", type=int, default=None, help="SAT variable cap override")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="seeded instance generators")
    p.add_argument("--kind", required=True, choices=("gnp", "planted", "3sat"))
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--clauses", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="sweep G(n,p) instances and report")
    p.add_argument("--n", required=True, help="comma-separated vertex counts")
    p.add_argument("--p", required=True, help="comma-separated edge probabilities")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--exact-max-n", type=int, default=None)
    p.add_argument("--out", default=None, help="report JSONL path (appended)")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("check-lemmas", help="re-check a construction's structure")
    p.add_argument(
        "--construction",
        required=True,
        choices=(CP_COVER2, DSAT5_COVER32, CP_COVER3_PENDANT),
    )
    p.add_argument("--in", dest="infile", default=None, help="source instance to build")
    p.add_argument("--image", default=None, help="base path of an already built instance")
    p.set_defaults(func=_cmd_check_lemmas)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (fmt.ParseError, ValueError, ResourceLimitError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
