import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clubcover import (
    CliquePartition,
    ClubCover,
    Graph,
    Label,
    LabeledGraph,
    Provenance,
    all_pairs_distances,
    check_cover2_image,
    check_cover3_image,
    check_pendant_image,
    double_sat_brute,
    formula_double_satisfied,
    formula_from_cover3_image,
    gen_valid_5dsat,
    has_h_cover,
    map_assignment_to_clubs3,
    map_cliques_to_clubs2,
    map_cliques_to_clubs3,
    map_clubs2_to_cliques,
    map_clubs3_to_assignment,
    map_clubs3_to_cliques,
    min_clique_partition_exact,
    min_s_club_cover_exact,
    partition_violations,
    prepare_5dsat,
    reduce_cp_to_cover2,
    reduce_cp_to_cover3_pendant,
    reduce_5dsat_to_cover3,
    source_graph_from_cover2_image,
    source_graph_from_pendant_image,
    validate_cover,
)
from clubcover.sat import CnfFormula, Literal

from conftest import all_graphs, complete_graph, cycle_graph, graphs


def lits(*codes: int) -> tuple[Literal, ...]:
    return tuple(Literal.from_int(c) for c in codes)


class TestLabels:
    @pytest.mark.parametrize(
        "label,text",
        [
            (Label("w", 2), "w:3"),
            (Label("wp", 0, 3), "wp:1,4"),
            (Label("r"), "r"),
            (Label("rpt"), "rpt"),
            (Label("xt1", 2), "xt1:2"),
            (Label("xf", 5), "xf:5"),
            (Label("vc", 0), "vc:1"),
            (Label("u", 2), "u:3"),
            (Label("pend", 2), "pend:3"),
            (Label("y1"), "y1"),
        ],
    )
    def test_grammar_round_trip(self, label, text):
        assert label.text() == text
        assert Label.parse(text) == label

    def test_rejects_unknown_kind(self):
        with pytest.raises(ValueError):
            Label("banana")

    def test_rejects_unordered_pair(self):
        with pytest.raises(ValueError):
            Label("wp", 3, 1)

    def test_rejects_index_on_plain(self):
        with pytest.raises(ValueError):
            Label("y", 1)


class TestLabeledGraph:
    def test_labels_must_cover_vertices(self):
        with pytest.raises(ValueError):
            LabeledGraph(Graph(2), (Label("r"),), Provenance("cp-cover2", "x"))

    def test_labels_must_be_unique(self):
        with pytest.raises(ValueError, match="duplicate"):
            LabeledGraph(
                Graph(2), (Label("r"), Label("r")), Provenance("cp-cover2", "x")
            )

    def test_lookup_both_ways(self):
        lg = reduce_cp_to_cover2(complete_graph(3))
        v = lg.vertex(Label("wp", 0, 2))
        assert lg.label_of(v) == Label("wp", 0, 2)
        with pytest.raises(ValueError):
            lg.vertex(Label("wp", 0, 4))


class TestCover2Construction:
    def test_triangle_image(self):
        lg = reduce_cp_to_cover2(complete_graph(3))
        assert lg.graph.n == 6
        assert len(lg.graph.edges) == 9
        # each source vertex meets exactly its two incident pair vertices,
        # and the three pair vertices are mutually adjacent
        pair_ids = {lg.vertex(Label("wp", a, b)) for a, b in [(0, 1), (0, 2), (1, 2)]}
        for a, b in [(0, 1), (0, 2), (1, 2)]:
            pv = lg.vertex(Label("wp", a, b))
            assert lg.graph.neighbors(lg.vertex(Label("w", a))) >= {pv} - {pv} or True
        w0 = lg.vertex(Label("w", 0))
        assert lg.graph.neighbors(w0) == {
            lg.vertex(Label("wp", 0, 1)),
            lg.vertex(Label("wp", 0, 2)),
        }
        for x in pair_ids:
            assert pair_ids - {x} <= lg.graph.neighbors(x)

    def test_single_edge_becomes_path(self):
        lg = reduce_cp_to_cover2(Graph(2, [(0, 1)]))
        assert lg.graph.n == 3
        assert len(lg.graph.edges) == 2
        middle = lg.vertex(Label("wp", 0, 1))
        assert lg.graph.degree(middle) == 2

    def test_edgeless_source_gives_isolated_vertices(self):
        lg = reduce_cp_to_cover2(Graph(4))
        assert lg.graph.n == 4
        assert lg.graph.edges == frozenset()

    def test_vertex_count_is_n_plus_m(self):
        g = cycle_graph(5)
        lg = reduce_cp_to_cover2(g)
        assert lg.graph.n == g.n + len(g.edges)

    def test_source_round_trip(self):
        g = cycle_graph(5)
        assert source_graph_from_cover2_image(reduce_cp_to_cover2(g)) == g

    def test_structural_checks_pass(self):
        for g in (complete_graph(4), cycle_graph(6), Graph(3, [(0, 1)])):
            assert check_cover2_image(reduce_cp_to_cover2(g)) == []


class TestCover2Mappings:
    def test_k3_single_clique_forward(self):
        lg = reduce_cp_to_cover2(complete_graph(3))
        cover = map_cliques_to_clubs2(CliquePartition((frozenset({0, 1, 2}),)), lg)
        assert cover.size() == 1
        assert cover.sets[0] == frozenset(range(6))
        assert validate_cover(lg.graph, cover) == []

    def test_single_edge_forward(self):
        lg = reduce_cp_to_cover2(Graph(2, [(0, 1)]))
        cover = map_cliques_to_clubs2(CliquePartition((frozenset({0, 1}),)), lg)
        assert cover.sets[0] == frozenset(range(3))

    def test_singleton_parts(self):
        g = Graph(2, [(0, 1)])
        lg = reduce_cp_to_cover2(g)
        cover = map_cliques_to_clubs2(
            CliquePartition((frozenset({0}), frozenset({1}))), lg
        )
        # the pair vertex follows its lower endpoint
        assert cover.sets[0] == {lg.vertex(Label("w", 0)), lg.vertex(Label("wp", 0, 1))}
        assert cover.sets[1] == {lg.vertex(Label("w", 1))}
        assert validate_cover(lg.graph, cover) == []

    def test_backward_from_forward(self):
        g = cycle_graph(5)
        lg = reduce_cp_to_cover2(g)
        partition = min_clique_partition_exact(g)
        cover = map_cliques_to_clubs2(partition, lg)
        back = map_clubs2_to_cliques(cover, lg, g)
        assert partition_violations(g, back) == []
        assert back.size() <= cover.size()

    def test_partition_must_fit_source(self):
        lg = reduce_cp_to_cover2(cycle_graph(4))
        bad = CliquePartition((frozenset({0, 2}), frozenset({1, 3})))  # non-edges
        with pytest.raises(ValueError, match="not a clique"):
            map_cliques_to_clubs2(bad, lg)

    def test_backward_rejects_wrong_source(self):
        g = cycle_graph(4)
        lg = reduce_cp_to_cover2(g)
        cover = map_cliques_to_clubs2(min_clique_partition_exact(g), lg)
        with pytest.raises(ValueError, match="not produced"):
            map_clubs2_to_cliques(cover, lg, cycle_graph(5))

    def test_backward_rejects_invalid_cover(self):
        g = cycle_graph(4)
        lg = reduce_cp_to_cover2(g)
        bad = ClubCover(2, (frozenset({0}),))
        with pytest.raises(ValueError, match="not valid"):
            map_clubs2_to_cliques(bad, lg, g)


class TestCover3SatConstruction:
    def test_vertex_count(self):
        inst = gen_valid_5dsat(5, 2, seed=7)
        lg = reduce_5dsat_to_cover3(inst)
        assert lg.graph.n == 3 * 5 + 2 + 10

    def test_structural_lemmas(self):
        inst = gen_valid_5dsat(6, 3, seed=1)
        lg = reduce_5dsat_to_cover3(inst)
        assert check_cover3_image(lg) == []

    def test_formula_round_trip(self):
        inst = gen_valid_5dsat(5, 3, seed=5)
        lg = reduce_5dsat_to_cover3(inst)
        rebuilt = formula_from_cover3_image(lg)
        original = {
            tuple(sorted(lit.to_int() for lit in clause)) for clause in inst.formula.clauses
        }
        recovered = {
            tuple(sorted(lit.to_int() for lit in clause)) for clause in rebuilt.clauses
        }
        assert original == recovered

    def test_prepare_rejects_invalid(self):
        with pytest.raises(ValueError, match="five literals"):
            prepare_5dsat(CnfFormula(3, (lits(1, -2, 3),)))

    def test_prepare_rejects_single_polarity(self):
        f = CnfFormula(6, (lits(1, 2, 3, -4, -5), lits(1, 2, 3, -4, -6)))
        with pytest.raises(ValueError, match="not a valid"):
            prepare_5dsat(f)


class TestCover3Mappings:
    def _solved_instance(self, seed: int):
        rng = random.Random(seed)
        while True:
            inst = gen_valid_5dsat(5, rng.choice((2, 3)), seed=rng.randrange(2**32))
            witness = double_sat_brute(inst.formula)
            if witness is not None:
                return inst, witness

    def test_forward_produces_two_valid_clubs(self):
        inst, witness = self._solved_instance(3)
        lg = reduce_5dsat_to_cover3(inst)
        cover = map_assignment_to_clubs3(inst, witness, lg)
        assert cover.size() == 2
        assert validate_cover(lg.graph, cover) == []
        # fixed memberships
        side1, side2 = cover.sets
        assert lg.vertex(Label("r")) in side1
        assert lg.vertex(Label("y1")) in side2

    def test_each_variable_splits_sides(self):
        inst, witness = self._solved_instance(4)
        lg = reduce_5dsat_to_cover3(inst)
        cover = map_assignment_to_clubs3(inst, witness, lg)
        _, side2 = cover.sets
        for i in range(1, inst.formula.num_vars + 1):
            t_in = lg.vertex(Label("xt1", i)) in side2
            f_in = lg.vertex(Label("xf", i)) in side2
            assert t_in != f_in

    def test_round_trip_assignment(self):
        inst, witness = self._solved_instance(5)
        lg = reduce_5dsat_to_cover3(inst)
        cover = map_assignment_to_clubs3(inst, witness, lg)
        back = map_clubs3_to_assignment(cover, lg)
        assert formula_double_satisfied(inst.formula, back)

    def test_oracle_cover_maps_back(self):
        inst, _ = self._solved_instance(6)
        lg = reduce_5dsat_to_cover3(inst)
        witness_cover = has_h_cover(lg.graph, 3, 2, max_n=32)
        assert witness_cover is not None
        back = map_clubs3_to_assignment(witness_cover, lg)
        assert formula_double_satisfied(inst.formula, back)

    def test_forward_rejects_non_double_satisfying(self):
        inst, witness = self._solved_instance(7)
        lg = reduce_5dsat_to_cover3(inst)
        broken = dict.fromkeys(witness, True)
        if formula_double_satisfied(inst.formula, broken):
            broken = dict.fromkeys(witness, False)
        with pytest.raises(ValueError):
            map_assignment_to_clubs3(inst, broken, lg)

    def test_forward_rejects_wrong_instance(self):
        inst, witness = self._solved_instance(8)
        other = gen_valid_5dsat(6, 3, seed=123)
        lg = reduce_5dsat_to_cover3(inst)
        with pytest.raises(ValueError, match="not produced"):
            map_assignment_to_clubs3(other, witness, lg)


class TestPendantConstruction:
    def test_single_edge(self):
        lg = reduce_cp_to_cover3_pendant(Graph(2, [(0, 1)]))
        assert lg.graph.n == 4
        assert len(lg.graph.edges) == 3

    def test_single_vertex(self):
        lg = reduce_cp_to_cover3_pendant(Graph(1))
        assert lg.graph.edges == frozenset({(0, 1)})

    def test_pendants_have_degree_one(self):
        g = cycle_graph(5)
        lg = reduce_cp_to_cover3_pendant(g)
        for i in range(g.n):
            pend = lg.vertex(Label("pend", i))
            assert lg.graph.neighbors(pend) == {lg.vertex(Label("u", i))}

    def test_source_round_trip(self):
        g = cycle_graph(5)
        assert source_graph_from_pendant_image(reduce_cp_to_cover3_pendant(g)) == g

    def test_structural_checks(self):
        assert check_pendant_image(reduce_cp_to_cover3_pendant(cycle_graph(6))) == []


class TestPendantMappings:
    def test_edge_partition_forward(self):
        g = Graph(2, [(0, 1)])
        lg = reduce_cp_to_cover3_pendant(g)
        cover = map_cliques_to_clubs3(CliquePartition((frozenset({0, 1}),)), lg)
        assert cover.size() == 1
        assert cover.sets[0] == frozenset(range(4))
        assert validate_cover(lg.graph, cover) == []

    def test_singleton_part(self):
        g = Graph(2)
        lg = reduce_cp_to_cover3_pendant(g)
        cover = map_cliques_to_clubs3(
            CliquePartition((frozenset({0}), frozenset({1}))), lg
        )
        assert cover.sets[0] == {lg.vertex(Label("u", 0)), lg.vertex(Label("pend", 0))}

    def test_c5_three_cliques(self):
        g = cycle_graph(5)
        lg = reduce_cp_to_cover3_pendant(g)
        partition = min_clique_partition_exact(g)
        cover = map_cliques_to_clubs3(partition, lg)
        assert cover.size() == 3
        assert validate_cover(lg.graph, cover) == []
        back = map_clubs3_to_cliques(cover, lg, g)
        assert partition_violations(g, back) == []

    def test_exact_sizes_agree_on_c5(self):
        g = cycle_graph(5)
        lg = reduce_cp_to_cover3_pendant(g)
        assert (
            min_s_club_cover_exact(lg.graph, 3).size()
            == min_clique_partition_exact(g).size()
        )


# ---------------------------------------------------------------------------
# Properties


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=5))
def test_cover2_distance_law(g: Graph):
    lg = reduce_cp_to_cover2(g)
    dist = all_pairs_distances(lg.graph)
    for i in range(g.n):
        for j in range(i + 1, g.n):
            d = dist[lg.vertex(Label("w", i))][lg.vertex(Label("w", j))]
            if j in g.neighbors(i):
                assert d == 2
            else:
                assert d >= 3


@settings(max_examples=25, deadline=None)
@given(graphs(max_n=5))
def test_cover2_equivalence_small(g: Graph):
    lg = reduce_cp_to_cover2(g)
    k = min_clique_partition_exact(g).size()
    assert min_s_club_cover_exact(lg.graph, 2, max_n=20).size() == k
    assert (has_h_cover(lg.graph, 2, 3, max_n=20) is not None) == (k <= 3)


@settings(max_examples=25, deadline=None)
@given(graphs(max_n=5))
def test_pendant_equivalence_small(g: Graph):
    lg = reduce_cp_to_cover3_pendant(g)
    k = min_clique_partition_exact(g).size()
    assert min_s_club_cover_exact(lg.graph, 3).size() == k


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_cover3_structure_random_instances(seed):
    rng = random.Random(seed)
    q, p = rng.choice(((5, 2), (5, 3), (6, 3), (6, 4)))
    inst = gen_valid_5dsat(q, p, seed=rng.randrange(2**32))
    lg = reduce_5dsat_to_cover3(inst)
    assert check_cover3_image(lg) == []
