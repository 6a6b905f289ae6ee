import pytest

from welldom.generators import GeneratorConfig, generate_family
from welldom.graphs import Graph, induced_subgraph
from welldom.linalg import constants_space, subspace_contains, subspace_equal
from welldom.named_graphs import (
    complete_graph,
    cycle_graph,
    double_six_cycle,
    fringe_gap_graph,
    path_graph,
    triangle_tripod_graph,
    triangle_with_pendants,
    two_triangles_bridged,
)
from welldom.oracle import (
    is_well_covered,
    is_well_dominated,
    well_covered_weight_space_oracle,
    well_dominated_weight_space_oracle,
)
from welldom.structure import anchored_fringe_vertices, independence_number
from welldom.weightspace import (
    SpecialForm,
    dimension_checks,
    recognize_well_covered,
    recognize_well_dominated,
    special_form_of,
    well_covered_weight_basis,
    well_dominated_weight_basis,
)


def relabel(g: Graph, perm: list[int]) -> Graph:
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


class TestSpecialForms:
    def test_seven_cycle(self):
        assert special_form_of(cycle_graph(7)) is SpecialForm.CYCLE7

    def test_seven_cycle_survives_relabeling(self):
        scrambled = relabel(cycle_graph(7), [3, 6, 2, 5, 1, 4, 0])
        assert special_form_of(scrambled) is SpecialForm.CYCLE7

    def test_tripod(self):
        g = triangle_tripod_graph()
        assert special_form_of(g) is SpecialForm.TRIANGLE_TRIPOD
        assert special_form_of(relabel(g, list(reversed(range(10))))) is SpecialForm.TRIANGLE_TRIPOD

    def test_small_complete(self):
        for n in (1, 2, 3):
            assert special_form_of(complete_graph(n)) is SpecialForm.COMPLETE_SMALL

    def test_everything_else_is_general(self):
        assert special_form_of(path_graph(3)) is SpecialForm.GENERAL
        assert special_form_of(path_graph(7)) is SpecialForm.GENERAL
        assert special_form_of(path_graph(10)) is SpecialForm.GENERAL
        assert special_form_of(complete_graph(4)) is SpecialForm.GENERAL


class TestRecognition:
    def test_seven_cycle_clause(self):
        out = recognize_well_covered(cycle_graph(7))
        assert out.holds and out.clause == "cycle7" and out.partition is None

    def test_tripod_clause(self):
        out = recognize_well_covered(triangle_tripod_graph())
        assert out.holds and out.clause == "triangle_tripod"

    def test_partition_clause(self):
        g = path_graph(4)
        out = recognize_well_covered(g)
        assert out.holds and out.clause == "simplicial_partition"
        assert out.partition is not None and out.partition.is_valid_for(g)

    def test_negative(self):
        out = recognize_well_covered(path_graph(5))
        assert not out.holds and out.clause is None

    def test_well_dominated_same_answer(self):
        for g in (path_graph(4), path_graph(5), cycle_graph(7), complete_graph(3)):
            assert recognize_well_dominated(g) == recognize_well_covered(g)

    def test_preconditions(self):
        with pytest.raises(ValueError, match="connected"):
            recognize_well_covered(Graph.from_edges(2, []))
        with pytest.raises(ValueError, match="4-cycle"):
            recognize_well_covered(cycle_graph(4))
        with pytest.raises(ValueError, match="5-cycle"):
            recognize_well_covered(cycle_graph(5))
        with pytest.raises(ValueError, match="empty"):
            recognize_well_covered(Graph.from_edges(0, []))

    def test_matches_oracle_on_sampled_family(self):
        cfg = GeneratorConfig(max_n=9, forbidden_cycles=frozenset({4, 5}), seed=7, count=60)
        checked = 0
        for g in generate_family(cfg):
            if not g.is_connected or g.n == 0:
                continue
            out = recognize_well_covered(g)
            assert out.holds == is_well_covered(g)
            assert out.holds == is_well_dominated(g)
            checked += 1
        assert checked >= 30


class TestWeightBases:
    def test_special_forms_carry_constants(self):
        for g in (cycle_graph(7), triangle_tripod_graph(), complete_graph(2)):
            wcw = well_covered_weight_basis(g)
            wwd = well_dominated_weight_basis(g)
            assert subspace_equal(wcw.basis, constants_space(g.n))
            assert subspace_equal(wwd.basis, constants_space(g.n))
            assert wcw.notes and "constant weights" in wcw.notes[0]

    def test_path4_exact_basis(self):
        wcw = well_covered_weight_basis(path_graph(4))
        assert wcw.special_form is SpecialForm.GENERAL
        assert wcw.basis.rows == ((1, 1, 0, 0), (0, 0, 1, 1))
        wwd = well_dominated_weight_basis(path_graph(4))
        assert wwd.basis.rows == wcw.basis.rows
        assert wwd.notes == ()

    def test_zero_forced_fringe_noted(self):
        g = fringe_gap_graph()
        wwd = well_dominated_weight_basis(g)
        assert wwd.basis.dimension == 0
        assert wwd.notes == ("zero-forced fringe vertices: [0]",)
        wcw = well_covered_weight_basis(g)
        assert wcw.basis.dimension == 1

    def test_preconditions(self):
        with pytest.raises(ValueError, match="6-cycle"):
            well_covered_weight_basis(double_six_cycle())
        with pytest.raises(ValueError, match="connected"):
            well_dominated_weight_basis(Graph.from_edges(3, [(0, 1)]))

    def test_matches_oracle_on_sampled_family(self):
        cfg = GeneratorConfig(
            max_n=9, forbidden_cycles=frozenset({4, 5, 6}), seed=19, count=60
        )
        checked = 0
        for g in generate_family(cfg):
            if not g.is_connected or g.n == 0:
                continue
            wcw = well_covered_weight_basis(g)
            wwd = well_dominated_weight_basis(g)
            assert subspace_equal(wcw.basis, well_covered_weight_space_oracle(g))
            assert subspace_equal(wwd.basis, well_dominated_weight_space_oracle(g))
            assert subspace_contains(wcw.basis, wwd.basis)
            checked += 1
        assert checked >= 30


class TestDimensionReport:
    def test_adjacent_anchored_pair_is_diagnosed(self):
        report = dimension_checks(triangle_with_pendants(1))
        assert report.special_form is SpecialForm.GENERAL
        assert report.wwd_dimension == 2
        assert report.anchored_fringe_size == 3
        assert not report.anchored_count_matches
        assert any("(1, 2)" in line for line in report.diagnostics)
        assert report.wcw_dimension == 2
        assert report.fringe_independence == 2
        assert report.fringe_independence_matches
        assert report.chain_holds

    def test_two_pairs(self):
        report = dimension_checks(two_triangles_bridged())
        assert report.wwd_dimension == 2 and report.anchored_fringe_size == 4
        assert any("(0, 1)" in line and "(4, 5)" in line for line in report.diagnostics)

    def test_gap_graph_counts_agree(self):
        report = dimension_checks(fringe_gap_graph())
        assert report.wwd_dimension == 0 and report.anchored_fringe_size == 0
        assert report.anchored_count_matches
        assert report.wcw_dimension == 1 and report.fringe_independence == 1
        assert report.diagnostics == ()

    def test_special_form_flagged(self):
        report = dimension_checks(cycle_graph(7))
        assert report.special_form is SpecialForm.CYCLE7
        assert len(report.diagnostics) == 1
        assert "special form" in report.diagnostics[0]

    def test_dimension_formulas_on_sampled_family(self):
        # the dominating-space dimension equals the independence number of
        # the anchored fringe subgraph; the independent-space dimension
        # equals the independence number of the full fringe subgraph
        cfg = GeneratorConfig(
            max_n=9, forbidden_cycles=frozenset({4, 5, 6}), seed=23, count=60
        )
        checked = 0
        for g in generate_family(cfg):
            if not g.is_connected or g.n == 0:
                continue
            if special_form_of(g) is not SpecialForm.GENERAL:
                continue
            report = dimension_checks(g)
            anchored = anchored_fringe_vertices(g)
            sub, _ = induced_subgraph(g, anchored)
            assert report.wwd_dimension == independence_number(sub)
            assert report.fringe_independence_matches
            assert report.chain_holds
            checked += 1
        assert checked >= 30
