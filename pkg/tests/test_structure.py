import pytest
from hypothesis import given

from welldom.graphs import Graph, excludes_cycles
from welldom.named_graphs import (
    complete_graph,
    cycle_graph,
    fringe_gap_graph,
    path_graph,
    star_graph,
    triangle_tripod_graph,
    triangle_with_pendants,
    two_triangles_bridged,
)
from welldom.oracle import BudgetExceededError, EnumerationBudget, enumerate_maximal_independent_sets
from welldom.structure import (
    anchored_fringe_vertices,
    confined_neighbors,
    ear_partners,
    fringe_vertices,
    greedy_maximal_independent,
    independence_number,
    simplicial_partition,
    simplicial_vertices,
    structure_summary,
)

from conftest import graphs, is_independent


class TestFringe:
    def test_path_has_leaf_fringe(self):
        assert fringe_vertices(path_graph(5)) == frozenset({0, 4})

    def test_triangle_members_with_degree_two(self):
        assert fringe_vertices(triangle_with_pendants(1)) == frozenset({1, 2, 3})
        assert fringe_vertices(complete_graph(3)) == frozenset({0, 1, 2})

    def test_cycle_has_none(self):
        assert fringe_vertices(cycle_graph(7)) == frozenset()
        assert fringe_vertices(triangle_tripod_graph()) == frozenset()

    def test_ear_partners(self):
        partners = ear_partners(two_triangles_bridged())
        assert partners == {0: (1, 2), 1: (0, 2), 4: (3, 5), 5: (3, 4)}

    @given(graphs(max_n=8))
    def test_fringe_vertices_have_a_covering_neighbor(self, g):
        # being in the fringe is the same as some neighbor's closed
        # neighborhood swallowing yours
        nb = g.closed_bits
        for v in range(g.n):
            swallowed = any(not (nb[v] & ~nb[u]) for u in g.adj[v])
            assert (v in fringe_vertices(g)) == (
                g.degree(v) == 1 or (g.degree(v) == 2 and swallowed)
            )


class TestConfinedNeighbors:
    def test_path_interior(self):
        g = path_graph(4)
        assert confined_neighbors(g, 1) == frozenset({0})
        assert confined_neighbors(g, 2) == frozenset({3})

    def test_middle_of_path5_has_none(self):
        assert confined_neighbors(path_graph(5), 2) == frozenset()

    def test_star_center_confines_all_leaves(self):
        assert confined_neighbors(star_graph(3), 0) == frozenset({1, 2, 3})

    @given(graphs(max_n=8))
    def test_confined_neighbors_land_in_fringe_when_square_free(self, g):
        # once squares are forbidden a confined neighbor has degree at most
        # two and its neighborhood is a clique, hence it sits in the fringe
        if not excludes_cycles(g, (4,)):
            return
        fringe = fringe_vertices(g)
        for v in range(g.n):
            assert confined_neighbors(g, v) <= fringe


class TestGreedy:
    def test_greedy_is_ascending(self):
        g = path_graph(5)
        assert greedy_maximal_independent(g, range(5)) == frozenset({0, 2, 4})

    @given(graphs(max_n=8))
    def test_greedy_output_is_maximal_independent_within_candidates(self, g):
        candidates = set(range(0, g.n, 2))
        chosen = greedy_maximal_independent(g, candidates)
        assert is_independent(g, frozenset(chosen))
        for extra in candidates - chosen:
            assert any(g.has_edge(extra, got) for got in chosen)


class TestAnchoredFringe:
    def test_pendants_always_anchored(self):
        g = path_graph(6)
        assert anchored_fringe_vertices(g) == frozenset({0, 5})

    def test_paw_ears_anchored(self):
        assert anchored_fringe_vertices(triangle_with_pendants(1)) == frozenset({1, 2, 3})

    def test_gap_graph_has_unanchored_fringe(self):
        g = fringe_gap_graph()
        assert fringe_vertices(g) == frozenset({0})
        assert anchored_fringe_vertices(g) == frozenset()

    def test_budget_error_carries_partial(self):
        g = fringe_gap_graph()
        with pytest.raises(BudgetExceededError) as err:
            anchored_fringe_vertices(g, EnumerationBudget(max_sets=1))
        assert isinstance(err.value.partial, dict)


class TestIndependenceNumber:
    @given(graphs(max_n=8))
    def test_matches_enumeration(self, g):
        family = enumerate_maximal_independent_sets(g)
        assert independence_number(g) == max(family.sizes())

    def test_budget_gate(self):
        with pytest.raises(BudgetExceededError):
            independence_number(Graph.from_edges(30, []))


class TestSimplicial:
    def test_simplicial_vertices(self):
        assert simplicial_vertices(path_graph(3)) == frozenset({0, 2})
        assert simplicial_vertices(complete_graph(4)) == frozenset({0, 1, 2, 3})
        assert simplicial_vertices(cycle_graph(5)) == frozenset()

    def test_partition_of_path4(self):
        part = simplicial_partition(path_graph(4))
        assert part is not None
        assert part.is_valid_for(path_graph(4))
        assert sorted(part.centers) == [0, 3]

    def test_no_partition_for_cycle7(self):
        assert simplicial_partition(cycle_graph(7)) is None

    def test_no_partition_for_path5(self):
        assert simplicial_partition(path_graph(5)) is None

    def test_partition_with_triangles(self):
        g = triangle_with_pendants(3)
        part = simplicial_partition(g)
        assert part is not None and part.is_valid_for(g)

    @given(graphs(max_n=8))
    def test_partition_when_found_is_valid(self, g):
        part = simplicial_partition(g)
        if part is not None:
            assert part.is_valid_for(g)


class TestStructureSummary:
    def test_summary_fields_cohere(self):
        g = two_triangles_bridged()
        summary = structure_summary(g)
        assert summary.fringe == frozenset({0, 1, 4, 5})
        assert summary.anchored_fringe == summary.fringe
        assert summary.zero_forced_fringe == frozenset()
        assert set(summary.confined) == {2, 3}
        assert summary.confined[2] == frozenset({0, 1})

    def test_gap_graph_zero_forced(self):
        summary = structure_summary(fringe_gap_graph())
        assert summary.zero_forced_fringe == frozenset({0})
