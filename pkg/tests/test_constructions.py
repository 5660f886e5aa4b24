"""Tests for deletion, contraction, minors and sums."""

import pytest

from quasimatroid.analysis.bias import biased_graph, empty_bias, graphic_bias
from quasimatroid.analysis.bracelets import constant_chi
from quasimatroid.analysis.constructions import (
    broken_handcuff,
    contract,
    delete,
    delete_vertex,
    glue,
    link_sum,
    loop_sum,
    minor,
    minor_circuits,
    restrict,
    two_sum_circuits,
    with_loop,
)
from quasimatroid.analysis.matroid import circuits, graphic_circuits
from quasimatroid.analysis.tripartition import frame_tripartition, is_degenerate, validate_proper
from quasimatroid.common import (
    BasepointNotLink,
    BasepointNotUnbalancedLoop,
    BraceletValue,
    LoopContraction,
    Side,
)
from quasimatroid.models import CircuitFamily, Multigraph


class TestDeletion:
    def test_delete_relabels_stably(self, doubled_parity):
        minor_t = delete(doubled_parity, 4)
        assert minor_t.graph.edge_count == 7
        assert minor_t.graph.edges[4] == doubled_parity.graph.edges[5]
        # L digon {2, 6} becomes {2, 5}
        assert minor_t.side_of((2, 5)) == Side.L
        assert minor_t.side_of((1, 4)) == Side.F

    def test_delete_matches_matroid_deletion(self, doubled_parity):
        for e in range(8):
            expected = minor_circuits(circuits(doubled_parity), deletions=[e])
            assert circuits(delete(doubled_parity, e)).as_set == expected.as_set

    def test_delete_vertex_keeps_the_vertex(self, doubled_parity):
        minor_t = delete_vertex(doubled_parity, 0)
        assert minor_t.graph.vertex_count == 4
        assert minor_t.graph.edge_count == 4
        assert minor_t.side_of((0, 2)) == Side.F
        assert minor_t.side_of((1, 3)) == Side.L

    def test_restrict(self, k4_graphic):
        minor_t = restrict(k4_graphic, [0, 1, 3])
        assert minor_t.graph.edges == ((0, 1), (0, 2), (1, 2))
        assert minor_t.balanced == frozenset({(0, 1, 2)})

    def test_unknown_edge(self, doubled_parity):
        with pytest.raises(ValueError):
            delete(doubled_parity, 8)

    def test_deleting_a_vertex_of_the_parity_cycle_degenerates(self, k8_parity):
        for v in range(4):
            minor_t = delete_vertex(k8_parity, v)
            assert is_degenerate(minor_t, Side.L) or is_degenerate(minor_t, Side.F)

    def test_deleting_any_kab_vertex_degenerates(self, kab_frame, kab_lift):
        for t in (kab_frame, kab_lift):
            for v in range(t.graph.vertex_count):
                minor_t = delete_vertex(t, v)
                assert is_degenerate(minor_t, Side.L) or is_degenerate(minor_t, Side.F)


class TestContraction:
    def test_parallel_edge_becomes_a_loop(self, doubled_parity):
        minor_t = contract(doubled_parity, 0)
        assert minor_t.graph.vertex_count == 3
        # edge 4 is now labelled 3 and is a loop carrying the class of {0, 4}
        assert minor_t.graph.is_loop(3)
        assert minor_t.side_of((3,)) == Side.L

    def test_contract_matches_matroid_contraction(self, doubled_parity):
        for e in range(8):
            expected = minor_circuits(circuits(doubled_parity), contractions=[e])
            assert circuits(contract(doubled_parity, e)).as_set == expected.as_set

    def test_loop_cannot_be_contracted(self):
        g = Multigraph.from_edges(1, [(0, 0), (0, 0)])
        t = frame_tripartition(empty_bias(g))
        with pytest.raises(LoopContraction):
            contract(t, 0)


class TestMinor:
    def test_delete_then_contract(self, doubled_parity):
        minor_t, labels = minor(doubled_parity, deletions=[4], contractions=[0])
        assert labels == {1: 0, 2: 1, 3: 2, 5: 3, 6: 4, 7: 5}
        assert minor_t.graph.edge_count == 6
        assert validate_proper(minor_t) is None
        expected = minor_circuits(circuits(doubled_parity), [4], [0])
        assert circuits(minor_t).as_set == expected.as_set

    def test_overlap_rejected(self, doubled_parity):
        with pytest.raises(ValueError, match="both deleted and contracted"):
            minor(doubled_parity, deletions=[1], contractions=[1])

    def test_minor_circuits_keeps_minimal_sets(self):
        cf = CircuitFamily.of(4, [(0, 1, 2), (0, 3)])
        contracted = minor_circuits(cf, contractions=[0])
        assert contracted.ground_size == 3
        assert contracted.circuits == ((0, 1), (2,))


class TestLinkSum:
    def test_graphic_summand_gives_a_two_sum(self, doubled_parity, triangle):
        result = link_sum(doubled_parity, 0, triangle, 0)
        assert result.graph.vertex_count == 5
        assert result.graph.edge_count == 9
        expected = two_sum_circuits(circuits(doubled_parity), 0, graphic_circuits(triangle), 0)
        assert result.circuits.as_set == expected.circuits.as_set
        assert validate_proper(result.tripartition) is None

    def test_edge_maps(self, doubled_parity, triangle):
        result = link_sum(doubled_parity, 0, triangle, 0)
        first, second = result.edge_maps
        assert 0 not in first
        assert first[1] == 0
        assert second == {1: 7, 2: 8}
        data = result.to_dict()
        assert {'summand': 1, 'old': 2, 'new': 8} in data['edge_map']

    def test_basepoint_must_be_a_link(self, triangle):
        g = Multigraph.from_edges(1, [(0, 0)])
        t = frame_tripartition(empty_bias(g))
        with pytest.raises(BasepointNotLink):
            link_sum(t, 0, triangle, 0)


class TestLoopSum:
    def test_basepoint_must_be_an_unbalanced_loop(self, triangle):
        bg = graphic_bias(triangle)
        chi = constant_chi(bg, BraceletValue.INDEPENDENT)
        with pytest.raises(BasepointNotUnbalancedLoop):
            loop_sum(bg, 0, bg, 0, chi, chi)

    def test_balanced_loop_rejected(self):
        g = Multigraph.from_edges(2, [(0, 0), (0, 1)])
        bg = biased_graph(g, [(0,)])
        chi = constant_chi(bg, BraceletValue.INDEPENDENT)
        with pytest.raises(BasepointNotUnbalancedLoop):
            loop_sum(bg, 0, bg, 0, chi, chi)

    def test_glued_graph(self):
        first = empty_bias(Multigraph.from_edges(2, [(0, 0), (0, 1), (0, 1)]))
        second = empty_bias(Multigraph.from_edges(2, [(1, 1), (0, 1), (0, 1)]))
        result = loop_sum(
            first, 0, second, 0,
            constant_chi(first, BraceletValue.INDEPENDENT),
            constant_chi(second, BraceletValue.DEPENDENT),
        )
        # second's vertex 1 is identified with first's vertex 0
        assert result.graph.vertex_count == 3
        assert result.graph.edges == ((0, 1), (0, 1), (2, 0), (2, 0))
        assert result.circuits.ground_size == 4


class TestBrokenHandcuff:
    def test_matches_a_loop_sum(self, triangle):
        core = empty_bias(triangle)
        satellite = empty_bias(Multigraph.from_edges(2, [(0, 1), (0, 1)]))
        direct = broken_handcuff(core, {0: satellite})

        core_loop, e1 = with_loop(core, 0)
        sat_loop, e2 = with_loop(satellite, 0)
        summed = loop_sum(
            core_loop, e1, sat_loop, e2,
            constant_chi(core_loop, BraceletValue.INDEPENDENT),
            constant_chi(sat_loop, BraceletValue.DEPENDENT),
        )
        assert direct.graph.edges == summed.graph.edges
        assert direct.circuits.as_set == summed.circuits.as_set

    def test_unknown_attachment_vertex(self, triangle):
        with pytest.raises(ValueError):
            broken_handcuff(empty_bias(triangle), {5: empty_bias(triangle)})


class TestGlue:
    def test_unidentified_vertices_follow_the_first_graph(self, triangle):
        graph, first, second = glue(triangle, triangle, {0: 2}, drop_second=[2])
        assert graph.vertex_count == 5
        assert graph.edges[3:] == ((2, 3), (3, 4))
        assert first == {0: 0, 1: 1, 2: 2}
        assert second == {0: 3, 1: 4}
