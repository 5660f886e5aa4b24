"""Tests for rank, circuits, independence, bases, cocircuits and the framework conditions."""

import itertools

import pytest

from quasimatroid.analysis.matroid import (
    RankOracle,
    bases,
    circuit_rank,
    circuits,
    circuits_chi,
    closure,
    cocircuits,
    frame_circuits,
    framework_check,
    graphic_circuits,
    is_independent,
    lift_circuits,
)
from quasimatroid.analysis.tripartition import chi_from_tripartition, make_tripartition
from quasimatroid.common import (
    BraceletValue,
    DegenerateTripartition,
    GroundSetTooLarge,
    ImproperChi,
    ImproperTripartition,
)
from quasimatroid.models import Bracelet, BraceletFunction, CircuitFamily, Multigraph


def all_subsets(n):
    for size in range(n + 1):
        yield from itertools.combinations(range(n), size)


class TestRankOracle:
    def test_graphic_k4(self, k4_graphic):
        oracle = RankOracle(k4_graphic)
        assert oracle.full_rank() == 3
        assert oracle.rank([0, 1, 3]) == 2
        assert oracle.rank([]) == 0

    def test_doubled_parity(self, doubled_parity):
        oracle = RankOracle(doubled_parity)
        assert oracle.full_rank() == 4
        assert oracle.rank({0, 2, 4, 6}) == 3
        assert oracle.rank({1, 3, 5, 7}) == 4

    def test_accepts_masks(self, doubled_parity):
        oracle = RankOracle(doubled_parity)
        assert oracle(0b01010101) == oracle.rank([0, 2, 4, 6])

    def test_lift_indicator(self, doubled_parity):
        oracle = RankOracle(doubled_parity)
        assert oracle.lift_indicator([2, 6]) == 1
        assert oracle.lift_indicator([1, 5]) == 0
        assert oracle.lift_indicator(0) == 0
        assert oracle.lift_indicator(0b11111111) == 1
        assert RankOracle.frame(doubled_parity.biased_graph).lift_indicator(0b11111111) == 0

    def test_frame_and_lift_ranks_differ_on_a_bracelet(self, k6_empty):
        bracelet = [0, 1, 5, 12, 13, 14]  # triangles 012 and 345
        assert RankOracle.frame(k6_empty).rank(bracelet) == 6
        assert RankOracle.lift(k6_empty).rank(bracelet) == 5

    def test_rank_matches_circuits(self, doubled_parity):
        oracle = RankOracle(doubled_parity)
        cf = circuits(doubled_parity)
        for subset in all_subsets(8):
            assert oracle.rank(subset) == circuit_rank(cf, subset), subset


class TestCircuits:
    def test_graphic_circuits_are_cycles(self, k4, k4_graphic):
        cf = circuits(k4_graphic)
        assert len(cf) == 7
        assert cf.as_set == graphic_circuits(k4).as_set

    def test_lift_lift_bracelet_is_a_circuit(self, doubled_parity):
        cf = circuits(doubled_parity)
        assert (0, 2, 4, 6) in cf
        assert (1, 3, 5, 7) not in cf

    def test_family_is_a_clutter(self, doubled_parity, k5_parity):
        assert circuits(doubled_parity).is_clutter()
        assert circuits(k5_parity).is_clutter()

    def test_improper_input_rejected(self):
        g = Multigraph.from_edges(2, [(0, 0), (1, 1)])
        t = make_tripartition(g, [], [[0]], [[1]])
        with pytest.raises(ImproperTripartition):
            circuits(t)

    def test_frame_and_lift_differ_on_disjoint_triangles(self, k6_empty):
        bracelet = (0, 1, 5, 12, 13, 14)
        assert bracelet in lift_circuits(k6_empty)
        assert bracelet not in frame_circuits(k6_empty)

    def test_circuits_from_chi_match(self, k6_empty, k6_lift, k6_frame):
        for t in (k6_lift, k6_frame):
            chi = chi_from_tripartition(t)
            assert circuits_chi(k6_empty, chi).as_set == circuits(t).as_set

    def test_chi_naming_foreign_cycles(self, k6_empty):
        chi = BraceletFunction.constant([Bracelet((0, 1, 5), (12, 13, 99))], BraceletValue.DEPENDENT)
        with pytest.raises(ImproperChi, match="not a pair of cycles"):
            circuits_chi(k6_empty, chi, check=False)


class TestIndependence:
    def test_matches_rank(self, doubled_parity):
        oracle = RankOracle(doubled_parity)
        for subset in all_subsets(8):
            assert is_independent(doubled_parity, subset) == (oracle.rank(subset) == len(subset))

    def test_single_lift_cycle_is_independent(self, doubled_parity):
        assert is_independent(doubled_parity, [0, 4])
        assert not is_independent(doubled_parity, [0, 2, 4, 6])

    def test_k4_bases(self, k4_graphic):
        found = bases(k4_graphic)
        assert len(found) == 16
        assert found == sorted(found)
        assert all(len(b) == 3 for b in found)

    def test_bases_cap(self, k6_frame):
        with pytest.raises(GroundSetTooLarge):
            bases(k6_frame, cap=10)

    def test_closure(self, k4):
        cf = graphic_circuits(k4)
        assert closure(cf, [0, 1]) == (0, 1, 3)
        assert closure(cf, [0]) == (0,)


class TestCocircuits:
    def test_complements_are_hyperplanes(self, doubled_parity):
        oracle = RankOracle(doubled_parity)
        full = oracle.full_rank()
        found = cocircuits(doubled_parity)
        assert found
        for cocircuit in found:
            rest = [e for e in range(8) if e not in cocircuit]
            assert oracle.rank(rest) == full - 1

    def test_degenerate_side_rejected(self, k6_frame):
        with pytest.raises(DegenerateTripartition):
            cocircuits(k6_frame)


class TestFramework:
    def test_quasi_graphic_instances_pass(self, k4_graphic, doubled_parity, k5_parity):
        for t in (k4_graphic, doubled_parity, k5_parity):
            assert framework_check(circuits(t), t.graph) == []

    def test_ground_set_mismatch(self, k4):
        violations = framework_check(CircuitFamily.of(3, [(0, 1, 2)]), k4)
        assert [v.condition for v in violations] == [1]

    def test_circuit_with_three_components(self):
        g = Multigraph.from_edges(3, [(0, 0), (1, 1), (2, 2)])
        violations = framework_check(CircuitFamily.of(3, [(0, 1, 2)]), g)
        assert [v.condition for v in violations] == [4]
        assert violations[0].to_dict()['witness'] == [[0, 1, 2]]

    def test_component_rank_too_high(self):
        # two free loops at one vertex: rank 2 on a single vertex
        g = Multigraph.from_edges(1, [(0, 0), (0, 0)])
        violations = framework_check(CircuitFamily.of(2, []), g)
        assert 2 in [v.condition for v in violations]
