"""Tests for biased graphs, the theta property and balancing sets."""

import pytest

from quasimatroid.analysis.bias import (
    balanced_components,
    balancing_vertices,
    biased_graph,
    check_theta_property,
    empty_bias,
    graphic_bias,
    is_balanced,
    minimal_balancing_sets,
    minimal_hitting_sets,
    signed_bias,
)
from quasimatroid.common import GraphBalanced, InvalidBias, SearchCapExceeded


# K4 edge order: 0=(0,1) 1=(0,2) 2=(0,3) 3=(1,2) 4=(1,3) 5=(2,3)
TRIANGLE_012 = (0, 1, 3)
TRIANGLE_013 = (0, 2, 4)
SQUARE_0213 = (1, 2, 3, 4)


class TestThetaProperty:
    def test_two_balanced_cycles_of_a_theta_are_rejected(self, k4):
        with pytest.raises(InvalidBias) as info:
            biased_graph(k4, [TRIANGLE_012, TRIANGLE_013])
        violation = info.value.violation
        assert violation.theta == (0, 1, 2, 3, 4)
        assert violation.cycles == (TRIANGLE_012, TRIANGLE_013, SQUARE_0213)
        assert info.value.to_dict()['witness']['type'] == 'ThetaViolation'

    def test_whole_theta_balanced_is_fine(self, k4):
        bg = biased_graph(k4, [TRIANGLE_012, TRIANGLE_013, SQUARE_0213])
        assert len(bg.balanced) == 3
        assert len(bg.unbalanced) == 4

    def test_check_theta_property_returns_witness(self, k4):
        violation = check_theta_property(k4, [TRIANGLE_012, TRIANGLE_013])
        assert violation is not None
        assert violation.balanced == (TRIANGLE_012, TRIANGLE_013)
        assert check_theta_property(k4, [TRIANGLE_012]) is None

    def test_unknown_cycle_rejected(self, k4):
        with pytest.raises(InvalidBias, match="not a cycle"):
            biased_graph(k4, [(0, 1)])

    def test_rule_and_list_are_exclusive(self, k4):
        with pytest.raises(ValueError):
            biased_graph(k4, [TRIANGLE_012], rule=lambda c: True)

    def test_signed_bias_satisfies_theta_property(self, k4):
        bg = signed_bias(k4, [5])
        assert check_theta_property(k4, bg.balanced, cycles=bg.cycles) is None


class TestBiasRules:
    def test_empty_and_graphic(self, k4):
        assert empty_bias(k4).balanced == frozenset()
        assert len(graphic_bias(k4).balanced) == 7

    def test_signed_bias_counts_negative_edges(self, k4):
        bg = signed_bias(k4, [5])
        assert bg.balanced == frozenset({TRIANGLE_012, TRIANGLE_013, SQUARE_0213})
        assert all(5 in c for c in bg.unbalanced)


class TestBalance:
    def test_is_balanced(self, k4):
        bg = signed_bias(k4, [5])
        assert is_balanced(bg, [0, 1, 2, 3, 4])
        assert not is_balanced(bg, range(6))
        assert is_balanced(bg, [])

    def test_balanced_components(self, two_triangles):
        bg = signed_bias(two_triangles, [0])
        assert balanced_components(bg, range(6)) == 1
        assert balanced_components(bg, [3, 4, 5]) == 1
        assert balanced_components(bg, [0, 1, 2]) == 0

    def test_trees_are_balanced_components(self, k4):
        bg = empty_bias(k4)
        assert balanced_components(bg, [0, 5]) == 2


class TestBalancingSets:
    def test_single_unbalanced_triangle(self, triangle):
        bg = signed_bias(triangle, [0])
        assert minimal_balancing_sets(bg) == [(0,), (1,), (2,)]

    def test_balanced_graph_has_no_balancing_set(self, triangle):
        with pytest.raises(GraphBalanced):
            minimal_balancing_sets(graphic_bias(triangle))

    def test_results_are_minimal_transversals(self, k4):
        bg = signed_bias(k4, [5])
        found = minimal_balancing_sets(bg)
        assert (5,) in found
        for candidate in found:
            assert all(set(candidate) & set(c) for c in bg.unbalanced)
            for e in candidate:
                rest = set(candidate) - {e}
                assert not all(rest & set(c) for c in bg.unbalanced)

    def test_max_size(self, k4):
        bg = empty_bias(k4)
        assert minimal_balancing_sets(bg, max_size=1) == []

    def test_candidate_cap(self, k4):
        with pytest.raises(SearchCapExceeded):
            minimal_balancing_sets(empty_bias(k4), candidate_cap=2)

    def test_hitting_sets_of_nothing(self):
        assert minimal_hitting_sets([]) == []


class TestBalancingVertices:
    def test_negative_edge_ends(self, k4):
        assert balancing_vertices(signed_bias(k4, [5])) == [2, 3]

    def test_empty_bias_triangle(self, triangle):
        assert balancing_vertices(empty_bias(triangle)) == [0, 1, 2]

    def test_balanced_graph(self, triangle):
        assert balancing_vertices(graphic_bias(triangle)) == []
