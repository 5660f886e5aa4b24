"""Tests for bracelets, the bracelet graph and bracelet functions."""

import pytest

from quasimatroid.analysis.bias import empty_bias
from quasimatroid.analysis.bracelets import (
    bracelet_graph,
    bracelets_containing,
    constant_chi,
    enumerate_bracelets,
    is_proper,
    shared_cycle,
)
from quasimatroid.common import BraceletValue, ImproperChi
from quasimatroid.examples.bipartite import kab_graph
from quasimatroid.examples.complete import complete_graph
from quasimatroid.models import Bracelet, BraceletFunction


class TestEnumerateBracelets:
    def test_k6_has_ten(self, k6_empty):
        bracelets = enumerate_bracelets(k6_empty)
        assert len(bracelets) == 10
        assert bracelets == sorted(bracelets)
        for b in bracelets:
            assert b.cycle_a < b.cycle_b
            assert len(b.cycle_a) == len(b.cycle_b) == 3

    def test_k5_has_none(self):
        assert enumerate_bracelets(empty_bias(complete_graph(5))) == []

    def test_balanced_cycles_never_appear(self, kab_frame):
        bg = kab_frame.biased_graph
        for b in enumerate_bracelets(bg):
            assert b.cycle_a not in bg.balanced
            assert b.cycle_b not in bg.balanced

    def test_bracelet_of_orders_cycles(self):
        assert Bracelet.of((3, 4, 5), (0, 1, 2)) == Bracelet((0, 1, 2), (3, 4, 5))


class TestBraceletGraph:
    def test_k6_bracelets_are_isolated(self, k6_empty):
        """Each triangle of K_6 has exactly one disjoint triangle, so no two bracelets share a cycle."""
        for exhaustive in (False, True):
            graph = bracelet_graph(k6_empty, exhaustive=exhaustive)
            assert len(graph) == 10
            assert graph.adjacency == ()
            assert graph.component_count == 10

    def test_k7_is_connected(self, k7_empty):
        graph = bracelet_graph(k7_empty)
        assert len(graph) == 175
        assert len(graph.adjacency) == 630
        assert graph.component_count == 1

    def test_adjacent_bracelets_share_a_cycle(self, k7_empty, triangle_and_theta):
        for bg in (k7_empty, triangle_and_theta):
            graph = bracelet_graph(bg, exhaustive=True)
            assert graph.adjacency == bracelet_graph(bg).adjacency
            for i, j in graph.adjacency:
                assert shared_cycle(graph.nodes[i], graph.nodes[j]) is not None

    def test_triangle_and_theta(self, triangle_and_theta):
        graph = bracelet_graph(triangle_and_theta)
        assert [b.cycle_b for b in graph.nodes] == [(4, 5), (4, 6), (5, 6)]
        assert graph.adjacency == ((0, 1), (0, 2), (1, 2))
        assert graph.components == ((0, 1, 2),)

    def test_kab_added_cycles_form_an_isolated_bracelet(self, kab_frame):
        _, first, second = kab_graph(3, 3)
        bg = kab_frame.biased_graph
        graph = bracelet_graph(bg)
        pair = Bracelet.of(first, second)
        assert pair in graph.nodes
        assert graph.is_isolated(pair)
        assert bracelets_containing(graph.nodes, first) == [pair]

    def test_two_triangles(self, two_triangles):
        graph = bracelet_graph(empty_bias(two_triangles))
        assert len(graph) == 1
        assert graph.is_isolated(graph.nodes[0])


class TestBraceletFunctions:
    def test_constant_function_is_proper(self, k6_empty):
        chi = constant_chi(k6_empty, BraceletValue.DEPENDENT)
        assert len(chi) == 10
        assert is_proper(k6_empty, chi) is None

    def test_every_k6_function_is_proper(self, k6_empty):
        chi = constant_chi(k6_empty, BraceletValue.INDEPENDENT)
        for bracelet in chi:
            assert is_proper(k6_empty, chi.flipped(bracelet)) is None

    def test_flipping_one_bracelet_breaks_propriety(self, triangle_and_theta):
        chi = constant_chi(triangle_and_theta, 'independent')
        target = next(iter(chi))
        violation = is_proper(triangle_and_theta, chi.flipped(target))
        assert violation is not None
        assert target in (violation.first, violation.second)
        assert {violation.first_value, violation.second_value} == {
            BraceletValue.DEPENDENT, BraceletValue.INDEPENDENT,
        }
        assert violation.to_dict()['type'] == 'ChiViolation'

    def test_k7_admits_only_constant_functions(self, k7_empty):
        graph = bracelet_graph(k7_empty)
        for value in BraceletValue:
            chi = constant_chi(k7_empty, value)
            assert is_proper(k7_empty, chi, graph) is None
            for bracelet in chi:
                assert is_proper(k7_empty, chi.flipped(bracelet), graph) is not None

    def test_partial_function_rejected(self, k6_empty):
        with pytest.raises(ImproperChi, match="no value"):
            is_proper(k6_empty, BraceletFunction({}))

    def test_isolated_bracelet_can_differ(self, kab_frame):
        _, first, second = kab_graph(3, 3)
        bg = kab_frame.biased_graph
        chi = constant_chi(bg, BraceletValue.INDEPENDENT).flipped(Bracelet.of(first, second))
        assert is_proper(bg, chi) is None

    def test_to_list(self, two_triangles):
        chi = constant_chi(empty_bias(two_triangles), BraceletValue.DEPENDENT)
        assert chi.to_list() == [
            {'cycle_a': [0, 1, 2], 'cycle_b': [3, 4, 5], 'value': 'dependent'},
        ]
