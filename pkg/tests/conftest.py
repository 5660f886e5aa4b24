"""Shared test fixtures: small graphs, biases and tripartitions."""

import os

os.environ.setdefault('QUASIMATROID_ENV', 'testing')

import pytest

from quasimatroid.analysis.bias import empty_bias
from quasimatroid.examples.bipartite import kab_plus_cycles
from quasimatroid.examples.complete import complete_empty_bias, complete_graph, complete_graphic
from quasimatroid.examples.parity import FourCycleParity, doubled_cycle_graph, four_cycle_parity
from quasimatroid.models import Multigraph


@pytest.fixture()
def triangle():
    return Multigraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture()
def k4():
    return complete_graph(4)


@pytest.fixture()
def two_triangles():
    """Two vertex-disjoint triangles."""
    return Multigraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


@pytest.fixture()
def doubled_c4():
    return doubled_cycle_graph(4)


@pytest.fixture()
def doubled_parity(doubled_c4):
    """Parity tripartition of the doubled 4-cycle: 8 balanced, 4 in L, 8 in F."""
    return four_cycle_parity(doubled_c4, [0, 1, 2, 3])


@pytest.fixture()
def k4_graphic():
    return complete_graphic(4)


@pytest.fixture()
def k5_parity():
    g = complete_graph(5)
    c = [g.edges.index(pair) for pair in ((0, 1), (1, 2), (2, 3), (0, 3))]
    return four_cycle_parity(g, c)


@pytest.fixture()
def k6_empty():
    return empty_bias(complete_graph(6))


@pytest.fixture()
def k6_frame():
    return complete_empty_bias(6, 'F')


@pytest.fixture()
def k6_lift():
    return complete_empty_bias(6, 'L')


@pytest.fixture()
def kab_frame():
    """K_{3,3} plus triangles with the two triangles in F."""
    return kab_plus_cycles(3, 3, 'F')


@pytest.fixture()
def kab_lift():
    return kab_plus_cycles(3, 3, 'L')


@pytest.fixture(scope='session')
def k8_parity():
    return FourCycleParity(n=8).build().tripartition


@pytest.fixture()
def pendant_triangle(doubled_c4):
    """Doubled C4 with a triangle hanging at vertex 0, so 0 is a cut vertex."""
    edges = list(doubled_c4.edges) + [(0, 4), (4, 5), (0, 5)]
    return Multigraph.from_edges(6, edges)


@pytest.fixture(scope='session')
def k7_empty():
    """Every bracelet of (K_7, empty) lies in one bracelet-graph component."""
    return empty_bias(complete_graph(7))


@pytest.fixture()
def triangle_and_theta():
    """A triangle joined by a bridge to three parallel edges; no balanced cycles.

    Its three bracelets pair the triangle with each digon and are mutually adjacent.
    """
    g = Multigraph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (3, 4), (3, 4)])
    return empty_bias(g)
