"""
Toroidal grids and the homology classes of their cycles.

The 2m x 2m grid lives on the torus. Every edge carries a unit
displacement, so summing displacements along an oriented cycle and dividing
by the side length gives its winding pair (a, b). Classes are taken up to
sign: the first nonzero coordinate is made positive.
"""
from __future__ import annotations

import numpy as np

from quasimatroid.analysis.bias import biased_graph
from quasimatroid.analysis.graph_core import cycle_index, walk_cycle
from quasimatroid.analysis.tripartition import frame_tripartition, lift_tripartition
from quasimatroid.common import Cycle, InputError
from quasimatroid.examples import register_example
from quasimatroid.examples.base import BaseExample
from quasimatroid.examples.common import ExampleBundle
from quasimatroid.models import BiasedGraph, CycleIndex, Multigraph

CONTRACTIBLE = (0, 0)


def torus_graph(m: int) -> tuple[Multigraph, np.ndarray]:
    """The 2m x 2m toroidal grid and the displacement of each edge.

    Vertex (i, j) is ``i * 2m + j``. For each vertex in row-major order the
    edge to its right neighbour (displacement (1, 0)) precedes the edge to
    the neighbour below (displacement (0, 1)).
    """
    if m < 2:
        raise InputError(f"torus grids need m >= 2, got {m}")
    side = 2 * m
    edges = []
    shifts = []
    for i in range(side):
        for j in range(side):
            here = i * side + j
            edges.append((here, i * side + (j + 1) % side))
            shifts.append((1, 0))
            edges.append((here, ((i + 1) % side) * side + j))
            shifts.append((0, 1))
    return Multigraph.from_edges(side * side, edges), np.array(shifts, dtype=np.int64)


def homology_class(g: Multigraph, shifts: np.ndarray, cycle: Cycle, side: int) -> tuple[int, int]:
    walk = walk_cycle(g, cycle)
    signs = np.array([1 if tail == g.ends(e)[0] else -1 for e, tail, _ in walk], dtype=np.int64)
    rows = np.array([e for e, _, _ in walk], dtype=np.int64)
    a, b = (signs @ shifts[rows]) // side
    a, b = int(a), int(b)
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return a, b


def torus_grid(m: int, max_length: int | None = None,
               limit: int | None = None) -> tuple[Multigraph, dict[Cycle, tuple[int, int]]]:
    """The grid and the normalised homology class of each of its cycles.

    ``max_length`` keeps only cycles with at most that many edges.

    Raises:
        CycleLimitExceeded: the grid has more than ``limit`` cycles.
    """
    g, shifts = torus_graph(m)
    index = cycle_index(g, limit=limit, max_length=max_length)
    homology = {cycle: homology_class(g, shifts, cycle, 2 * m) for cycle in index.cycles}
    return g, homology


def torus_biased_graph(g: Multigraph, homology: dict[Cycle, tuple[int, int]]) -> BiasedGraph:
    """Contractible cycles balanced, every other cycle unbalanced."""
    index = CycleIndex(g, tuple(sorted(homology)))
    return biased_graph(g, rule=lambda c: homology[c] == CONTRACTIBLE, cycles=index, check=False)


@register_example
class TorusGrid(BaseExample):
    NAME = 'torus-grid'
    DESCRIPTION = '2m x 2m toroidal grid, contractible cycles balanced'
    DEFAULTS = {'m': 2, 'max_length': None, 'side': 'F'}

    def build(self) -> ExampleBundle:
        m = self._int_param('m', 2)
        max_length = None if self.params['max_length'] is None else self._int_param('max_length', 1)
        side = str(self.params['side']).upper()
        if side not in ('L', 'F'):
            raise InputError(f"{self.NAME}: side must be L or F, got {side}")
        g, homology = torus_grid(m, max_length=max_length)
        bg = torus_biased_graph(g, homology)
        t = frame_tripartition(bg) if side == 'F' else lift_tripartition(bg)
        self.logger.debug(f"{len(homology)} cycles, {len(bg.unbalanced)} non-contractible")
        return self.bundle(
            graph=g,
            tripartition=t,
            homology=homology,
            max_length=max_length,
            tripartition_rule={'rule': 'frame' if side == 'F' else 'lift'},
        )
