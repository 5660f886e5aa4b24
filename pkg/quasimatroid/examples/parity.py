"""
Four-cycle parity tripartitions.

Given a 4-cycle C = e1 e2 e3 e4, a cycle meeting C in an even number of
edges is balanced. Of the rest, cycles meeting C in exactly e1 or exactly
e3 go to L and cycles meeting it in exactly e2, exactly e4 or in three
edges go to F.
"""
from __future__ import annotations

from typing import Iterable

from quasimatroid.analysis.tripartition import require_proper, tripartition_from_rule
from quasimatroid.common import Cycle, NotAFourCycle, Side
from quasimatroid.examples import register_example
from quasimatroid.examples.base import BaseExample
from quasimatroid.examples.common import ExampleBundle
from quasimatroid.examples.complete import complete_graph
from quasimatroid.models import CycleIndex, Multigraph, Tripartition


def four_cycle_edges(g: Multigraph, c: Iterable[int]) -> tuple[int, int, int, int]:
    """Check that ``c`` lists the edges of a 4-cycle of g in cyclic order.

    Raises:
        NotAFourCycle: ``c`` is not four distinct edges forming a cycle with
            consecutive edges adjacent.
    """
    edges = tuple(int(e) for e in c)
    if len(edges) != 4 or len(set(edges)) != 4:
        raise NotAFourCycle(f"{list(edges)} is not four distinct edges")
    if any(not 0 <= e < g.edge_count for e in edges):
        raise NotAFourCycle(f"{list(edges)} names an edge outside the graph")
    degrees = g.degrees(edges)
    if len(degrees) != 4 or any(d != 2 for d in degrees.values()):
        raise NotAFourCycle(f"{list(edges)} does not span a 4-cycle")
    for k in range(4):
        here, after = edges[k], edges[(k + 1) % 4]
        if not set(g.ends(here)) & set(g.ends(after)):
            raise NotAFourCycle(f"edges {here} and {after} are not adjacent; list C in cyclic order")
    return edges


def four_cycle_parity(g: Multigraph, c: Iterable[int], *, cycles: CycleIndex | None = None,
                      limit: int | None = None) -> Tripartition:
    """The parity tripartition of g relative to the 4-cycle ``c``.

    Raises:
        NotAFourCycle: see :func:`four_cycle_edges`.
        ImproperTripartition: never for a valid 4-cycle; raised by the final check.
    """
    e1, e2, e3, e4 = four_cycle_edges(g, c)
    quad = {e1, e2, e3, e4}

    def classify(cycle: Cycle) -> Side:
        meet = quad.intersection(cycle)
        if len(meet) % 2 == 0:
            return Side.B
        if len(meet) == 3:
            return Side.F
        return Side.L if meet <= {e1, e3} else Side.F

    return require_proper(tripartition_from_rule(g, classify, cycles=cycles, limit=limit))


def doubled_cycle_graph(n: int) -> Multigraph:
    """C_n with every edge doubled; edges ``0..n-1`` are the first copy in cyclic order."""
    ring = [(i, (i + 1) % n) for i in range(n)]
    return Multigraph.from_edges(n, ring + ring)


@register_example
class FourCycleParity(BaseExample):
    NAME = 'four-cycle-parity'
    DESCRIPTION = 'K_n with the parity tripartition of the 4-cycle 0-1-2-3'
    DEFAULTS = {'n': 8}

    def build(self) -> ExampleBundle:
        n = self._int_param('n', 4)
        g = complete_graph(n)
        c = [g.edges.index(pair) for pair in ((0, 1), (1, 2), (2, 3), (0, 3))]
        t = four_cycle_parity(g, c)
        self.logger.debug(f"K_{n}: {len(t.lift)} cycles in L, {len(t.frame)} in F")
        return self.bundle(
            graph=g,
            tripartition=t,
            tripartition_rule={'rule': 'four-cycle-parity', 'params': {'cycle': c}},
        )


@register_example
class DoubledFourCycle(BaseExample):
    NAME = 'doubled-four-cycle'
    DESCRIPTION = 'C_4 with doubled edges and the parity tripartition of one copy'
    DEFAULTS = {}

    def build(self) -> ExampleBundle:
        g = doubled_cycle_graph(4)
        c = [0, 1, 2, 3]
        return self.bundle(
            graph=g,
            tripartition=four_cycle_parity(g, c),
            tripartition_rule={'rule': 'four-cycle-parity', 'params': {'cycle': c}},
        )
