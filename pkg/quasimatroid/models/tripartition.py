from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from quasimatroid.common import Cycle, Side
from quasimatroid.models.biased_graph import BiasedGraph
from quasimatroid.models.cycles import CycleIndex
from quasimatroid.models.multigraph import Multigraph


@dataclass(frozen=True)
class Tripartition:
    """A partition (B, L, F) of every cycle of a graph.

    Construct through :func:`quasimatroid.analysis.tripartition.make_tripartition`
    which checks the partition; propriety is checked separately.
    """

    cycles: CycleIndex
    balanced: frozenset[Cycle]
    lift: frozenset[Cycle]
    frame: frozenset[Cycle]

    @property
    def graph(self) -> Multigraph:
        return self.cycles.graph

    @cached_property
    def biased_graph(self) -> BiasedGraph:
        return BiasedGraph(self.cycles, self.balanced)

    def side_of(self, cycle) -> Side:
        cycle = tuple(cycle)
        if cycle in self.balanced:
            return Side.B
        if cycle in self.lift:
            return Side.L
        if cycle in self.frame:
            return Side.F
        raise KeyError(f"{cycle} is not a cycle of this graph")

    def members(self, side: Side) -> frozenset[Cycle]:
        return {Side.B: self.balanced, Side.L: self.lift, Side.F: self.frame}[Side(side)]

    @cached_property
    def _rows(self) -> dict[Side, list[int]]:
        rows = {Side.B: [], Side.L: [], Side.F: []}
        for i, cycle in enumerate(self.cycles.cycles):
            rows[self.side_of(cycle)].append(i)
        return rows

    def rows(self, side: Side) -> list[int]:
        return self._rows[Side(side)]

    @cached_property
    def lift_masks(self) -> tuple[int, ...]:
        masks = self.cycles.masks
        return tuple(masks[i] for i in self._rows[Side.L])

    @cached_property
    def frame_masks(self) -> tuple[int, ...]:
        masks = self.cycles.masks
        return tuple(masks[i] for i in self._rows[Side.F])
