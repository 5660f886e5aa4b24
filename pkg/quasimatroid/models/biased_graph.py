from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from quasimatroid.common import Cycle
from quasimatroid.models.cycles import CycleIndex
from quasimatroid.models.multigraph import Multigraph


@dataclass(frozen=True)
class BiasedGraph:
    """A graph with its materialised cycles and the balanced subset B."""

    cycles: CycleIndex
    balanced: frozenset[Cycle]

    @property
    def graph(self) -> Multigraph:
        return self.cycles.graph

    @property
    def all_cycles(self) -> tuple[Cycle, ...]:
        return self.cycles.cycles

    def is_balanced_cycle(self, cycle) -> bool:
        return tuple(cycle) in self.balanced

    @cached_property
    def balanced_rows(self) -> list[int]:
        return [i for i, c in enumerate(self.cycles.cycles) if c in self.balanced]

    @cached_property
    def unbalanced_rows(self) -> list[int]:
        return [i for i, c in enumerate(self.cycles.cycles) if c not in self.balanced]

    @cached_property
    def unbalanced(self) -> tuple[Cycle, ...]:
        return tuple(self.cycles.cycles[i] for i in self.unbalanced_rows)

    @cached_property
    def unbalanced_masks(self) -> tuple[int, ...]:
        masks = self.cycles.masks
        return tuple(masks[i] for i in self.unbalanced_rows)

    @property
    def is_unbalanced(self) -> bool:
        return bool(self.unbalanced_rows)
