from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from quasimatroid.common import BraceletValue, Cycle, EdgeSet, edge_set


@dataclass(frozen=True, order=True)
class Bracelet:
    """Two vertex-disjoint unbalanced cycles, stored with ``cycle_a < cycle_b``."""

    cycle_a: Cycle
    cycle_b: Cycle

    @classmethod
    def of(cls, first: Iterable[int], second: Iterable[int]) -> Bracelet:
        a, b = tuple(first), tuple(second)
        return cls(a, b) if a <= b else cls(b, a)

    @property
    def cycles(self) -> tuple[Cycle, Cycle]:
        return self.cycle_a, self.cycle_b

    @property
    def edges(self) -> EdgeSet:
        return edge_set(self.cycle_a + self.cycle_b)

    def contains(self, cycle) -> bool:
        return tuple(cycle) in (self.cycle_a, self.cycle_b)

    def to_dict(self) -> dict:
        return {'cycle_a': list(self.cycle_a), 'cycle_b': list(self.cycle_b)}


@dataclass(frozen=True)
class BraceletFunction:
    """A map from bracelets to {dependent, independent}."""

    values: Mapping[Bracelet, BraceletValue] = field(default_factory=dict)

    @classmethod
    def constant(cls, bracelets: Iterable[Bracelet], value: BraceletValue) -> BraceletFunction:
        value = BraceletValue(value)
        return cls({b: value for b in bracelets})

    def __getitem__(self, bracelet: Bracelet) -> BraceletValue:
        return self.values[bracelet]

    def __iter__(self) -> Iterator[Bracelet]:
        return iter(sorted(self.values))

    def __len__(self) -> int:
        return len(self.values)

    def __contains__(self, bracelet) -> bool:
        return bracelet in self.values

    def is_dependent(self, bracelet: Bracelet) -> bool:
        return self.values[bracelet] == BraceletValue.DEPENDENT

    def flipped(self, bracelet: Bracelet) -> BraceletFunction:
        updated = dict(self.values)
        updated[bracelet] = (
            BraceletValue.INDEPENDENT if self.is_dependent(bracelet) else BraceletValue.DEPENDENT
        )
        return BraceletFunction(updated)

    def missing(self, bracelets: Iterable[Bracelet]) -> list[Bracelet]:
        return [b for b in bracelets if b not in self.values]

    def to_list(self) -> list[dict]:
        return [dict(b.to_dict(), value=self.values[b].value) for b in self]

    def __hash__(self):
        return hash(tuple((b, self.values[b]) for b in self))


@dataclass(frozen=True)
class BraceletGraph:
    """Bracelets joined when their union has cyclomatic number 3.

    ``components`` holds tuples of node indices and is computed at
    construction; ``component_of[i]`` is the component number of node ``i``.
    """

    nodes: tuple[Bracelet, ...]
    adjacency: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def component_count(self) -> int:
        return len(self.components)

    def is_isolated(self, bracelet: Bracelet) -> bool:
        i = self.nodes.index(bracelet)
        return len(self.components[self.component_of[i]]) == 1
