from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from quasimatroid.bitsets import fits_array, from_mask, mask_array, to_mask
from quasimatroid.common import EdgeSet, edge_set


@dataclass(frozen=True)
class CircuitFamily:
    """A family of edge sets over the ground set ``0..ground_size-1``.

    Members are canonical edge sets in sorted order, so two families are
    equal exactly when they hold the same sets.
    """

    ground_size: int
    circuits: tuple[EdgeSet, ...]

    @classmethod
    def of(cls, ground_size: int, sets: Iterable[Iterable[int]]) -> CircuitFamily:
        members = {edge_set(s) for s in sets}
        members.discard(())
        return cls(ground_size, tuple(sorted(members)))

    @classmethod
    def minimal_of(cls, ground_size: int, sets: Iterable[Iterable[int]]) -> CircuitFamily:
        """Keep only the inclusion-minimal nonempty members."""
        masks = sorted({to_mask(s) for s in sets} - {0}, key=lambda m: (bin(m).count('1'), m))
        kept: list[int] = []
        for mask in masks:
            if not any(k & mask == k for k in kept):
                kept.append(mask)
        return cls(ground_size, tuple(sorted(from_mask(m) for m in kept)))

    def __len__(self) -> int:
        return len(self.circuits)

    def __iter__(self) -> Iterator[EdgeSet]:
        return iter(self.circuits)

    def __contains__(self, item) -> bool:
        return edge_set(item) in self.as_set

    @cached_property
    def as_set(self) -> frozenset[EdgeSet]:
        return frozenset(self.circuits)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(to_mask(c) for c in self.circuits)

    @property
    def ground(self) -> EdgeSet:
        return tuple(range(self.ground_size))

    def nested_pair(self) -> tuple[EdgeSet, EdgeSet] | None:
        """A pair (smaller, larger) with smaller ⊆ larger, or None for a clutter."""
        masks = self.masks
        if fits_array(self.ground_size) and masks:
            table = mask_array(masks)
            for i, mask in enumerate(masks):
                hits = np.nonzero((table & mask) == mask)[0]
                for j in hits:
                    if j != i:
                        return self.circuits[i], self.circuits[int(j)]
            return None
        for i, small in enumerate(masks):
            for j, large in enumerate(masks):
                if i != j and small & large == small:
                    return self.circuits[i], self.circuits[j]
        return None

    def is_clutter(self) -> bool:
        return () not in self.as_set and self.nested_pair() is None

    def restrict(self, edges: Iterable[int]) -> CircuitFamily:
        """Circuits inside ``edges``, kept on the original labels."""
        keep = to_mask(edges)
        return CircuitFamily(self.ground_size, tuple(c for c, m in zip(self.circuits, self.masks)
                                                     if not m & ~keep))

    def relabel(self, mapping: dict[int, int], ground_size: int) -> CircuitFamily:
        return CircuitFamily.of(ground_size, ([mapping[e] for e in c] for c in self.circuits))

    def to_list(self) -> list[list[int]]:
        return [list(c) for c in self.circuits]
