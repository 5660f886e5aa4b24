from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from quasimatroid.bitsets import fits_array, mask_array, to_mask
from quasimatroid.common import Cycle
from quasimatroid.models.multigraph import Multigraph

# Row block for chunked incidence products
_CHUNK = 1024


@dataclass(frozen=True)
class CycleIndex:
    """The materialised cycle list of a graph with bitmask lookups.

    Cycles are kept in canonical order; row ``i`` of every derived table
    refers to ``cycles[i]``.
    """

    graph: Multigraph
    cycles: tuple[Cycle, ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self) -> Iterator[Cycle]:
        return iter(self.cycles)

    def __contains__(self, cycle) -> bool:
        return tuple(cycle) in self.position

    @cached_property
    def position(self) -> dict[Cycle, int]:
        return {c: i for i, c in enumerate(self.cycles)}

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(to_mask(c) for c in self.cycles)

    @cached_property
    def vertex_masks(self) -> tuple[int, ...]:
        return tuple(self.graph.vertex_mask(c) for c in self.cycles)

    @cached_property
    def vertex_incidence(self) -> np.ndarray:
        """Cycle x vertex 0/1 matrix."""
        table = np.zeros((len(self.cycles), self.graph.vertex_count), dtype=np.int32)
        for row, cycle in enumerate(self.cycles):
            table[row, list(self.graph.vertices_of(cycle))] = 1
        return table

    @cached_property
    def array_ready(self) -> bool:
        return fits_array(self.graph.edge_count) and fits_array(self.graph.vertex_count)

    @cached_property
    def mask_table(self) -> np.ndarray:
        return mask_array(self.masks)

    @cached_property
    def vertex_mask_table(self) -> np.ndarray:
        return mask_array(self.vertex_masks)

    def index_of(self, cycle: Iterable[int]) -> int:
        return self.position[tuple(cycle)]

    def within(self, mask: int, rows: Iterable[int] | None = None) -> list[int]:
        """Rows whose cycle lies inside the edge set ``mask``."""
        masks = self.masks
        candidates = range(len(masks)) if rows is None else rows
        outside = ~mask
        return [i for i in candidates if not masks[i] & outside]

    def disjoint_pairs(self, rows_a: list[int], rows_b: list[int] | None = None,
                       first_only: bool = False) -> list[tuple[int, int]]:
        """Vertex-disjoint pairs (i, j), i from ``rows_a`` and j from ``rows_b``.

        With ``rows_b`` omitted, unordered pairs within ``rows_a`` are
        returned with i < j.
        """
        return self._disjoint(rows_a, rows_b, first_only)

    def _disjoint(self, rows_a, rows_b, first_only):
        same = rows_b is None
        rows_a = sorted(rows_a)
        rows_b = rows_a if same else sorted(rows_b)
        if not rows_a or not rows_b:
            return []
        incidence = self.vertex_incidence
        right = incidence[rows_b].T
        found = []
        for start in range(0, len(rows_a), _CHUNK):
            block = rows_a[start:start + _CHUNK]
            shared = incidence[block] @ right
            for a, b in np.argwhere(shared == 0):
                i, j = block[a], rows_b[b]
                if same and i >= j:
                    continue
                found.append((i, j))
                if first_only:
                    return found
        return found
