"""
Subset-lattice tables for small matroids.

A MatroidTable holds, for every subset of the ground set, whether it is
dependent and its rank. Everything else (circuits, bases, flats,
hyperplanes, cocircuits) is read off those two arrays with numpy.
"""
from __future__ import annotations

import logging
from typing import Callable

import numpy as np

from quasimatroid.bitsets import (
    from_mask,
    lattice,
    lattice_popcounts,
    subset_max,
    superset_closure,
)
from quasimatroid.common import EdgeSet, GroundSetTooLarge
from quasimatroid.config import get_config
from quasimatroid.models import CircuitFamily

logger = logging.getLogger(__name__)


class MatroidTable:
    """Dependence and rank of every subset of a ground set of ``width`` elements."""

    def __init__(self, width: int, dependent: np.ndarray, ranks: np.ndarray):
        self.width = width
        self.dependent = dependent
        self.ranks = ranks
        self.sizes = lattice_popcounts(width)

    @staticmethod
    def _check_width(width: int, cap: int | None) -> None:
        if cap is None:
            cap = get_config().AXIOM_EDGE_CAP
        if width > cap:
            raise GroundSetTooLarge(f"{width} elements exceed the subset-table cap", cap)

    @classmethod
    def from_circuits(cls, cf: CircuitFamily, cap: int | None = None) -> MatroidTable:
        """Dependent sets are the supersets of circuits; rank is the largest
        independent subset."""
        width = cf.ground_size
        cls._check_width(width, cap)
        flags = np.zeros(1 << width, dtype=bool)
        if cf.masks:
            flags[np.fromiter(cf.masks, dtype=np.int64)] = True
        dependent = superset_closure(flags, width)
        sizes = lattice_popcounts(width)
        ranks = subset_max(np.where(dependent, 0, sizes), width)
        logger.debug(f"Tabulated {1 << width} subsets from {len(cf)} circuits")
        return cls(width, dependent, ranks)

    @classmethod
    def from_rank(cls, width: int, rank: Callable[[int], int],
                  cap: int | None = None) -> MatroidTable:
        """Tabulate a rank function given on masks."""
        cls._check_width(width, cap)
        ranks = np.fromiter((rank(mask) for mask in range(1 << width)),
                            dtype=np.int64, count=1 << width)
        dependent = ranks < lattice_popcounts(width)
        return cls(width, dependent, ranks)

    @property
    def full_rank(self) -> int:
        return int(self.ranks[-1])

    def rank(self, mask: int) -> int:
        return int(self.ranks[mask])

    def is_independent(self, mask: int) -> bool:
        return not self.dependent[mask]

    def circuit_masks(self) -> np.ndarray:
        """Dependent sets all of whose one-smaller subsets are independent."""
        idx = lattice(self.width)
        minimal = self.dependent.copy()
        for i in range(self.width):
            bit = 1 << i
            has = (idx & bit) != 0
            minimal[has] &= ~self.dependent[idx[has] ^ bit]
        return np.nonzero(minimal)[0]

    def circuits(self) -> CircuitFamily:
        return CircuitFamily.of(self.width, (from_mask(int(m)) for m in self.circuit_masks()))

    def basis_masks(self) -> np.ndarray:
        return np.nonzero(~self.dependent & (self.sizes == self.full_rank))[0]

    def closed_flags(self) -> np.ndarray:
        """True for every flat (adding any element raises the rank)."""
        idx = lattice(self.width)
        closed = np.ones(1 << self.width, dtype=bool)
        for i in range(self.width):
            bit = 1 << i
            lacks = (idx & bit) == 0
            closed[lacks] &= self.ranks[idx[lacks] | bit] > self.ranks[lacks]
        return closed

    def hyperplane_masks(self) -> np.ndarray:
        return np.nonzero(self.closed_flags() & (self.ranks == self.full_rank - 1))[0]

    def cocircuits(self) -> list[EdgeSet]:
        ground = (1 << self.width) - 1
        return sorted(from_mask(ground & ~int(h)) for h in self.hyperplane_masks())

    def closure(self, mask: int) -> int:
        base = self.ranks[mask]
        closed = mask
        for i in range(self.width):
            bit = 1 << i
            if not mask & bit and self.ranks[mask | bit] == base:
                closed |= bit
        return closed
