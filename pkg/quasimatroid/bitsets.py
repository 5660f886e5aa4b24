"""
Bitmask helpers.

Edge sets are exchanged as sorted tuples but most inner loops work on
Python ints where bit ``e`` stands for edge ``e``. The numpy helpers cover
the subset-lattice tables and the vectorised pair scans; they require masks
that fit a signed 64-bit word.
"""
from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from quasimatroid.common import EdgeSet

# Widest mask the int64 helpers accept
MAX_ARRAY_BITS = 62

_POPCOUNT16 = np.array([bin(i).count('1') for i in range(1 << 16)], dtype=np.uint8)


def to_mask(edges: Iterable[int]) -> int:
    mask = 0
    for e in edges:
        mask |= 1 << e
    return mask


def from_mask(mask: int) -> EdgeSet:
    return tuple(iter_bits(mask))


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count('1')


def fits_array(width: int) -> bool:
    return width <= MAX_ARRAY_BITS


def mask_array(masks: Iterable[int]) -> np.ndarray:
    return np.fromiter(masks, dtype=np.int64)


def popcount_array(values: np.ndarray) -> np.ndarray:
    """Vectorised popcount of a non-negative int64 array."""
    values = np.ascontiguousarray(values, dtype=np.int64)
    halves = values.view(np.uint16).reshape(-1, 4)
    return _POPCOUNT16[halves].sum(axis=1, dtype=np.int64)


def lattice(width: int) -> np.ndarray:
    """All subsets of a ``width``-element ground set as masks 0..2^width-1."""
    return np.arange(1 << width, dtype=np.int64)


def lattice_popcounts(width: int) -> np.ndarray:
    idx = lattice(width)
    counts = np.zeros(1 << width, dtype=np.int64)
    for i in range(width):
        counts += (idx >> i) & 1
    return counts


def superset_closure(flags: np.ndarray, width: int) -> np.ndarray:
    """Mark every mask that contains a flagged mask (sum over subsets, OR)."""
    closed = flags.copy()
    idx = lattice(width)
    for i in range(width):
        bit = 1 << i
        has = (idx & bit) != 0
        closed[has] |= closed[idx[has] ^ bit]
    return closed


def subset_max(values: np.ndarray, width: int) -> np.ndarray:
    """For every mask, the maximum of ``values`` over its subsets."""
    best = values.copy()
    idx = lattice(width)
    for i in range(width):
        bit = 1 << i
        has = (idx & bit) != 0
        best[has] = np.maximum(best[has], best[idx[has] ^ bit])
    return best
