"""
Biased graphs: the theta property, balance of edge sets, balancing sets
and balancing vertices.
"""
from __future__ import annotations

import itertools
import logging
from typing import Callable, Iterable

import numpy as np

from quasimatroid.analysis.graph_core import component_masks, cycle_index, union_mask
from quasimatroid.bitsets import from_mask, iter_bits, popcount, popcount_array, to_mask
from quasimatroid.common import (
    Cycle,
    EdgeSet,
    GraphBalanced,
    InvalidBias,
    SearchCapExceeded,
    ThetaViolation,
    edge_set,
)
from quasimatroid.config import get_config
from quasimatroid.models import BiasedGraph, CycleIndex, Multigraph

logger = logging.getLogger(__name__)


def biased_graph(
    g: Multigraph,
    balanced: Iterable[Iterable[int]] | None = None,
    *,
    rule: Callable[[Cycle], bool] | None = None,
    cycles: CycleIndex | None = None,
    limit: int | None = None,
    max_length: int | None = None,
    check: bool = True,
) -> BiasedGraph:
    """Build a BiasedGraph from an explicit balanced list or a rule.

    Args:
        g: The graph.
        balanced: Balanced cycles as edge lists.
        rule: Predicate deciding balance per cycle; compiled to an explicit
            set after enumeration. Mutually exclusive with ``balanced``.
        cycles: A ready CycleIndex of ``g``; enumerated when omitted.
        limit, max_length: Forwarded to cycle enumeration.
        check: Validate the theta property.

    Raises:
        InvalidBias: An entry is not a cycle of g, or the theta property fails.
    """
    if balanced is not None and rule is not None:
        raise ValueError("give either balanced cycles or a rule, not both")
    index = cycles if cycles is not None else cycle_index(g, limit=limit, max_length=max_length)
    if rule is not None:
        members = frozenset(c for c in index.cycles if rule(c))
    else:
        members = frozenset(edge_set(c) for c in (balanced or ()))
        strangers = [c for c in members if c not in index]
        if strangers:
            raise InvalidBias(f"{list(min(strangers))} is not a cycle of the graph")
    bg = BiasedGraph(index, members)
    if check:
        violation = theta_scan(index, bg.balanced_rows)
        if violation is not None:
            raise InvalidBias("balanced cycles violate the theta property", violation)
    return bg


def empty_bias(g: Multigraph, **kwargs) -> BiasedGraph:
    return biased_graph(g, (), check=False, **kwargs)


def graphic_bias(g: Multigraph, **kwargs) -> BiasedGraph:
    """Every cycle balanced."""
    return biased_graph(g, rule=lambda c: True, check=False, **kwargs)


def signed_bias(g: Multigraph, negative: Iterable[int], **kwargs) -> BiasedGraph:
    """Balanced cycles are those with an even number of negative edges."""
    negative_mask = to_mask(negative)
    return biased_graph(
        g, rule=lambda c: popcount(to_mask(c) & negative_mask) % 2 == 0, check=False, **kwargs
    )


# ---------------------------------------------------------------------------
# Theta property
# ---------------------------------------------------------------------------

def check_theta_property(
    g: Multigraph,
    balanced: Iterable[Iterable[int]],
    cycles: CycleIndex | None = None,
) -> ThetaViolation | None:
    """Return a theta with exactly two balanced cycles, or None.

    A theta with two balanced cycles is the union of those two cycles, so
    only pairs of balanced cycles are scanned: they must share an edge and
    their union must have cyclomatic number 2, and then the symmetric
    difference is the third cycle.
    """
    index = cycles if cycles is not None else cycle_index(g)
    members = frozenset(edge_set(c) for c in balanced)
    rows = []
    for cycle in sorted(members):
        if cycle not in index:
            raise InvalidBias(f"{list(cycle)} is not a cycle of the graph")
        rows.append(index.index_of(cycle))
    return theta_scan(index, rows)


def theta_scan(index: CycleIndex, rows: list[int]) -> ThetaViolation | None:
    """First theta among ``rows`` whose third cycle is outside ``rows``."""
    masks = index.masks
    member_masks = {masks[i] for i in rows}
    rows = sorted(rows)

    for first, second in _theta_pairs(index, rows):
        third = masks[first] ^ masks[second]
        if third not in member_masks:
            return _violation(index, first, second, third)
    return None


def _theta_pairs(index: CycleIndex, rows: list[int]):
    """Pairs of rows whose cycles form a theta."""
    masks = index.masks
    vmasks = index.vertex_masks
    if index.array_ready and len(rows) > 64:
        table = index.mask_table[rows]
        vtable = index.vertex_mask_table[rows]
        for k in range(len(rows) - 1):
            rest = table[k + 1:]
            shared = (rest & table[k]) != 0
            if not shared.any():
                continue
            excess = popcount_array(rest | table[k]) - popcount_array(vtable[k + 1:] | vtable[k])
            for offset in np.nonzero(shared & (excess == 1))[0]:
                yield rows[k], rows[k + 1 + int(offset)]
        return
    for k, i in enumerate(rows):
        for j in rows[k + 1:]:
            if masks[i] & masks[j] and popcount(masks[i] | masks[j]) - popcount(vmasks[i] | vmasks[j]) == 1:
                yield i, j


def theta_pairs(index: CycleIndex, rows: list[int]) -> list[tuple[int, int]]:
    return list(_theta_pairs(index, sorted(rows)))


def _violation(index: CycleIndex, first: int, second: int, third: int) -> ThetaViolation:
    masks = index.masks
    a, b = index.cycles[first], index.cycles[second]
    return ThetaViolation(
        theta=from_mask(masks[first] | masks[second]),
        cycles=tuple(sorted((a, b, from_mask(third)))),
        balanced=(a, b),
    )


# ---------------------------------------------------------------------------
# Balance of edge sets
# ---------------------------------------------------------------------------

def is_balanced(bg: BiasedGraph, x: Iterable[int]) -> bool:
    """True when G[x] contains no unbalanced cycle."""
    outside = ~to_mask(x)
    return not any(not u & outside for u in bg.unbalanced_masks)


def balanced_components(bg: BiasedGraph, x: Iterable[int]) -> int:
    """b(X): the number of balanced components of G[x]."""
    return balanced_component_count(bg.graph, bg.unbalanced_masks, to_mask(x))


def balanced_component_count(g: Multigraph, unbalanced_masks, mask: int) -> int:
    count = 0
    for emask, _ in component_masks(g, mask):
        outside = ~emask
        if not any(not u & outside for u in unbalanced_masks):
            count += 1
    return count


# ---------------------------------------------------------------------------
# Balancing sets and vertices
# ---------------------------------------------------------------------------

def minimal_balancing_sets(
    bg: BiasedGraph,
    max_size: int | None = None,
    candidate_cap: int | None = None,
) -> list[EdgeSet]:
    """All inclusion-minimal balancing sets, by increasing size.

    A set is balancing exactly when it meets every unbalanced cycle, so the
    result is the list of minimal transversals of the unbalanced cycles.
    """
    if not bg.is_unbalanced:
        raise GraphBalanced("every cycle is balanced; no balancing set exists")
    return minimal_hitting_sets(bg.unbalanced_masks, max_size=max_size, candidate_cap=candidate_cap)


def minimal_hitting_sets(
    targets: Iterable[int],
    max_size: int | None = None,
    candidate_cap: int | None = None,
) -> list[EdgeSet]:
    """Minimal edge sets meeting every target mask (brute force by size)."""
    config = get_config()
    targets = sorted(set(targets))
    if not targets:
        return []
    if candidate_cap is None:
        candidate_cap = config.BALANCING_CANDIDATE_CAP
    pool = list(iter_bits(union_mask(targets)))
    # A minimal transversal needs a private target per element
    bound = min(len(pool), len(targets))
    if max_size is not None:
        bound = min(bound, max_size)

    found: list[int] = []
    examined = 0
    warned = False
    for size in range(1, bound + 1):
        if size > config.BALANCING_WARN_SIZE and not warned:
            logger.warning(
                f"Balancing-set search reached size {size} over {len(pool)} edges"
            )
            warned = True
        for combo in itertools.combinations(pool, size):
            examined += 1
            if examined > candidate_cap:
                raise SearchCapExceeded(
                    f"balancing-set search exceeded {candidate_cap} candidates", candidate_cap
                )
            mask = 0
            for e in combo:
                mask |= 1 << e
            if any(f & mask == f for f in found):
                continue
            if all(t & mask for t in targets):
                found.append(mask)
    return [from_mask(m) for m in found]


def balancing_vertices(bg: BiasedGraph) -> list[int]:
    """Vertices lying on every unbalanced cycle."""
    if not bg.is_unbalanced:
        return []
    vmasks = bg.cycles.vertex_masks
    common = -1
    for i in bg.unbalanced_rows:
        common &= vmasks[i]
    return list(iter_bits(common)) if common > 0 else []
