"""
Cycle tripartitions (B, L, F).

A tripartition is proper when B has the theta property and every cycle in
L meets every cycle in F. Proper tripartitions and proper bracelet
functions describe the same matroids; this module converts between them.
"""
from __future__ import annotations

import logging
from typing import Callable, Iterable, Iterator

import networkx as nx

from quasimatroid.analysis.bias import theta_scan
from quasimatroid.analysis.bracelets import bracelet_graph, enumerate_bracelets, is_proper
from quasimatroid.analysis.graph_core import cycle_index, is_connected
from quasimatroid.common import (
    BraceletValue,
    CapExceeded,
    Cycle,
    DisconnectedGraph,
    ImproperChi,
    ImproperTripartition,
    InvalidTripartition,
    MeetViolation,
    Side,
    ThetaViolation,
    edge_set,
)
from quasimatroid.config import get_config
from quasimatroid.models import (
    BiasedGraph,
    BraceletFunction,
    BraceletGraph,
    CycleIndex,
    Multigraph,
    Tripartition,
)

logger = logging.getLogger(__name__)


def make_tripartition(
    g: Multigraph,
    balanced: Iterable[Iterable[int]],
    lift: Iterable[Iterable[int]],
    frame: Iterable[Iterable[int]],
    *,
    cycles: CycleIndex | None = None,
    limit: int | None = None,
    max_length: int | None = None,
    check_proper: bool = False,
) -> Tripartition:
    """Build a Tripartition from three explicit cycle lists.

    Raises:
        InvalidTripartition: A listed set is not a cycle, a cycle is listed
            twice, or a cycle is missing.
        ImproperTripartition: ``check_proper`` is set and the result is not proper.
    """
    index = cycles if cycles is not None else cycle_index(g, limit=limit, max_length=max_length)
    parts = {}
    seen: dict[Cycle, str] = {}
    for name, members in (('B', balanced), ('L', lift), ('F', frame)):
        canonical = frozenset(edge_set(c) for c in members)
        for cycle in canonical:
            if cycle not in index:
                raise InvalidTripartition(f"{list(cycle)} in {name} is not a cycle of the graph")
            if cycle in seen:
                raise InvalidTripartition(
                    f"{list(cycle)} appears in both {seen[cycle]} and {name}"
                )
            seen[cycle] = name
        parts[name] = canonical
    if len(seen) != len(index):
        missing = next(c for c in index.cycles if c not in seen)
        raise InvalidTripartition(f"cycle {list(missing)} is not assigned to B, L or F")

    t = Tripartition(index, parts['B'], parts['L'], parts['F'])
    if check_proper:
        require_proper(t)
    return t


def tripartition_from_rule(
    g: Multigraph,
    classifier: Callable[[Cycle], Side | str],
    *,
    cycles: CycleIndex | None = None,
    limit: int | None = None,
    max_length: int | None = None,
) -> Tripartition:
    """Compile a per-cycle classifier into an explicit tripartition."""
    index = cycles if cycles is not None else cycle_index(g, limit=limit, max_length=max_length)
    groups: dict[Side, set[Cycle]] = {Side.B: set(), Side.L: set(), Side.F: set()}
    for cycle in index.cycles:
        try:
            side = Side(classifier(cycle))
        except ValueError:
            raise InvalidTripartition(
                f"classifier returned no side for cycle {list(cycle)}"
            ) from None
        groups[side].add(cycle)
    return Tripartition(
        index, frozenset(groups[Side.B]), frozenset(groups[Side.L]), frozenset(groups[Side.F])
    )


def split_tripartition(bg: BiasedGraph, lift: Iterable[Iterable[int]]) -> Tripartition:
    """B from ``bg``, the given unbalanced cycles in L, the rest in F."""
    lift = frozenset(edge_set(c) for c in lift)
    stray = [c for c in lift if c in bg.balanced or c not in bg.cycles]
    if stray:
        raise InvalidTripartition(f"{list(min(stray))} is not an unbalanced cycle")
    frame = frozenset(bg.unbalanced) - lift
    return Tripartition(bg.cycles, bg.balanced, lift, frame)


def frame_tripartition(bg: BiasedGraph) -> Tripartition:
    return Tripartition(bg.cycles, bg.balanced, frozenset(), frozenset(bg.unbalanced))


def lift_tripartition(bg: BiasedGraph) -> Tripartition:
    return Tripartition(bg.cycles, bg.balanced, frozenset(bg.unbalanced), frozenset())


# ---------------------------------------------------------------------------
# Propriety and degeneracy
# ---------------------------------------------------------------------------

def validate_proper(t: Tripartition) -> ThetaViolation | MeetViolation | None:
    """None when t is proper, otherwise the first witness found."""
    index = t.cycles
    violation = theta_scan(index, t.rows(Side.B))
    if violation is not None:
        return violation
    crossing = index.disjoint_pairs(t.rows(Side.L), t.rows(Side.F), first_only=True)
    if crossing:
        i, j = crossing[0]
        return MeetViolation(index.cycles[i], index.cycles[j])
    return None


def require_proper(t: Tripartition) -> Tripartition:
    violation = validate_proper(t)
    if violation is not None:
        raise ImproperTripartition(f"tripartition is not proper ({violation.kind})", violation)
    return t


def disjoint_pair(t: Tripartition, side: Side | str) -> tuple[Cycle, Cycle] | None:
    """Two vertex-disjoint cycles of one side, or None."""
    side = Side(side)
    if side == Side.B:
        raise ValueError("degeneracy is defined for L and F only")
    found = t.cycles.disjoint_pairs(t.rows(side), first_only=True)
    if not found:
        return None
    i, j = found[0]
    return t.cycles.cycles[i], t.cycles.cycles[j]


def is_degenerate(t: Tripartition, side: Side | str) -> bool:
    return disjoint_pair(t, side) is None


# ---------------------------------------------------------------------------
# Bracelet functions
# ---------------------------------------------------------------------------

def chi_from_tripartition(t: Tripartition) -> BraceletFunction:
    """Dependent on L-L bracelets, independent on F-F bracelets.

    Propriety rules out mixed bracelets, so the result is total.
    """
    require_proper(t)
    values = {}
    for bracelet in enumerate_bracelets(t.biased_graph):
        side = t.side_of(bracelet.cycle_a)
        values[bracelet] = (
            BraceletValue.DEPENDENT if side == Side.L else BraceletValue.INDEPENDENT
        )
    return BraceletFunction(values)


def tripartition_from_chi(bg: BiasedGraph, chi: BraceletFunction,
                          graph: BraceletGraph | None = None) -> Tripartition:
    """L holds the cycles of dependent bracelets; every other unbalanced cycle is in F.

    Raises:
        DisconnectedGraph: the underlying graph is disconnected.
        ImproperChi: chi is not total or not constant on bracelet-graph components.
    """
    if not is_connected(bg.graph):
        raise DisconnectedGraph("a bracelet function determines L and F only on a connected graph")
    graph = graph if graph is not None else bracelet_graph(bg)
    violation = is_proper(bg, chi, graph)
    if violation is not None:
        raise ImproperChi("bracelet function is not proper", violation)
    lift = set()
    for bracelet in graph.nodes:
        if chi.is_dependent(bracelet):
            lift.update(bracelet.cycles)
    return split_tripartition(bg, lift)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def disjointness_groups(bg: BiasedGraph) -> list[list[Cycle]]:
    """Components of the disjointness graph on the unbalanced cycles of ``bg``.

    A split is proper exactly when each group lies wholly in L or wholly in F.
    """
    index = bg.cycles
    rows = bg.unbalanced_rows
    view = nx.Graph()
    view.add_nodes_from(rows)
    view.add_edges_from(index.disjoint_pairs(rows))
    return [[index.cycles[i] for i in part]
            for part in sorted(sorted(part) for part in nx.connected_components(view))]


def proper_tripartitions(bg: BiasedGraph, cap: int | None = None) -> Iterator[Tripartition]:
    """Every proper (L, F) split of the unbalanced cycles of ``bg``, indexed
    by subsets of the disjointness groups.

    Raises:
        CapExceeded: more than ``cap`` groups (default TRIPARTITION_ENUM_CAP).
    """
    if cap is None:
        cap = get_config().TRIPARTITION_ENUM_CAP
    groups = disjointness_groups(bg)
    if len(groups) > cap:
        raise CapExceeded(
            f"{len(groups)} independent cycle groups exceed the enumeration cap", cap
        )
    logger.debug(f"Enumerating {2 ** len(groups)} proper splits")
    for choice in range(1 << len(groups)):
        lift = [c for k, group in enumerate(groups) if choice >> k & 1 for c in group]
        yield split_tripartition(bg, lift)
