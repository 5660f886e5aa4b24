"""
Bracelets, the bracelet graph and proper bracelet functions.
"""
from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from typing import Iterable

import networkx as nx

from quasimatroid.analysis.graph_core import mask_cyclomatic_number
from quasimatroid.common import BraceletValue, ChiViolation, Cycle, ImproperChi
from quasimatroid.models import BiasedGraph, Bracelet, BraceletFunction, BraceletGraph

logger = logging.getLogger(__name__)


def enumerate_bracelets(bg: BiasedGraph) -> list[Bracelet]:
    """Every unordered vertex-disjoint pair of unbalanced cycles, sorted."""
    index = bg.cycles
    pairs = index.disjoint_pairs(bg.unbalanced_rows)
    cycles = index.cycles
    return sorted(Bracelet.of(cycles[i], cycles[j]) for i, j in pairs)


def bracelet_graph(bg: BiasedGraph, exhaustive: bool = False,
                   bracelets: list[Bracelet] | None = None) -> BraceletGraph:
    """Bracelets joined when their union has cyclomatic number 3.

    Adjacent bracelets always share a cycle, so by default only such pairs
    are tested; ``exhaustive`` tests every pair.
    """
    nodes = tuple(bracelets if bracelets is not None else enumerate_bracelets(bg))
    g = bg.graph
    index = bg.cycles
    masks = [index.masks[index.index_of(b.cycle_a)] | index.masks[index.index_of(b.cycle_b)]
             for b in nodes]

    if exhaustive:
        candidates = itertools.combinations(range(len(nodes)), 2)
    else:
        candidates = _pairs_sharing_a_cycle(nodes)

    adjacency = tuple(
        (i, j) for i, j in candidates
        if mask_cyclomatic_number(g, masks[i] | masks[j]) == 3
    )

    view = nx.Graph()
    view.add_nodes_from(range(len(nodes)))
    view.add_edges_from(adjacency)
    components = tuple(sorted(tuple(sorted(part)) for part in nx.connected_components(view)))
    component_of = [0] * len(nodes)
    for number, part in enumerate(components):
        for i in part:
            component_of[i] = number

    logger.debug(
        f"Bracelet graph: {len(nodes)} nodes, {len(adjacency)} edges, "
        f"{len(components)} components"
    )
    return BraceletGraph(nodes, adjacency, components, tuple(component_of))


def _pairs_sharing_a_cycle(nodes: tuple[Bracelet, ...]) -> list[tuple[int, int]]:
    holders: dict[Cycle, list[int]] = defaultdict(list)
    for i, bracelet in enumerate(nodes):
        holders[bracelet.cycle_a].append(i)
        holders[bracelet.cycle_b].append(i)
    pairs = set()
    for members in holders.values():
        pairs.update(itertools.combinations(members, 2))
    return sorted(pairs)


def is_proper(bg: BiasedGraph, chi: BraceletFunction,
              graph: BraceletGraph | None = None) -> ChiViolation | None:
    """None when chi is constant on every bracelet-graph component.

    Otherwise returns an adjacent pair of bracelets with differing values.

    Raises:
        ImproperChi: chi misses a bracelet of ``bg``.
    """
    graph = graph if graph is not None else bracelet_graph(bg)
    missing = chi.missing(graph.nodes)
    if missing:
        raise ImproperChi(f"bracelet function has no value for {missing[0].to_dict()}")
    for i, j in graph.adjacency:
        first, second = graph.nodes[i], graph.nodes[j]
        if chi[first] != chi[second]:
            return ChiViolation(first, second, chi[first], chi[second])
    return None


def constant_chi(bg: BiasedGraph, value: BraceletValue | str) -> BraceletFunction:
    return BraceletFunction.constant(enumerate_bracelets(bg), value)


def bracelets_containing(bracelets: Iterable[Bracelet], cycle: Iterable[int]) -> list[Bracelet]:
    return [b for b in bracelets if b.contains(cycle)]


def shared_cycle(first: Bracelet, second: Bracelet) -> Cycle | None:
    common = set(first.cycles) & set(second.cycles)
    return min(common) if common else None
