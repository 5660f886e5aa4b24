"""
Cycle enumeration, component structure and subgraph shapes.

Cycles are found block by block: every cycle of a multigraph lies inside
one block of its underlying simple graph, loops aside. Inside a block the
search fixes the smallest vertex of the cycle as its start and only fixes
one of the two traversal directions, so each cycle is produced once.
"""
from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator

import networkx as nx

from quasimatroid.bitsets import popcount
from quasimatroid.common import (
    Cycle,
    CycleLimitExceeded,
    EdgeSet,
    ShapeKind,
    edge_set,
)
from quasimatroid.config import get_config
from quasimatroid.models import CycleIndex, Multigraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubgraphShape:
    kind: ShapeKind
    cycles: tuple[Cycle, ...] = ()
    path: EdgeSet = ()

    def to_dict(self) -> dict:
        data = {'kind': self.kind.value}
        if self.cycles:
            data['cycles'] = [list(c) for c in self.cycles]
        if self.kind == ShapeKind.LOOSE_HANDCUFF:
            data['path'] = list(self.path)
        return data


# ---------------------------------------------------------------------------
# Cycle enumeration
# ---------------------------------------------------------------------------

def _blocks(g: Multigraph, edges: Iterable[int]) -> list[list[int]]:
    """Group the non-loop edges of ``edges`` by block of the simple graph."""
    simple = nx.Graph()
    links = [e for e in edges if not g.is_loop(e)]
    simple.add_edges_from(g.ends(e) for e in links)
    block_of = {}
    for number, block in enumerate(nx.biconnected_component_edges(simple)):
        for u, v in block:
            block_of[frozenset((u, v))] = number
    grouped = defaultdict(list)
    for e in links:
        grouped[block_of[frozenset(g.ends(e))]].append(e)
    return [grouped[k] for k in sorted(grouped)]


def enumerate_cycles(
    g: Multigraph,
    limit: int | None = None,
    max_length: int | None = None,
    edges: Iterable[int] | None = None,
) -> list[Cycle]:
    """Every cycle of ``g`` exactly once, in lexicographic order.

    Args:
        g: The multigraph.
        limit: Maximum number of cycles before CycleLimitExceeded; defaults
            to the configured CYCLE_LIMIT.
        max_length: Restrict to cycles with at most this many edges.
        edges: Restrict to the subgraph on these edges (labels unchanged).

    Returns:
        Sorted list of cycles as sorted edge tuples.
    """
    if limit is None:
        limit = get_config().CYCLE_LIMIT
    pool = range(g.edge_count) if edges is None else sorted(set(edges))

    found: list[Cycle] = [(e,) for e in pool if g.is_loop(e)]
    if len(found) > limit:
        raise CycleLimitExceeded(f"more than {limit} cycles", limit)

    for block in _blocks(g, pool):
        if len(block) < 2:
            continue
        adjacency = defaultdict(list)
        for e in block:
            u, v = g.ends(e)
            adjacency[u].append((e, v))
            adjacency[v].append((e, u))
        for start in sorted(adjacency):
            _cycles_from(start, adjacency, found, limit, max_length)

    found.sort()
    logger.debug(f"Enumerated {len(found)} cycles on {g.edge_count} edges")
    return found


def _cycles_from(start, adjacency, found, limit, max_length):
    path_edges: list[int] = []
    on_path = {start}

    def extend(current):
        for e, w in adjacency[current]:
            if w < start:
                continue
            if path_edges and e == path_edges[-1]:
                continue
            if w == start:
                # Keep one traversal direction: first edge < closing edge
                if path_edges and path_edges[0] < e:
                    if max_length is None or len(path_edges) + 1 <= max_length:
                        found.append(tuple(sorted(path_edges + [e])))
                        if len(found) > limit:
                            raise CycleLimitExceeded(f"more than {limit} cycles", limit)
                continue
            if w in on_path:
                continue
            if max_length is not None and len(path_edges) + 2 > max_length:
                continue
            path_edges.append(e)
            on_path.add(w)
            extend(w)
            on_path.discard(w)
            path_edges.pop()

    extend(start)


def cycle_index(g: Multigraph, limit: int | None = None,
                max_length: int | None = None) -> CycleIndex:
    return CycleIndex(g, tuple(enumerate_cycles(g, limit=limit, max_length=max_length)))


def cycles_within(g: Multigraph, x: Iterable[int]) -> list[Cycle]:
    return enumerate_cycles(g, edges=x)


# ---------------------------------------------------------------------------
# Components and cyclomatic number
# ---------------------------------------------------------------------------

def components(g: Multigraph, x: Iterable[int]) -> list[EdgeSet]:
    """Edge sets of the connected components of G[x], ordered by first edge."""
    x = edge_set(x)
    if not x:
        return []
    view = g.to_networkx(x)
    parts = []
    for vertices in nx.connected_components(view):
        part = edge_set(key for _, _, key in view.edges(vertices, keys=True))
        parts.append(part)
    return sorted(parts)


def component_masks(g: Multigraph, mask: int) -> list[tuple[int, int]]:
    """(edge mask, vertex mask) per component of G[mask]; cheap bitmask version."""
    parts: list[list[int]] = []
    vertex_masks = g.edge_vertex_masks
    remaining = mask
    while remaining:
        low = remaining & -remaining
        e = low.bit_length() - 1
        remaining ^= low
        emask, vmask = low, vertex_masks[e]
        merged = []
        for index, (pe, pv) in enumerate(parts):
            if pv & vmask:
                emask |= pe
                vmask |= pv
                merged.append(index)
        for index in reversed(merged):
            parts.pop(index)
        parts.append([emask, vmask])
    return [(pe, pv) for pe, pv in parts]


def component_count(g: Multigraph, x: Iterable[int]) -> int:
    return len(components(g, x))


def cyclomatic_number(g: Multigraph, x: Iterable[int]) -> int:
    """|x| - |V(x)| + c(x)."""
    x = edge_set(x)
    return len(x) - len(g.vertices_of(x)) + component_count(g, x)


def mask_cyclomatic_number(g: Multigraph, mask: int) -> int:
    parts = component_masks(g, mask)
    vertices = 0
    for _, pv in parts:
        vertices |= pv
    return popcount(mask) - popcount(vertices) + len(parts)


# ---------------------------------------------------------------------------
# Shapes
# ---------------------------------------------------------------------------

def classify_subgraph(g: Multigraph, x: Iterable[int]) -> SubgraphShape:
    """Structural tag of G[x].

    Forest and SingleCycle need no witnesses; the two-cycle shapes report
    their cycles, and a loose handcuff also reports its connecting path.
    """
    x = edge_set(x)
    if not x:
        return SubgraphShape(ShapeKind.FOREST)
    parts = components(g, x)
    beta = len(x) - len(g.vertices_of(x)) + len(parts)
    if beta == 0:
        return SubgraphShape(ShapeKind.FOREST)
    if min(g.degrees(x).values()) < 2:
        return SubgraphShape(ShapeKind.OTHER)

    if len(parts) == 1:
        if beta == 1:
            return SubgraphShape(ShapeKind.SINGLE_CYCLE, (x,))
        if beta == 2:
            inner = cycles_within(g, x)
            if len(inner) == 3:
                return SubgraphShape(ShapeKind.THETA, tuple(inner))
            first, second = inner
            if g.vertices_of(first) & g.vertices_of(second):
                return SubgraphShape(ShapeKind.TIGHT_HANDCUFF, (first, second))
            path = edge_set(set(x) - set(first) - set(second))
            return SubgraphShape(ShapeKind.LOOSE_HANDCUFF, (first, second), path)
        return SubgraphShape(ShapeKind.OTHER)

    if len(parts) == 2 and beta == 2:
        # Minimum degree 2 and one cycle per component: two disjoint cycles
        return SubgraphShape(ShapeKind.BRACELET, tuple(sorted(parts)))
    return SubgraphShape(ShapeKind.OTHER)


def walk_cycle(g: Multigraph, cycle: Iterable[int]) -> list[tuple[int, int, int]]:
    """Oriented traversal (edge, tail, head) of a cycle starting at its first edge."""
    cycle = edge_set(cycle)
    first = cycle[0]
    u, v = g.ends(first)
    walk = [(first, u, v)]
    if u == v:
        return walk
    remaining = set(cycle[1:])
    current = v
    while remaining:
        step = next(e for e in sorted(remaining) if current in g.ends(e))
        a, b = g.ends(step)
        head = b if a == current else a
        walk.append((step, current, head))
        remaining.discard(step)
        current = head
    return walk


def simple_paths(
    g: Multigraph,
    sources: Iterable[int],
    targets: Iterable[int],
    blocked: Iterable[int] = (),
    edges: Iterable[int] | None = None,
) -> Iterator[EdgeSet]:
    """Simple paths with at least one edge from a source to a target.

    Internal vertices avoid sources, targets and ``blocked``; loops are
    never used. Parallel edges give distinct paths.
    """
    sources = set(sources)
    targets = set(targets)
    forbidden = sources | targets | set(blocked)
    pool = range(g.edge_count) if edges is None else edges
    adjacency = defaultdict(list)
    for e in pool:
        u, v = g.ends(e)
        if u != v:
            adjacency[u].append((e, v))
            adjacency[v].append((e, u))

    def extend(current, path, visited):
        for e, w in adjacency[current]:
            if w in visited:
                continue
            if w in targets:
                yield edge_set(path + [e])
                continue
            if w in forbidden:
                continue
            visited.add(w)
            path.append(e)
            yield from extend(w, path, visited)
            path.pop()
            visited.discard(w)

    seen: set[EdgeSet] = set()
    for source in sorted(sources):
        for result in extend(source, [], {source}):
            if result not in seen:
                seen.add(result)
                yield result


# ---------------------------------------------------------------------------
# Connectivity
# ---------------------------------------------------------------------------

def _simple_view(g: Multigraph, vertices: Iterable[int]) -> nx.Graph:
    view = nx.Graph()
    view.add_nodes_from(vertices)
    keep = set(view.nodes)
    view.add_edges_from(
        (u, v) for u, v in g.edges if u != v and u in keep and v in keep
    )
    return view


def cut_vertices(g: Multigraph) -> list[int]:
    return sorted(nx.articulation_points(_simple_view(g, range(g.vertex_count))))


def is_connected(g: Multigraph) -> bool:
    if g.vertex_count == 0:
        return True
    return nx.is_connected(_simple_view(g, range(g.vertex_count)))


def is_k_connected(g: Multigraph, k: int) -> bool:
    """More than k vertices and connected after removing any k-1 of them."""
    vertices = list(range(g.vertex_count))
    if len(vertices) <= k:
        return False
    for size in range(k):
        for removed in itertools.combinations(vertices, size):
            rest = [v for v in vertices if v not in removed]
            if not nx.is_connected(_simple_view(g, rest)):
                return False
    return True


def is_2_connected(g: Multigraph) -> bool:
    return is_k_connected(g, 2)


def is_4_connected(g: Multigraph) -> bool:
    return is_k_connected(g, 4)


def union_mask(masks: Iterable[int]) -> int:
    total = 0
    for mask in masks:
        total |= mask
    return total
