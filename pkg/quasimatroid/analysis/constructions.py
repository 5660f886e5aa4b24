"""
Minors and sums of tripartitioned graphs.

Edge labels are always renumbered stably: surviving edges keep their
relative order, and in a sum the first summand's edges precede the
second's. Every operation that changes labels reports the old-to-new map.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from quasimatroid.analysis.bias import biased_graph
from quasimatroid.analysis.graph_core import cycle_index, simple_paths
from quasimatroid.analysis.matroid import circuits, circuits_chi, frame_circuits, lift_circuits
from quasimatroid.analysis.tripartition import require_proper
from quasimatroid.bitsets import from_mask, iter_bits, to_mask
from quasimatroid.common import (
    BasepointNotLink,
    BasepointNotUnbalancedLoop,
    Cycle,
    EdgeSetCollision,
    LoopContraction,
    Side,
    edge_set,
)
from quasimatroid.models import (
    BiasedGraph,
    BraceletFunction,
    CircuitFamily,
    CycleIndex,
    Multigraph,
    Tripartition,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SumResult:
    """Outcome of a sum: the glued graph, its circuits, and per-summand edge maps.

    ``edge_maps[k]`` sends an edge of summand ``k`` to its label in the
    result; dropped basepoints are absent.
    """

    graph: Multigraph | None
    circuits: CircuitFamily
    tripartition: Tripartition | None = None
    edge_maps: tuple[Mapping[int, int], ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        data = {
            'circuits': self.circuits.to_list(),
            'edge_map': [
                {'summand': k, 'old': old, 'new': new}
                for k, mapping in enumerate(self.edge_maps)
                for old, new in sorted(mapping.items())
            ],
        }
        if self.graph is not None:
            data['graph'] = self.graph.to_dict()
        return data


# ---------------------------------------------------------------------------
# Minors
# ---------------------------------------------------------------------------

def surviving_edge_map(edge_count: int, removed: Iterable[int]) -> dict[int, int]:
    removed = set(removed)
    kept = [e for e in range(edge_count) if e not in removed]
    return {old: new for new, old in enumerate(kept)}


def delete_edges(t: Tripartition, edges: Iterable[int]) -> Tripartition:
    """Delete a set of edges; cycles avoiding them keep their class."""
    g = t.graph
    removed = set(edges)
    mapping = surviving_edge_map(g.edge_count, removed)
    minor = Multigraph(g.vertex_count, tuple(g.edges[e] for e in sorted(mapping)))

    classes: dict[Side, list[Cycle]] = {Side.B: [], Side.L: [], Side.F: []}
    kept = []
    for cycle in t.cycles:
        if removed.isdisjoint(cycle):
            renamed = tuple(mapping[e] for e in cycle)
            kept.append(renamed)
            classes[t.side_of(cycle)].append(renamed)
    index = CycleIndex(minor, tuple(sorted(kept)))
    result = Tripartition(
        index,
        frozenset(classes[Side.B]),
        frozenset(classes[Side.L]),
        frozenset(classes[Side.F]),
    )
    return require_proper(result)


def delete(t: Tripartition, e: int) -> Tripartition:
    _check_edge(t.graph, e)
    return delete_edges(t, [e])


def delete_vertex(t: Tripartition, v: int) -> Tripartition:
    """Delete every edge at v; the vertex stays, isolated."""
    if not 0 <= v < t.graph.vertex_count:
        raise ValueError(f"vertex {v} is not in the graph")
    return delete_edges(t, t.graph.incident_edges(v))


def restrict(t: Tripartition, edges: Iterable[int]) -> Tripartition:
    keep = set(edges)
    return delete_edges(t, [e for e in range(t.graph.edge_count) if e not in keep])


def contract(t: Tripartition, e: int) -> Tripartition:
    """Contract the link e.

    A cycle C of G/e takes the class of C in G when C is a cycle there,
    and otherwise the class of C + e.

    Raises:
        LoopContraction: e is a loop.
    """
    g = t.graph
    _check_edge(g, e)
    if g.is_loop(e):
        raise LoopContraction(f"edge {e} is a loop; use minor_circuits for loop contraction")
    u, v = g.ends(e)

    def merged(w: int) -> int:
        w = u if w == v else w
        return w - 1 if w > v else w

    mapping = surviving_edge_map(g.edge_count, [e])
    back = {new: old for old, new in mapping.items()}
    minor = Multigraph(
        g.vertex_count - 1,
        tuple((merged(a), merged(b)) for a, b in (g.edges[old] for old in sorted(mapping))),
    )
    index = cycle_index(minor)
    classes: dict[Side, list[Cycle]] = {Side.B: [], Side.L: [], Side.F: []}
    for cycle in index.cycles:
        original = tuple(back[f] for f in cycle)
        if original not in t.cycles:
            original = edge_set(original + (e,))
        classes[t.side_of(original)].append(cycle)
    result = Tripartition(
        index,
        frozenset(classes[Side.B]),
        frozenset(classes[Side.L]),
        frozenset(classes[Side.F]),
    )
    return require_proper(result)


def minor(t: Tripartition, deletions: Iterable[int] = (),
          contractions: Iterable[int] = ()) -> tuple[Tripartition, dict[int, int]]:
    """Delete, then contract one link at a time.

    Returns the minor and the map from surviving original edges to their
    labels in it.
    """
    deletions, contractions = set(deletions), set(contractions)
    if deletions & contractions:
        raise ValueError(f"edges {sorted(deletions & contractions)} both deleted and contracted")
    for e in deletions | contractions:
        _check_edge(t.graph, e)
    labels = surviving_edge_map(t.graph.edge_count, deletions)
    current = delete_edges(t, deletions) if deletions else t
    for e in sorted(contractions):
        here = labels.pop(e)
        current = contract(current, here)
        labels = {old: new - 1 if new > here else new for old, new in labels.items()}
    return current, labels


def minor_circuits(cf: CircuitFamily, deletions: Iterable[int] = (),
                   contractions: Iterable[int] = ()) -> CircuitFamily:
    """Circuits of M \\ D / C on the surviving elements, relabelled stably."""
    deleted = to_mask(deletions)
    contracted = to_mask(contractions)
    if deleted & contracted:
        raise ValueError(f"edges {list(iter_bits(deleted & contracted))} both deleted and contracted")
    remaining = cf.masks
    survivors = [m & ~contracted for m in remaining if not m & deleted]
    family = CircuitFamily.minimal_of(cf.ground_size, (from_mask(m) for m in survivors))
    mapping = surviving_edge_map(cf.ground_size, iter_bits(deleted | contracted))
    return family.relabel(mapping, len(mapping))


def _check_edge(g: Multigraph, e: int) -> None:
    if not 0 <= e < g.edge_count:
        raise ValueError(f"edge {e} is not in the graph")


# ---------------------------------------------------------------------------
# Sums
# ---------------------------------------------------------------------------

def glue(first: Multigraph, second: Multigraph, identify: Mapping[int, int],
         drop_first: Iterable[int] = (), drop_second: Iterable[int] = ()):
    """Disjoint union with vertices of ``second`` identified into ``first``.

    Unidentified vertices of ``second`` are numbered after those of
    ``first`` in increasing order.

    Returns:
        (graph, first edge map, second edge map)
    """
    vertex_map = {}
    next_label = first.vertex_count
    for w in range(second.vertex_count):
        if w in identify:
            vertex_map[w] = identify[w]
        else:
            vertex_map[w] = next_label
            next_label += 1

    edges = []
    first_map, second_map = {}, {}
    drop_first, drop_second = set(drop_first), set(drop_second)
    for e, ends in enumerate(first.edges):
        if e not in drop_first:
            first_map[e] = len(edges)
            edges.append(ends)
    for e, (a, b) in enumerate(second.edges):
        if e not in drop_second:
            second_map[e] = len(edges)
            edges.append((vertex_map[a], vertex_map[b]))
    return Multigraph(next_label, tuple(edges)), first_map, second_map


def two_sum_circuits(cf1: CircuitFamily, e1: int, cf2: CircuitFamily, e2: int) -> SumResult:
    """Circuits of the 2-sum along basepoints e1 and e2."""
    map1 = surviving_edge_map(cf1.ground_size, [e1])
    map2 = {old: len(map1) + new for old, new in surviving_edge_map(cf2.ground_size, [e2]).items()}

    members = []
    through1, through2 = [], []
    for circuit in cf1:
        if e1 in circuit:
            through1.append([map1[f] for f in circuit if f != e1])
        else:
            members.append([map1[f] for f in circuit])
    for circuit in cf2:
        if e2 in circuit:
            through2.append([map2[f] for f in circuit if f != e2])
        else:
            members.append([map2[f] for f in circuit])
    for left in through1:
        for right in through2:
            members.append(left + right)

    family = CircuitFamily.of(len(map1) + len(map2), members)
    return SumResult(None, family, None, (map1, map2))


def link_sum(t1: Tripartition, e1: int, g2: Multigraph, e2: int) -> SumResult:
    """Glue G1 and G2 along the links e1 and e2, then delete both.

    G2 carries its cycle matroid, so cycles inside G2 are balanced; a cycle
    using edges of both sides takes the class of its G1 part plus e1.

    Raises:
        BasepointNotLink: e1 or e2 is a loop or out of range.
    """
    g1 = t1.graph
    for name, g, e in (('first', g1, e1), ('second', g2, e2)):
        if not 0 <= e < g.edge_count or g.is_loop(e):
            raise BasepointNotLink(f"basepoint {e} of the {name} summand is not a link")
    u1, v1 = g1.ends(e1)
    u2, v2 = g2.ends(e2)
    graph, map1, map2 = glue(g1, g2, {u2: u1, v2: v1}, [e1], [e2])
    back1 = {new: old for old, new in map1.items()}

    index = cycle_index(graph)
    classes: dict[Side, list[Cycle]] = {Side.B: [], Side.L: [], Side.F: []}
    for cycle in index.cycles:
        first_part = [back1[f] for f in cycle if f in back1]
        if not first_part:
            side = Side.B
        elif len(first_part) == len(cycle):
            side = t1.side_of(edge_set(first_part))
        else:
            side = t1.side_of(edge_set(first_part + [e1]))
        classes[side].append(cycle)
    t = require_proper(Tripartition(
        index,
        frozenset(classes[Side.B]),
        frozenset(classes[Side.L]),
        frozenset(classes[Side.F]),
    ))
    logger.debug(f"Link-sum: {g1.edge_count} + {g2.edge_count} edges -> {graph.edge_count}")
    return SumResult(graph, circuits(t), t, (map1, map2))


def loop_sum(bg1: BiasedGraph, e1: int, bg2: BiasedGraph, e2: int,
             chi1: BraceletFunction, chi2: BraceletFunction) -> SumResult:
    """Identify the ends of two unbalanced loops, then delete the loops.

    The circuits are the 2-sum of M(G1, B1, chi1) and M(G2, B2, chi2).

    Raises:
        BasepointNotUnbalancedLoop: a basepoint is not an unbalanced loop.
    """
    for name, bg, e in (('first', bg1, e1), ('second', bg2, e2)):
        g = bg.graph
        if not 0 <= e < g.edge_count or not g.is_loop(e) or bg.is_balanced_cycle((e,)):
            raise BasepointNotUnbalancedLoop(
                f"basepoint {e} of the {name} summand is not an unbalanced loop"
            )
    w1 = bg1.graph.ends(e1)[0]
    w2 = bg2.graph.ends(e2)[0]
    graph, map1, map2 = glue(bg1.graph, bg2.graph, {w2: w1}, [e1], [e2])
    summed = two_sum_circuits(circuits_chi(bg1, chi1), e1, circuits_chi(bg2, chi2), e2)
    return SumResult(graph, summed.circuits, None, (map1, map2))


def broken_handcuff(core: BiasedGraph, satellites: Mapping[int, BiasedGraph]) -> SumResult:
    """The broken handcuff matroid of a core biased graph and satellites.

    Satellite ``G_v`` is attached by identifying its vertex 0 with core
    vertex v. Circuits: frame circuits of the core, lift circuits of each
    satellite, an unbalanced cycle of a satellite with an unbalanced core
    cycle and a path from v to it, and unbalanced cycles of two satellites
    with a core path between their attachment vertices.
    """
    g = core.graph
    for v in satellites:
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"satellite vertex {v} is not a vertex of the core")

    graph = g
    maps: dict[int, dict[int, int]] = {}
    for v in sorted(satellites):
        graph, _, maps[v] = glue(graph, satellites[v].graph, {0: v})
    labels = [new for v in maps for new in maps[v].values()]
    if len(set(labels)) != len(labels) or any(label < g.edge_count for label in labels):
        raise EdgeSetCollision("satellite edge sets overlap after relabelling")

    members: list[list[int]] = [list(c) for c in frame_circuits(core)]
    unbalanced_sat: dict[int, list[list[int]]] = {}
    for v in sorted(satellites):
        sat = satellites[v]
        mapping = maps[v]
        members.extend([mapping[f] for f in c] for c in lift_circuits(sat))
        unbalanced_sat[v] = [[mapping[f] for f in c] for c in sat.unbalanced]

    core_index = core.cycles
    for v, sat_cycles in unbalanced_sat.items():
        for row in core.unbalanced_rows:
            cycle = list(core_index.cycles[row])
            vertices = set(iter_bits(core_index.vertex_masks[row]))
            if v in vertices:
                paths = [()]
            else:
                paths = list(simple_paths(g, [v], vertices))
            for path in paths:
                for other in sat_cycles:
                    members.append(cycle + list(path) + other)

    attached = sorted(unbalanced_sat)
    for k, v in enumerate(attached):
        for w in attached[k + 1:]:
            for path in simple_paths(g, [v], [w]):
                for first in unbalanced_sat[v]:
                    for second in unbalanced_sat[w]:
                        members.append(first + list(path) + second)

    family = CircuitFamily.of(graph.edge_count, members)
    identity = {e: e for e in range(g.edge_count)}
    return SumResult(graph, family, None, (identity,) + tuple(maps[v] for v in sorted(maps)))


def with_loop(bg: BiasedGraph, v: int) -> tuple[BiasedGraph, int]:
    """``bg`` with an extra unbalanced loop at v; returns the new loop's label."""
    g = bg.graph
    extended = Multigraph(g.vertex_count, g.edges + ((v, v),))
    loop = g.edge_count
    return biased_graph(extended, bg.balanced), loop
