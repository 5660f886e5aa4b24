from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import networkx as nx

from quasimatroid.common import EdgeSet, InvalidGraph


@dataclass(frozen=True)
class Multigraph:
    """Vertices ``0..vertex_count-1`` and an ordered edge list.

    Edge identity is the position in ``edges``; ``(u, u)`` is a loop and
    repeated pairs are parallel edges. Nothing reorders the edge list.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidGraph(f"vertex_count must be nonnegative, got {self.vertex_count}")
        normalised = []
        for index, pair in enumerate(self.edges):
            if len(pair) != 2:
                raise InvalidGraph(f"edge {index} must have two endpoints, got {pair!r}")
            u, v = int(pair[0]), int(pair[1])
            for end in (u, v):
                if not 0 <= end < self.vertex_count:
                    raise InvalidGraph(
                        f"edge {index} endpoint {end} outside 0..{self.vertex_count - 1}"
                    )
            normalised.append((u, v))
        object.__setattr__(self, 'edges', tuple(normalised))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Iterable[int]]) -> Multigraph:
        return cls(vertex_count, tuple(tuple(e) for e in edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def ground(self) -> EdgeSet:
        return tuple(range(len(self.edges)))

    def ends(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def is_loop(self, e: int) -> bool:
        u, v = self.edges[e]
        return u == v

    def loops_at(self, v: int) -> EdgeSet:
        return tuple(e for e, (a, b) in enumerate(self.edges) if a == b == v)

    def star(self, v: int) -> EdgeSet:
        """Non-loop edges at ``v``."""
        return tuple(e for e, (a, b) in enumerate(self.edges) if a != b and v in (a, b))

    def incident_edges(self, v: int) -> EdgeSet:
        return tuple(e for e, (a, b) in enumerate(self.edges) if v in (a, b))

    def edges_avoiding(self, vertices: Iterable[int]) -> EdgeSet:
        blocked = set(vertices)
        return tuple(
            e for e, (a, b) in enumerate(self.edges)
            if a not in blocked and b not in blocked
        )

    @cached_property
    def edge_vertex_masks(self) -> tuple[int, ...]:
        return tuple((1 << u) | (1 << v) for u, v in self.edges)

    def vertices_of(self, x: Iterable[int]) -> frozenset[int]:
        found = set()
        for e in x:
            found.update(self.edges[e])
        return frozenset(found)

    def vertex_mask(self, x: Iterable[int]) -> int:
        mask = 0
        masks = self.edge_vertex_masks
        for e in x:
            mask |= masks[e]
        return mask

    def degrees(self, x: Iterable[int]) -> dict[int, int]:
        """Degree of each vertex of G[x]; a loop counts twice."""
        degree: dict[int, int] = {}
        for e in x:
            u, v = self.edges[e]
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        return degree

    def to_networkx(self, x: Iterable[int] | None = None, *, all_vertices: bool = False) -> nx.MultiGraph:
        """MultiGraph view keyed by edge index.

        Only edge-incident vertices are added unless ``all_vertices`` is set.
        """
        graph = nx.MultiGraph()
        if all_vertices:
            graph.add_nodes_from(range(self.vertex_count))
        chosen = range(len(self.edges)) if x is None else x
        for e in chosen:
            u, v = self.edges[e]
            graph.add_edge(u, v, key=e)
        return graph

    def compact(self) -> tuple[Multigraph, dict[int, int]]:
        """Drop isolated vertices; returns the graph and the old->new vertex map."""
        used = sorted(self.vertices_of(range(len(self.edges))))
        relabel = {old: new for new, old in enumerate(used)}
        edges = tuple((relabel[u], relabel[v]) for u, v in self.edges)
        return Multigraph(len(used), edges), relabel

    def to_dict(self) -> dict:
        return {'vertices': self.vertex_count, 'edges': [list(e) for e in self.edges]}
