"""
The matroid of a proper tripartition or a proper bracelet function.

Circuits are generated shape by shape: balanced cycles, thetas with no
balanced cycle, tight handcuffs of unbalanced cycles, dependent bracelets
and loose handcuffs around independent bracelets. Rank comes from the
closed formula in RankOracle and never from the circuit list.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable

import networkx as nx
import numpy as np

from quasimatroid.analysis.bias import balanced_component_count, minimal_hitting_sets, theta_pairs
from quasimatroid.analysis.bracelets import is_proper
from quasimatroid.analysis.graph_core import (
    component_masks,
    components,
    enumerate_cycles,
    simple_paths,
)
from quasimatroid.analysis.tripartition import (
    frame_tripartition,
    is_degenerate,
    lift_tripartition,
    require_proper,
)
from quasimatroid.bitsets import from_mask, iter_bits, popcount, popcount_array, to_mask
from quasimatroid.common import (
    DegenerateTripartition,
    EdgeSet,
    GroundSetTooLarge,
    ImproperChi,
    Side,
)
from quasimatroid.config import get_config
from quasimatroid.models import (
    BiasedGraph,
    BraceletFunction,
    CircuitFamily,
    CycleIndex,
    Multigraph,
    Tripartition,
)

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Rank
# ---------------------------------------------------------------------------

class RankOracle:
    """Rank of edge sets of M(G, B, L, F) by the closed formula.

    r(X) = |V(X)| - b(X) when G[X] holds an F-cycle, and otherwise
    |V(X)| - c(X) + l(X) where l(X) is 1 exactly when G[X] holds an L-cycle.
    """

    def __init__(self, t: Tripartition):
        self.tripartition = t
        self.graph = t.graph
        self._lift = t.lift_masks
        self._frame = t.frame_masks
        self._unbalanced = self._lift + self._frame
        self._cache: dict[int, int] = {}

    @classmethod
    def frame(cls, bg: BiasedGraph) -> RankOracle:
        return cls(frame_tripartition(bg))

    @classmethod
    def lift(cls, bg: BiasedGraph) -> RankOracle:
        return cls(lift_tripartition(bg))

    @property
    def ground_size(self) -> int:
        return self.graph.edge_count

    def rank(self, x: Iterable[int] | int) -> int:
        mask = x if isinstance(x, int) else to_mask(x)
        cached = self._cache.get(mask)
        if cached is None:
            cached = self._rank(mask)
            self._cache[mask] = cached
        return cached

    __call__ = rank

    def _rank(self, mask: int) -> int:
        if _holds_any(mask, self._frame):
            return self._frame_rank(mask)
        return self._lift_rank(mask)

    def frame_rank(self, x: Iterable[int] | int) -> int:
        """|V(X)| - b(X)."""
        return self._frame_rank(x if isinstance(x, int) else to_mask(x))

    def lift_rank(self, x: Iterable[int] | int) -> int:
        """|V(X)| - c(X) + l(X), with l taken over all unbalanced cycles."""
        mask = x if isinstance(x, int) else to_mask(x)
        parts = component_masks(self.graph, mask)
        return _vertex_total(parts) - len(parts) + int(_holds_any(mask, self._unbalanced))

    def lift_indicator(self, x: Iterable[int] | int) -> int:
        mask = x if isinstance(x, int) else to_mask(x)
        return int(_holds_any(mask, self._lift))

    def _frame_rank(self, mask: int) -> int:
        parts = component_masks(self.graph, mask)
        balanced = balanced_component_count(self.graph, self._unbalanced, mask)
        return _vertex_total(parts) - balanced

    def _lift_rank(self, mask: int) -> int:
        parts = component_masks(self.graph, mask)
        return _vertex_total(parts) - len(parts) + int(_holds_any(mask, self._lift))

    def full_rank(self) -> int:
        return self.rank((1 << self.ground_size) - 1)


def _holds_any(mask: int, cycle_masks: Iterable[int]) -> bool:
    outside = ~mask
    return any(not c & outside for c in cycle_masks)


def _vertex_total(parts: list[tuple[int, int]]) -> int:
    vertices = 0
    for _, vmask in parts:
        vertices |= vmask
    return popcount(vertices)


def rank(oracle: RankOracle, x: Iterable[int]) -> int:
    return oracle.rank(x)


def circuit_rank(cf: CircuitFamily, x: Iterable[int]) -> int:
    """Greedy rank of x from a circuit family."""
    masks = cf.masks
    independent = 0
    for e in sorted(set(x)):
        grown = independent | (1 << e)
        if not any(not c & ~grown for c in masks):
            independent = grown
    return popcount(independent)


# ---------------------------------------------------------------------------
# Circuits
# ---------------------------------------------------------------------------

def circuits(t: Tripartition, check: bool = True) -> CircuitFamily:
    """C(G, B, L, F): balanced cycles, B-free thetas, tight handcuffs,
    L-L bracelets and F-F loose handcuffs.

    Raises:
        ImproperTripartition: ``check`` is set and t is not proper.
    """
    if check:
        require_proper(t)
    index = t.cycles
    dependent = index.disjoint_pairs(t.rows(Side.L))
    handcuffed = index.disjoint_pairs(t.rows(Side.F))
    return _circuit_family(t.biased_graph, dependent, handcuffed)


def circuits_chi(bg: BiasedGraph, chi: BraceletFunction, check: bool = True) -> CircuitFamily:
    """C(G, B, chi): as circuits() with bracelets split by their chi value.

    Raises:
        ImproperChi: chi names a pair that is not a bracelet of ``bg``, or
            ``check`` is set and chi is not total or not proper.
    """
    if check:
        violation = is_proper(bg, chi)
        if violation is not None:
            raise ImproperChi("bracelet function is not proper", violation)
    index = bg.cycles
    dependent, handcuffed = [], []
    for bracelet in chi:
        try:
            pair = (index.index_of(bracelet.cycle_a), index.index_of(bracelet.cycle_b))
        except KeyError:
            raise ImproperChi(
                f"{bracelet.to_dict()} is not a pair of cycles of the graph"
            ) from None
        (dependent if chi.is_dependent(bracelet) else handcuffed).append(pair)
    return _circuit_family(bg, dependent, handcuffed)


def frame_circuits(bg: BiasedGraph) -> CircuitFamily:
    return circuits(frame_tripartition(bg), check=False)


def lift_circuits(bg: BiasedGraph) -> CircuitFamily:
    return circuits(lift_tripartition(bg), check=False)


def graphic_circuits(g: Multigraph, cycles: CycleIndex | None = None) -> CircuitFamily:
    """The cycle matroid of g."""
    members = cycles.cycles if cycles is not None else enumerate_cycles(g)
    return CircuitFamily(g.edge_count, tuple(members))


def _circuit_family(bg: BiasedGraph, dependent, handcuffed) -> CircuitFamily:
    index = bg.cycles
    masks = index.masks
    g = bg.graph
    found: set[int] = {masks[i] for i in bg.balanced_rows}

    unbalanced = bg.unbalanced_rows
    balanced_masks = {masks[i] for i in bg.balanced_rows}
    for i, j in theta_pairs(index, unbalanced):
        if masks[i] ^ masks[j] not in balanced_masks:
            found.add(masks[i] | masks[j])

    for i, j in _tight_pairs(index, unbalanced):
        found.add(masks[i] | masks[j])

    for i, j in dependent:
        found.add(masks[i] | masks[j])

    for i, j in handcuffed:
        shell = masks[i] | masks[j]
        sources = iter_bits(index.vertex_masks[i])
        targets = iter_bits(index.vertex_masks[j])
        for path in simple_paths(g, sources, targets):
            found.add(shell | to_mask(path))

    logger.debug(f"Generated {len(found)} circuits on {g.edge_count} edges")
    return CircuitFamily(g.edge_count, tuple(sorted(from_mask(m) for m in found)))


def _tight_pairs(index: CycleIndex, rows: list[int]):
    """Pairs of rows whose cycles share exactly one vertex."""
    rows = sorted(rows)
    vmasks = index.vertex_masks
    if index.array_ready and len(rows) > 64:
        vtable = index.vertex_mask_table[rows]
        for k in range(len(rows) - 1):
            common = popcount_array(vtable[k + 1:] & vtable[k])
            for offset in np.nonzero(common == 1)[0]:
                yield rows[k], rows[k + 1 + int(offset)]
        return
    for k, i in enumerate(rows):
        for j in rows[k + 1:]:
            if popcount(vmasks[i] & vmasks[j]) == 1:
                yield i, j


# ---------------------------------------------------------------------------
# Independence, bases and closure
# ---------------------------------------------------------------------------

def is_independent(t: Tripartition, x: Iterable[int]) -> bool:
    """G[x] is a forest, or has one cycle and it is in L, or each component
    has at most one cycle and every cycle is in F."""
    index = t.cycles
    mask = to_mask(x)
    inside = index.within(mask)
    if not inside:
        return True
    sides = {t.side_of(index.cycles[i]) for i in inside}
    if Side.B in sides:
        return False
    if len(inside) == 1 and sides == {Side.L}:
        return True
    if sides != {Side.F}:
        return False
    masks = index.masks
    for emask, _ in component_masks(t.graph, mask):
        if sum(1 for i in inside if not masks[i] & ~emask) > 1:
            return False
    return True


def bases(t: Tripartition, cap: int | None = None) -> list[EdgeSet]:
    """Every basis, in lexicographic order.

    Raises:
        GroundSetTooLarge: more than ``cap`` edges (default BASES_EDGE_CAP).
    """
    if cap is None:
        cap = get_config().BASES_EDGE_CAP
    n = t.graph.edge_count
    if n > cap:
        raise GroundSetTooLarge(f"{n} edges exceed the basis enumeration cap", cap)
    r = RankOracle(t).full_rank()
    return [
        combo for combo in itertools.combinations(range(n), r)
        if is_independent(t, combo)
    ]


def closure(cf: CircuitFamily, x: Iterable[int]) -> EdgeSet:
    """x with every edge e that closes a circuit inside x + e."""
    mask = to_mask(x)
    closed = mask
    for c in cf.masks:
        extra = c & ~mask
        if extra and extra & (extra - 1) == 0:
            closed |= extra
    return from_mask(closed)


# ---------------------------------------------------------------------------
# Cocircuits
# ---------------------------------------------------------------------------

def cocircuits(t: Tripartition) -> list[EdgeSet]:
    """Cocircuits of a tripartition with neither side degenerate.

    Candidates are minimal balancing sets, bonds, and unions of the edge
    cut of a connected vertex set with a (possibly empty) minimal balancing
    set of the subgraph it induces. Each candidate is kept when its
    complement is a hyperplane.

    Raises:
        DegenerateTripartition: L or F is degenerate.
    """
    for side in (Side.L, Side.F):
        if is_degenerate(t, side):
            raise DegenerateTripartition(
                f"{side.value} is degenerate; use the brute-force cocircuit oracle"
            )
    oracle = RankOracle(t)
    g = t.graph
    ground = (1 << g.edge_count) - 1
    r = oracle.full_rank()

    candidates = _cocircuit_candidates(t)
    kept = []
    for mask in sorted(candidates):
        rest = ground & ~mask
        if oracle.rank(rest) != r - 1:
            continue
        if all(oracle.rank(rest | (1 << e)) == r for e in iter_bits(mask)):
            kept.append(mask)
    logger.debug(f"{len(kept)} of {len(candidates)} cocircuit candidates confirmed")
    return sorted(from_mask(m) for m in kept)


def _cocircuit_candidates(t: Tripartition) -> set[int]:
    g = t.graph
    bg = t.biased_graph
    unbalanced = bg.unbalanced_masks
    candidates: set[int] = set()
    candidates.update(to_mask(b) for b in minimal_hitting_sets(unbalanced))

    edge_ends = g.edges
    for size in range(1, g.vertex_count + 1):
        for chosen in itertools.combinations(range(g.vertex_count), size):
            inside = set(chosen)
            view = nx.Graph()
            view.add_nodes_from(inside)
            view.add_edges_from(
                (u, v) for u, v in edge_ends if u != v and u in inside and v in inside
            )
            if not nx.is_connected(view):
                continue
            cut = 0
            region = 0
            for e, (u, v) in enumerate(edge_ends):
                if (u in inside) != (v in inside):
                    cut |= 1 << e
                elif u in inside:
                    region |= 1 << e
            if cut:
                candidates.add(cut)
            local = [m for m in unbalanced if not m & ~region]
            for balancing in minimal_hitting_sets(local):
                candidates.add(cut | to_mask(balancing))
    candidates.discard(0)
    return candidates


# ---------------------------------------------------------------------------
# Framework axioms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FrameworkViolation:
    condition: int
    message: str
    witness: tuple = ()

    def to_dict(self) -> dict:
        return {'condition': self.condition, 'message': self.message,
                'witness': [list(w) if isinstance(w, tuple) else w for w in self.witness]}


def framework_check(cf: CircuitFamily, g: Multigraph) -> list[FrameworkViolation]:
    """Check the four framework conditions; an empty list means g is a framework."""
    violations: list[FrameworkViolation] = []
    if cf.ground_size != g.edge_count or any(c and c[-1] >= g.edge_count for c in cf):
        violations.append(FrameworkViolation(
            1, f"matroid ground set has {cf.ground_size} elements, graph has {g.edge_count} edges"
        ))
        return violations

    for part in components(g, g.ground):
        vertices = len(g.vertices_of(part))
        part_rank = circuit_rank(cf, part)
        if part_rank > vertices:
            violations.append(FrameworkViolation(
                2, f"component of rank {part_rank} spans only {vertices} vertices", (part,)
            ))

    for v in range(g.vertex_count):
        rest = g.edges_avoiding([v])
        allowed = set(rest) | set(g.loops_at(v))
        escaped = [e for e in closure(cf, rest) if e not in allowed]
        if escaped:
            violations.append(FrameworkViolation(
                3, f"closure of E(G - {v}) contains {escaped}", (v, tuple(escaped))
            ))

    for circuit in cf:
        count = len(components(g, circuit))
        if count > 2:
            violations.append(FrameworkViolation(
                4, f"circuit {list(circuit)} induces {count} components", (circuit,)
            ))
    return violations
