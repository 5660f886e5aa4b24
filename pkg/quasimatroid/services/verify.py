"""
Independent checks of the closed-form matroid machinery.

Each check compares one characterisation against a first-principles oracle
(subset tables, circuit chaining, greedy rank) and returns a
VerificationReport. A failing report always carries a witness that makes
the failure reproducible.
"""
from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass
from typing import Callable, Iterable

import networkx as nx
import numpy as np

from quasimatroid.analysis.bias import biased_graph
from quasimatroid.analysis.constructions import contract, delete, minor_circuits
from quasimatroid.analysis.graph_core import (
    classify_subgraph,
    cut_vertices,
    is_connected,
    mask_cyclomatic_number,
)
from quasimatroid.analysis.matroid import (
    RankOracle,
    bases,
    circuit_rank,
    circuits,
    cocircuits,
    frame_circuits,
    framework_check,
    is_independent,
    lift_circuits,
)
from quasimatroid.analysis.tripartition import (
    disjoint_pair,
    is_degenerate,
    require_proper,
    validate_proper,
)
from quasimatroid.bitsets import from_mask, iter_bits, lattice, popcount, superset_closure, to_mask
from quasimatroid.common import (
    CIRCUIT_SHAPES,
    CapExceeded,
    CheckResult,
    EdgeSet,
    FrameLift,
    Side,
)
from quasimatroid.config import get_config
from quasimatroid.models import CircuitFamily, Multigraph, Tripartition
from quasimatroid.services.brute_force import MatroidTable

logger = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    check: str
    instance: str
    result: CheckResult
    witness: dict | None = None
    seed: int | None = None
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.result != CheckResult.FAIL

    def to_dict(self, timing: bool = True) -> dict:
        return {
            'check': self.check,
            'instance': self.instance,
            'result': self.result.value,
            'witness': self.witness,
            'seed': self.seed,
            'elapsed_ms': round(self.elapsed_ms, 3) if timing else 0,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)


class _Stopwatch:
    """Times one check and builds its report."""

    def __init__(self, check: str, instance: str, seed: int | None = None):
        self.check = check
        self.instance = instance
        self.seed = seed
        self.started = time.perf_counter()

    def _finish(self, result: CheckResult, witness: dict | None) -> VerificationReport:
        elapsed = (time.perf_counter() - self.started) * 1000
        if result == CheckResult.FAIL:
            logger.info(f"{self.check} failed on {self.instance}: {witness}")
        return VerificationReport(self.check, self.instance, result, witness, self.seed, elapsed)

    def passed(self, note: dict | None = None) -> VerificationReport:
        return self._finish(CheckResult.PASS, note)

    def failed(self, witness: dict) -> VerificationReport:
        return self._finish(CheckResult.FAIL, witness)

    def skipped(self, reason: str) -> VerificationReport:
        return self._finish(CheckResult.SKIP, {'reason': reason})


def _edge_cap(cap: int | None) -> int:
    return get_config().EXHAUSTIVE_EDGE_CAP if cap is None else cap


# ---------------------------------------------------------------------------
# Matroid axioms
# ---------------------------------------------------------------------------

def circuit_axioms(cf: CircuitFamily, instance: str = '', cap: int | None = None) -> VerificationReport:
    """Nonempty members, incomparability and weak circuit elimination.

    Raises:
        CapExceeded: the ground set exceeds ``cap`` (default AXIOM_EDGE_CAP).
    """
    cap = get_config().AXIOM_EDGE_CAP if cap is None else cap
    width = cf.ground_size
    if width > cap:
        raise CapExceeded(f"{width} elements exceed the circuit-axiom cap", cap)
    watch = _Stopwatch('circuit_axioms', instance)

    if () in cf.as_set:
        return watch.failed({'empty_circuit': True})
    pair = cf.nested_pair()
    if pair is not None:
        return watch.failed({'contained': list(pair[0]), 'container': list(pair[1])})

    flags = np.zeros(1 << width, dtype=bool)
    masks = np.fromiter(cf.masks, dtype=np.int64, count=len(cf))
    flags[masks] = True
    dependent = superset_closure(flags, width)
    for i, first in enumerate(cf.masks):
        others = masks[i + 1:]
        common = others & first
        for e in iter_bits(first):
            bit = 1 << e
            chosen = np.nonzero(common & bit)[0]
            if not len(chosen):
                continue
            targets = (others[chosen] | first) & ~bit
            bad = np.nonzero(~dependent[targets])[0]
            if len(bad):
                second = int(others[chosen[bad[0]]])
                return watch.failed({
                    'c1': list(from_mask(first)),
                    'c2': list(from_mask(second)),
                    'e': e,
                })
    return watch.passed()


def rank_axioms(
    rank: Callable[[int], int] | RankOracle,
    ground: Iterable[int],
    instance: str = '',
    cap: int | None = None,
    seed: int | None = None,
    samples: int | None = None,
) -> VerificationReport:
    """Normalisation, unit increase, local submodularity on every subset of
    ``ground`` and plain submodularity on sampled pairs.

    Raises:
        CapExceeded: ``ground`` exceeds ``cap`` (default RANK_AXIOM_EDGE_CAP).
    """
    config = get_config()
    cap = config.RANK_AXIOM_EDGE_CAP if cap is None else cap
    seed = config.DEFAULT_SEED if seed is None else seed
    samples = config.SAMPLE_SIZE if samples is None else samples
    ground = sorted(set(ground))
    width = len(ground)
    if width > cap:
        raise CapExceeded(f"{width} elements exceed the rank-axiom cap", cap)
    watch = _Stopwatch('rank_axioms', instance, seed)
    rank_fn = rank.rank if isinstance(rank, RankOracle) else rank

    def lifted(local: int) -> int:
        return sum(1 << ground[i] for i in iter_bits(local))

    def named(local: int) -> list[int]:
        return [ground[i] for i in iter_bits(local)]

    table = MatroidTable.from_rank(width, lambda m: rank_fn(lifted(m)), cap=cap)
    ranks = table.ranks
    if ranks[0] != 0:
        return watch.failed({'axiom': 'normalisation', 'rank_of_empty': int(ranks[0])})

    idx = lattice(width)
    for i in range(width):
        bit = 1 << i
        lacks = idx[(idx & bit) == 0]
        step = ranks[lacks | bit] - ranks[lacks]
        bad = np.nonzero((step < 0) | (step > 1))[0]
        if len(bad):
            x = int(lacks[bad[0]])
            return watch.failed({'axiom': 'unit_increase', 'set': named(x), 'e': ground[i]})

    for i in range(width):
        for j in range(i + 1, width):
            both = (1 << i) | (1 << j)
            lacks = idx[(idx & both) == 0]
            lhs = ranks[lacks | (1 << i)] + ranks[lacks | (1 << j)]
            rhs = ranks[lacks | both] + ranks[lacks]
            bad = np.nonzero(lhs < rhs)[0]
            if len(bad):
                x = int(lacks[bad[0]])
                return watch.failed({
                    'axiom': 'submodularity', 'set': named(x), 'e': ground[i], 'f': ground[j],
                })

    rng = np.random.default_rng(seed)
    pairs = rng.integers(0, 1 << width, size=(samples, 2), dtype=np.int64)
    xs, ys = pairs[:, 0], pairs[:, 1]
    bad = np.nonzero(ranks[xs] + ranks[ys] < ranks[xs | ys] + ranks[xs & ys])[0]
    if len(bad):
        k = bad[0]
        return watch.failed({
            'axiom': 'submodularity', 'x': named(int(xs[k])), 'y': named(int(ys[k])),
        })
    return watch.passed()


# ---------------------------------------------------------------------------
# Cocircuits, bases, rank and independence agreement
# ---------------------------------------------------------------------------

def cocircuits_bruteforce(cf: CircuitFamily, cap: int | None = None) -> list[EdgeSet]:
    """Complements of hyperplanes, from the subset table.

    Raises:
        CapExceeded: the ground set exceeds ``cap`` (default EXHAUSTIVE_EDGE_CAP).
    """
    cap = _edge_cap(cap)
    if cf.ground_size > cap:
        raise CapExceeded(f"{cf.ground_size} elements exceed the cocircuit oracle cap", cap)
    return MatroidTable.from_circuits(cf, cap=cap).cocircuits()


def independence_agreement(t: Tripartition, instance: str = '',
                           cap: int | None = None) -> VerificationReport:
    """Circuit-freeness, the structural characterisation and the rank formula
    agree on every subset; basis counts agree too."""
    watch = _Stopwatch('independence_agreement', instance)
    width = t.graph.edge_count
    if width > _edge_cap(cap):
        return watch.skipped(f"{width} edges exceed the subset cap")
    table = MatroidTable.from_circuits(circuits(t, check=False), cap=width)
    oracle = RankOracle(t)
    for mask in range(1 << width):
        by_circuits = table.is_independent(mask)
        by_structure = is_independent(t, from_mask(mask))
        by_rank = oracle.rank(mask) == popcount(mask)
        if not by_circuits == by_structure == by_rank:
            return watch.failed({
                'set': list(from_mask(mask)),
                'circuits': by_circuits,
                'structure': by_structure,
                'rank': by_rank,
            })
    found = len(bases(t, cap=width))
    expected = len(table.basis_masks())
    if found != expected:
        return watch.failed({'bases': found, 'expected_bases': expected})
    return watch.passed({'bases': found})


def rank_agreement(t: Tripartition, instance: str = '', cap: int | None = None) -> VerificationReport:
    """Formula rank equals the rank read off the circuit family, on every subset."""
    watch = _Stopwatch('rank_agreement', instance)
    width = t.graph.edge_count
    if width > _edge_cap(cap):
        return watch.skipped(f"{width} edges exceed the subset cap")
    table = MatroidTable.from_circuits(circuits(t, check=False), cap=width)
    oracle = RankOracle(t)
    formula = np.fromiter((oracle.rank(m) for m in range(1 << width)), dtype=np.int64,
                          count=1 << width)
    bad = np.nonzero(formula != table.ranks)[0]
    if len(bad):
        mask = int(bad[0])
        return watch.failed({
            'set': list(from_mask(mask)),
            'formula': int(formula[mask]),
            'circuits': int(table.ranks[mask]),
        })
    return watch.passed()


def cocircuit_agreement(t: Tripartition, instance: str = '',
                        cap: int | None = None) -> VerificationReport:
    """Structural cocircuits equal hyperplane complements; stars are cocircuits
    when the graph is 2-connected."""
    watch = _Stopwatch('cocircuit_agreement', instance)
    width = t.graph.edge_count
    if width > _edge_cap(cap):
        return watch.skipped(f"{width} edges exceed the subset cap")
    if is_degenerate(t, Side.L) or is_degenerate(t, Side.F):
        return watch.skipped("a side is degenerate")
    structural = set(cocircuits(t))
    oracle = set(cocircuits_bruteforce(circuits(t, check=False), cap=width))
    if structural != oracle:
        return watch.failed({
            'missing': [list(c) for c in sorted(oracle - structural)],
            'extra': [list(c) for c in sorted(structural - oracle)],
        })
    g = t.graph
    if _is_block(g):
        for v in range(g.vertex_count):
            star = g.star(v)
            if star and star not in oracle:
                return watch.failed({'vertex': v, 'star': list(star)})
    return watch.passed({'cocircuits': len(oracle)})


# ---------------------------------------------------------------------------
# Minors
# ---------------------------------------------------------------------------

def minor_commutation(t: Tripartition, instance: str = '',
                      cap: int | None = None) -> VerificationReport:
    """Graph-level deletion and contraction agree with circuit-level minors."""
    watch = _Stopwatch('minor_commutation', instance)
    g = t.graph
    if g.edge_count > _edge_cap(cap):
        return watch.skipped(f"{g.edge_count} edges exceed the subset cap")
    cf = circuits(t, check=False)
    for e in range(g.edge_count):
        graph_level = circuits(delete(t, e), check=False)
        if graph_level != minor_circuits(cf, [e], []):
            return watch.failed({'operation': 'delete', 'edge': e})
        if g.is_loop(e):
            continue
        graph_level = circuits(contract(t, e), check=False)
        if graph_level != minor_circuits(cf, [], [e]):
            return watch.failed({'operation': 'contract', 'edge': e})
    return watch.passed()


# ---------------------------------------------------------------------------
# Ingleton
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IngletonWitness:
    a: EdgeSet
    b: EdgeSet
    c: EdgeSet
    d: EdgeSet
    value: int

    def to_dict(self) -> dict:
        return {'A': list(self.a), 'B': list(self.b), 'C': list(self.c), 'D': list(self.d),
                'value': self.value}


def ingleton_check(rank: Callable, a: Iterable[int] | int, b: Iterable[int] | int,
                   c: Iterable[int] | int, d: Iterable[int] | int) -> int:
    """Ingleton left side minus right side; negative means violated.

    Each set is an edge collection or a bitmask.
    """
    a, b, c, d = (x if isinstance(x, int) else to_mask(x) for x in (a, b, c, d))
    left = rank(a | b) + rank(a | c) + rank(a | d) + rank(b | c) + rank(b | d)
    right = rank(a) + rank(b) + rank(a | b | c) + rank(a | b | d) + rank(c | d)
    return left - right


def ingleton_search(t: Tripartition, cap: int | None = None) -> IngletonWitness | None:
    """A violating quadruple from disjoint L-cycles A, B and disjoint F-cycles C, D."""
    cap = get_config().QUADRUPLE_CAP if cap is None else cap
    index = t.cycles
    lift_pairs = index.disjoint_pairs(t.rows(Side.L))
    if not lift_pairs:
        return None
    frame_pairs = index.disjoint_pairs(t.rows(Side.F))
    oracle = RankOracle(t)
    masks = index.masks
    evaluated = 0
    for i, j in lift_pairs:
        for k, m in frame_pairs:
            evaluated += 1
            if evaluated > cap:
                logger.warning(f"Ingleton search stopped after {cap} quadruples")
                return None
            value = ingleton_check(oracle.rank, masks[i], masks[j], masks[k], masks[m])
            if value < 0:
                cycles = index.cycles
                return IngletonWitness(cycles[i], cycles[j], cycles[k], cycles[m], value)
    return None


def ingleton_exhaustive(table: MatroidTable, instance: str = '', cap: int | None = None,
                        seed: int | None = None, samples: int | None = None) -> VerificationReport:
    """Scan every subset quadruple, or a seeded sample beyond the cap.

    The inequality is symmetric in A, B so only A <= B is visited.
    """
    config = get_config()
    cap = config.QUADRUPLE_CAP if cap is None else cap
    seed = config.DEFAULT_SEED if seed is None else seed
    samples = config.SAMPLE_SIZE if samples is None else samples
    ranks = table.ranks
    size = 1 << table.width
    idx = lattice(table.width)
    total = size * (size + 1) // 2 * size * size

    if total > cap:
        watch = _Stopwatch('ingleton_exhaustive', instance, seed)
        logger.warning(f"Ingleton scan of {total} quadruples exceeds {cap}; sampling {samples}")
        rng = np.random.default_rng(seed)
        a, b, c, d = rng.integers(0, size, size=(4, samples), dtype=np.int64)
        values = (ranks[a | b] + ranks[a | c] + ranks[a | d] + ranks[b | c] + ranks[b | d]
                  - ranks[a] - ranks[b] - ranks[a | b | c] - ranks[a | b | d] - ranks[c | d])
        bad = np.nonzero(values < 0)[0]
        if len(bad):
            k = bad[0]
            return watch.failed(IngletonWitness(
                *(from_mask(int(x[k])) for x in (a, b, c, d)), int(values[k])
            ).to_dict())
        return watch.passed({'sampled': samples})

    watch = _Stopwatch('ingleton_exhaustive', instance)
    cd = ranks[np.bitwise_or.outer(idx, idx)]
    for a in range(size):
        with_a = ranks[a | idx]
        for b in range(a, size):
            ab = a | b
            with_b = ranks[b | idx]
            with_ab = ranks[ab | idx]
            values = (ranks[ab] - ranks[a] - ranks[b]
                      + (with_a + with_b - with_ab)[:, None]
                      + (with_a + with_b - with_ab)[None, :]
                      - cd)
            if values.min() < 0:
                c, d = np.unravel_index(int(values.argmin()), values.shape)
                return watch.failed(IngletonWitness(
                    from_mask(a), from_mask(b), from_mask(int(c)), from_mask(int(d)),
                    int(values[c, d]),
                ).to_dict())
    return watch.passed({'quadruples': total})


# ---------------------------------------------------------------------------
# Frame / lift classification
# ---------------------------------------------------------------------------

def classify_frame_lift(t: Tripartition, cap: int | None = None) -> FrameLift:
    """Compare circuits(t) with the frame and lift circuits of (G, B).

    Above ``cap`` edges (default AXIOM_EDGE_CAP) the answer comes from
    degeneracy, which is exact for a proper tripartition: a degenerate L
    gives the frame matroid, and two disjoint L-cycles form a circuit that
    is independent in the frame matroid. F and lift are symmetric.

    Raises:
        ImproperTripartition: t is above the cap and not proper.
    """
    cap = get_config().AXIOM_EDGE_CAP if cap is None else cap
    if t.graph.edge_count <= cap:
        family = circuits(t, check=False)
        bg = t.biased_graph
        is_frame = family == frame_circuits(bg)
        is_lift = family == lift_circuits(bg)
    else:
        require_proper(t)
        is_frame = is_degenerate(t, Side.L)
        is_lift = is_degenerate(t, Side.F)
    if is_frame and is_lift:
        return FrameLift.BOTH
    if is_frame:
        return FrameLift.FRAME
    if is_lift:
        return FrameLift.LIFT
    return FrameLift.NEITHER


def degenerate_reduction(t: Tripartition, instance: str = '',
                         cap: int | None = None) -> VerificationReport:
    """A degenerate L gives the frame matroid; a degenerate F gives the lift matroid."""
    watch = _Stopwatch('degenerate_reduction', instance)
    cap = get_config().AXIOM_EDGE_CAP if cap is None else cap
    if t.graph.edge_count > cap:
        return watch.skipped(f"{t.graph.edge_count} edges exceed the circuit comparison cap")
    family = circuits(t, check=False)
    bg = t.biased_graph
    if is_degenerate(t, Side.L) and family != frame_circuits(bg):
        return watch.failed({'side': 'L', 'expected': 'frame'})
    if is_degenerate(t, Side.F) and family != lift_circuits(bg):
        return watch.failed({'side': 'F', 'expected': 'lift'})
    return watch.passed({'class': classify_frame_lift(t, cap).value})


# ---------------------------------------------------------------------------
# Connectivity
# ---------------------------------------------------------------------------

def matroid_components(rank: Callable[[int], int], ground_size: int) -> list[EdgeSet]:
    """Components from the fundamental circuits of a greedy basis."""
    basis = 0
    for e in range(ground_size):
        if rank(basis | (1 << e)) > rank(basis):
            basis |= 1 << e
    full = popcount(basis)
    parts = nx.utils.UnionFind(range(ground_size))
    for e in range(ground_size):
        if basis >> e & 1 or rank(1 << e) == 0:
            continue
        grown = basis | (1 << e)
        fundamental = [b for b in iter_bits(basis) if rank(grown & ~(1 << b)) == full]
        parts.union(e, *fundamental)
    return sorted(tuple(sorted(p)) for p in parts.to_sets())


def circuit_components(cf: CircuitFamily) -> list[EdgeSet]:
    """Components by chaining: elements sharing a circuit are joined."""
    parts = nx.utils.UnionFind(range(cf.ground_size))
    for circuit in cf:
        parts.union(*circuit)
    return sorted(tuple(sorted(p)) for p in parts.to_sets())


def _is_block(g: Multigraph) -> bool:
    """Connected without a cut vertex, ignoring isolated vertices."""
    compacted, _ = g.compact()
    return compacted.vertex_count > 0 and is_connected(compacted) and not cut_vertices(compacted)


def connectivity_checks(t: Tripartition, instance: str = '') -> VerificationReport:
    """A connected matroid with F non-degenerate has a connected graph, and
    with both sides non-degenerate a 2-connected graph."""
    watch = _Stopwatch('connectivity', instance)
    g = t.graph
    if g.edge_count == 0:
        return watch.skipped("empty ground set")
    parts = matroid_components(RankOracle(t).rank, g.edge_count)
    if len(parts) > 1:
        return watch.passed({'matroid_components': len(parts)})
    compacted, _ = g.compact()
    frame_spread = not is_degenerate(t, Side.F)
    lift_spread = not is_degenerate(t, Side.L)
    if frame_spread and not is_connected(compacted):
        return watch.failed({'claim': 'connected graph', 'pair': [list(c) for c in disjoint_pair(t, Side.F)]})
    if frame_spread and lift_spread:
        cuts = cut_vertices(compacted)
        if cuts:
            return watch.failed({'claim': '2-connected graph', 'cut_vertex': cuts[0]})
    return watch.passed({'matroid_components': 1})


# ---------------------------------------------------------------------------
# Biased-graphic structure
# ---------------------------------------------------------------------------

def nonstandard_circuits(cf: CircuitFamily, g: Multigraph) -> list[EdgeSet]:
    """Circuits whose subgraph is none of the five circuit shapes."""
    return [c for c in cf if classify_subgraph(g, c).kind not in CIRCUIT_SHAPES]


def circuit_bias(cf: CircuitFamily, g: Multigraph):
    """The biased graph whose balanced cycles are the cycles that are circuits."""
    return biased_graph(g, rule=lambda cycle: cycle in cf.as_set, check=False)


def framework_report(cf: CircuitFamily, g: Multigraph, instance: str = '') -> VerificationReport:
    watch = _Stopwatch('framework', instance)
    violations = framework_check(cf, g)
    if violations:
        return watch.failed({'violations': [v.to_dict() for v in violations]})
    return watch.passed()


def shape_report(cf: CircuitFamily, g: Multigraph, instance: str = '') -> VerificationReport:
    watch = _Stopwatch('circuit_shapes', instance)
    odd = nonstandard_circuits(cf, g)
    if odd:
        return watch.failed({'circuit': list(odd[0]), 'shape': classify_subgraph(g, odd[0]).to_dict()})
    return watch.passed()


def loop_framework_check(t: Tripartition, instance: str = '',
                         cap: int | None = None) -> VerificationReport:
    """On a 2-connected graph with an unbalanced loop the matroid is frame or lift."""
    watch = _Stopwatch('loop_framework', instance)
    g = t.graph
    loops = [e for e in range(g.edge_count) if g.is_loop(e) and (e,) not in t.balanced]
    if not loops or not _is_block(g):
        return watch.skipped("no unbalanced loop on a 2-connected graph")
    kind = classify_frame_lift(t, cap)
    if kind == FrameLift.NEITHER:
        return watch.failed({'loop': loops[0], 'class': kind.value})
    return watch.passed({'class': kind.value})


def graph_blocks(g: Multigraph) -> list[EdgeSet]:
    """Edge sets of the blocks; every loop is a block of its own."""
    simple = nx.Graph()
    links = [e for e in range(g.edge_count) if not g.is_loop(e)]
    simple.add_edges_from(g.ends(e) for e in links)
    block_of = {}
    for number, block in enumerate(nx.biconnected_component_edges(simple)):
        for u, v in block:
            block_of[frozenset((u, v))] = number
    grouped: dict[int, list[int]] = {}
    for e in links:
        grouped.setdefault(block_of[frozenset(g.ends(e))], []).append(e)
    blocks = [tuple(sorted(edges)) for edges in grouped.values()]
    blocks.extend((e,) for e in range(g.edge_count) if g.is_loop(e))
    return sorted(blocks)


def block_restrictions(cf: CircuitFamily, g: Multigraph) -> list[tuple[EdgeSet, FrameLift]]:
    """Classify the restriction of the matroid to each block as frame or lift."""
    found = []
    for block in graph_blocks(g):
        relabel = {old: new for new, old in enumerate(block)}
        used = sorted(g.vertices_of(block))
        vertex = {old: new for new, old in enumerate(used)}
        local = Multigraph(len(used), tuple(
            (vertex[g.ends(e)[0]], vertex[g.ends(e)[1]]) for e in block
        ))
        family = cf.restrict(block).relabel(relabel, len(block))
        bg = circuit_bias(family, local)
        is_frame = family == frame_circuits(bg)
        is_lift = family == lift_circuits(bg)
        kind = (FrameLift.BOTH if is_frame and is_lift else FrameLift.FRAME if is_frame
                else FrameLift.LIFT if is_lift else FrameLift.NEITHER)
        found.append((block, kind))
    return found


def block_report(cf: CircuitFamily, g: Multigraph, instance: str = '') -> VerificationReport:
    watch = _Stopwatch('block_restrictions', instance)
    if not cut_vertices(g.compact()[0]):
        return watch.skipped("graph has no cut vertex")
    if len([p for p in circuit_components(cf) if len(p) > 1]) > 1:
        return watch.skipped("matroid is disconnected")
    classes = block_restrictions(cf, g)
    for block, kind in classes:
        if kind == FrameLift.NEITHER:
            return watch.failed({'block': list(block)})
    return watch.passed({'blocks': [[list(b), k.value] for b, k in classes]})


def biased_graphic_rank_check(cf: CircuitFamily, g: Multigraph,
                              instance: str = '') -> VerificationReport:
    """A connected biased graphic matroid has rank |V| - 1 when balanced and
    |V| otherwise, and every circuit has cyclomatic number at most 2."""
    watch = _Stopwatch('biased_graphic_rank', instance)
    compacted, _ = g.compact()
    if not is_connected(compacted):
        return watch.skipped("graph is disconnected")
    for circuit in cf:
        beta = mask_cyclomatic_number(g, to_mask(circuit))
        if beta > 2:
            return watch.failed({'circuit': list(circuit), 'cyclomatic_number': beta})
    bg = circuit_bias(cf, g)
    expected = compacted.vertex_count - (0 if bg.is_unbalanced else 1)
    found = circuit_rank(cf, g.ground)
    if found != expected:
        return watch.failed({'rank': found, 'expected': expected})
    return watch.passed({'rank': found})


# ---------------------------------------------------------------------------
# Propriety as a report
# ---------------------------------------------------------------------------

def propriety_report(t: Tripartition, instance: str = '') -> VerificationReport:
    watch = _Stopwatch('proper', instance)
    violation = validate_proper(t)
    if violation is not None:
        return watch.failed(violation.to_dict())
    return watch.passed()


def ingleton_report(t: Tripartition, instance: str = '', cap: int | None = None) -> VerificationReport:
    """Both sides non-degenerate must yield a violation of value -1."""
    watch = _Stopwatch('ingleton', instance)
    if is_degenerate(t, Side.L) or is_degenerate(t, Side.F):
        return watch.skipped("a side is degenerate")
    witness = ingleton_search(t, cap)
    if witness is None or witness.value != -1:
        return watch.failed({'witness': witness.to_dict() if witness else None})
    return watch.passed(witness.to_dict())
