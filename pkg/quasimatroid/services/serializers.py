"""
JSON codecs for graphs, biases, tripartitions, bracelet functions and
instance bundles.

Graph:          {"vertices": n, "edges": [[u, v], ...]}
Bias:           {"balanced_cycles": [[e, ...], ...]} or {"rule": name, "params": {...}}
Tripartition:   {"B": [...], "L": [...], "F": [...]} or {"rule": name, "params": {...}}
Bracelet fn:    [{"cycle_a": [...], "cycle_b": [...], "value": "dependent"}, ...]

A bundle holds any of these under the keys ``graph``, ``bias``,
``tripartition`` and ``chi``, plus ``name``, ``params``, ``max_length`` and
``homology``. Bundles split over several files are merged key by key.
"""
from __future__ import annotations

import json
import logging
import sys
from pathlib import Path
from typing import Any, Iterable

from quasimatroid.analysis.bias import biased_graph, empty_bias, graphic_bias, signed_bias
from quasimatroid.analysis.graph_core import cycle_index
from quasimatroid.analysis.tripartition import (
    frame_tripartition,
    lift_tripartition,
    make_tripartition,
    split_tripartition,
)
from quasimatroid.common import BraceletValue, Cycle, InputError, edge_set
from quasimatroid.examples.common import ExampleBundle
from quasimatroid.examples.parity import four_cycle_parity
from quasimatroid.models import (
    BiasedGraph,
    Bracelet,
    BraceletFunction,
    CycleIndex,
    Multigraph,
    Tripartition,
)

logger = logging.getLogger(__name__)


def _cycle_list(value: Any, label: str) -> list[Cycle]:
    if not isinstance(value, list):
        raise InputError(f"{label} must be a list of edge lists")
    cycles = []
    for idx, item in enumerate(value):
        if not isinstance(item, list) or not all(isinstance(e, int) for e in item):
            raise InputError(f"{label}[{idx}] must be a list of edge indices")
        cycles.append(edge_set(item))
    return cycles


def cycles_to_list(cycles: Iterable[Iterable[int]]) -> list[list[int]]:
    return [list(c) for c in sorted(edge_set(c) for c in cycles)]


# ---------------------------------------------------------------------------
# Graph
# ---------------------------------------------------------------------------

def graph_from_dict(data: Any) -> Multigraph:
    if not isinstance(data, dict) or 'vertices' not in data or 'edges' not in data:
        raise InputError("graph must be an object with 'vertices' and 'edges'")
    vertices, edges = data['vertices'], data['edges']
    if not isinstance(vertices, int) or not isinstance(edges, list):
        raise InputError("graph 'vertices' must be an integer and 'edges' a list")
    for idx, pair in enumerate(edges):
        if not isinstance(pair, list) or len(pair) != 2 or not all(isinstance(v, int) for v in pair):
            raise InputError(f"graph edges[{idx}] must be a pair of vertex ids")
    return Multigraph.from_edges(vertices, edges)


# ---------------------------------------------------------------------------
# Bias
# ---------------------------------------------------------------------------

def bias_from_dict(g: Multigraph, data: Any, index: CycleIndex, check: bool = True) -> BiasedGraph:
    """Decode a bias; ``check`` runs the theta test on an explicit balanced list."""
    if not isinstance(data, dict):
        raise InputError("bias must be an object")
    if 'balanced_cycles' in data:
        return biased_graph(g, _cycle_list(data['balanced_cycles'], 'balanced_cycles'),
                            cycles=index, check=check)
    rule = data.get('rule')
    params = data.get('params') or {}
    if rule == 'empty':
        return empty_bias(g, cycles=index)
    if rule == 'graphic':
        return graphic_bias(g, cycles=index)
    if rule == 'signed':
        negative = params.get('negative', [])
        if not isinstance(negative, list):
            raise InputError("signed bias needs params.negative as an edge list")
        return signed_bias(g, negative, cycles=index)
    raise InputError(f"Unknown bias rule: {rule}")


def bias_to_dict(bg: BiasedGraph) -> dict:
    return {'balanced_cycles': cycles_to_list(bg.balanced)}


# ---------------------------------------------------------------------------
# Tripartition
# ---------------------------------------------------------------------------

def tripartition_from_dict(g: Multigraph, data: Any, index: CycleIndex,
                           bias: BiasedGraph | None = None) -> Tripartition:
    if not isinstance(data, dict):
        raise InputError("tripartition must be an object")
    if 'rule' not in data:
        missing = [k for k in ('B', 'L', 'F') if k not in data]
        if missing:
            raise InputError(f"tripartition is missing {missing[0]}")
        return make_tripartition(
            g,
            _cycle_list(data['B'], 'B'),
            _cycle_list(data['L'], 'L'),
            _cycle_list(data['F'], 'F'),
            cycles=index,
        )
    rule = data['rule']
    params = data.get('params') or {}
    if rule == 'four-cycle-parity':
        return four_cycle_parity(g, params.get('cycle', []), cycles=index)
    if rule not in ('frame', 'lift', 'split'):
        raise InputError(f"Unknown tripartition rule: {rule}")
    bg = bias if bias is not None else empty_bias(g, cycles=index)
    if rule == 'frame':
        return frame_tripartition(bg)
    if rule == 'lift':
        return lift_tripartition(bg)
    if 'lift' in params:
        return split_tripartition(bg, _cycle_list(params['lift'], 'params.lift'))
    if 'frame' in params:
        frame = set(_cycle_list(params['frame'], 'params.frame'))
        return split_tripartition(bg, [c for c in bg.unbalanced if c not in frame])
    raise InputError("split rule needs params.lift or params.frame")


def tripartition_to_dict(t: Tripartition) -> dict:
    return {
        'B': cycles_to_list(t.balanced),
        'L': cycles_to_list(t.lift),
        'F': cycles_to_list(t.frame),
    }


# ---------------------------------------------------------------------------
# Bracelet functions
# ---------------------------------------------------------------------------

def chi_from_list(data: Any) -> BraceletFunction:
    if not isinstance(data, list):
        raise InputError("chi must be a list of bracelet entries")
    values = {}
    for idx, item in enumerate(data):
        if not isinstance(item, dict):
            raise InputError(f"chi[{idx}] must be an object")
        first = _cycle_list([item.get('cycle_a')], f"chi[{idx}].cycle_a")[0]
        second = _cycle_list([item.get('cycle_b')], f"chi[{idx}].cycle_b")[0]
        try:
            value = BraceletValue(item.get('value'))
        except ValueError:
            raise InputError(f"chi[{idx}].value must be 'dependent' or 'independent'") from None
        values[Bracelet.of(first, second)] = value
    return BraceletFunction(values)


# ---------------------------------------------------------------------------
# Bundles
# ---------------------------------------------------------------------------

def _rule_form(value: Any) -> dict | None:
    return value if isinstance(value, dict) and 'rule' in value else None


def _homology_from_list(data: Any) -> dict[Cycle, tuple[int, int]]:
    if not isinstance(data, list):
        raise InputError("homology must be a list of {cycle, class} objects")
    homology = {}
    for idx, item in enumerate(data):
        if not isinstance(item, dict) or len(item.get('class') or ()) != 2:
            raise InputError(f"homology[{idx}] needs 'cycle' and a two-entry 'class'")
        cycle = _cycle_list([item.get('cycle')], f"homology[{idx}].cycle")[0]
        homology[cycle] = (int(item['class'][0]), int(item['class'][1]))
    return homology


def bundle_from_dict(data: Any) -> ExampleBundle:
    if not isinstance(data, dict):
        raise InputError("input must be a JSON object")
    if 'graph' not in data:
        raise InputError("input has no 'graph'")
    g = graph_from_dict(data['graph'])
    max_length = data.get('max_length')
    index = cycle_index(g, max_length=max_length)
    bias = None
    if data.get('bias') is not None:
        bias = bias_from_dict(g, data['bias'], index, check=max_length is None)
    tripartition = None
    if data.get('tripartition') is not None:
        tripartition = tripartition_from_dict(g, data['tripartition'], index, bias)
    chi = chi_from_list(data['chi']) if data.get('chi') is not None else None
    homology = _homology_from_list(data['homology']) if data.get('homology') is not None else None
    return ExampleBundle(
        name=data.get('name', 'input'),
        graph=g,
        tripartition=tripartition,
        bias=bias,
        chi=chi,
        homology=homology,
        params=data.get('params') or {},
        max_length=max_length,
        bias_rule=_rule_form(data.get('bias')),
        tripartition_rule=_rule_form(data.get('tripartition')),
    )


def bundle_to_dict(bundle: ExampleBundle) -> dict:
    """Rule forms where the bundle has them, explicit cycle lists otherwise.

    The bias is written whenever something else depends on it: a bracelet
    function, or a tripartition rule that takes B from the bias.
    """
    data: dict[str, Any] = {'name': bundle.name, 'graph': bundle.graph.to_dict()}
    if bundle.params:
        data['params'] = bundle.params
    if bundle.max_length is not None:
        data['max_length'] = bundle.max_length
    rule = bundle.tripartition_rule
    needs_bias = (bundle.tripartition is None
                  or (rule is not None and rule['rule'] in ('frame', 'lift', 'split')))
    if bundle.bias_rule is not None:
        data['bias'] = bundle.bias_rule
    elif needs_bias and (bundle.bias is not None or bundle.tripartition is not None):
        data['bias'] = bias_to_dict(bundle.biased_graph)
    if bundle.tripartition is not None:
        data['tripartition'] = rule or tripartition_to_dict(bundle.tripartition)
    if bundle.chi is not None:
        data['chi'] = bundle.chi.to_list()
    if bundle.homology is not None:
        data['homology'] = [
            {'cycle': list(c), 'class': list(k)} for c, k in sorted(bundle.homology.items())
        ]
    return data


# ---------------------------------------------------------------------------
# Files
# ---------------------------------------------------------------------------

def load_json(source: str) -> dict:
    """Parse one JSON object from a path, or from stdin for ``-``."""
    try:
        if source == '-':
            data = json.load(sys.stdin)
        else:
            with Path(source).open('r', encoding='utf-8') as f:
                data = json.load(f)
    except FileNotFoundError:
        raise InputError(f"missing file: {source}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid json: {source} ({exc})") from None
    if not isinstance(data, dict):
        raise InputError(f"json root must be an object: {source}")
    return data


def load_bundle(sources: Iterable[str]) -> ExampleBundle:
    """Merge the objects in ``sources`` key by key (later files win) and decode."""
    merged: dict[str, Any] = {}
    for source in list(sources) or ['-']:
        merged.update(load_json(source))
    logger.debug(f"Loaded bundle keys: {sorted(merged)}")
    return bundle_from_dict(merged)


def dumps(payload: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)
    return json.dumps(payload, sort_keys=True, separators=(',', ':'), ensure_ascii=False)
