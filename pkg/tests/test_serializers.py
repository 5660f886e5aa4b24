"""Tests for the JSON codecs and file loading."""

import json

import pytest

from quasimatroid.analysis.bracelets import constant_chi
from quasimatroid.analysis.graph_core import cycle_index
from quasimatroid.analysis.matroid import circuits
from quasimatroid.common import BraceletValue, InputError
from quasimatroid.examples import get_example
from quasimatroid.examples.common import ExampleBundle
from quasimatroid.services.serializers import (
    bias_from_dict,
    bundle_from_dict,
    bundle_to_dict,
    chi_from_list,
    dumps,
    graph_from_dict,
    load_bundle,
    load_json,
    tripartition_from_dict,
)


def round_trip(bundle):
    return bundle_from_dict(json.loads(dumps(bundle_to_dict(bundle))))


class TestGraph:
    def test_decode(self):
        g = graph_from_dict({'vertices': 2, 'edges': [[0, 1], [1, 1]]})
        assert g.edges == ((0, 1), (1, 1))
        assert g.to_dict() == {'vertices': 2, 'edges': [[0, 1], [1, 1]]}

    @pytest.mark.parametrize('data', [
        {'vertices': 2},
        {'vertices': 'two', 'edges': []},
        {'vertices': 2, 'edges': [[0]]},
        [[0, 1]],
    ])
    def test_malformed(self, data):
        with pytest.raises(InputError):
            graph_from_dict(data)


class TestBiasAndTripartition:
    def test_bias_rules(self, k4):
        index = cycle_index(k4)
        assert len(bias_from_dict(k4, {'rule': 'graphic'}, index).balanced) == 7
        assert bias_from_dict(k4, {'rule': 'empty'}, index).balanced == frozenset()
        signed = bias_from_dict(k4, {'rule': 'signed', 'params': {'negative': [5]}}, index)
        assert len(signed.balanced) == 3

    def test_unknown_bias_rule(self, k4):
        with pytest.raises(InputError, match="Unknown bias rule"):
            bias_from_dict(k4, {'rule': 'voltage'}, cycle_index(k4))

    def test_signed_needs_an_edge_list(self, k4):
        with pytest.raises(InputError):
            bias_from_dict(k4, {'rule': 'signed', 'params': {'negative': 5}}, cycle_index(k4))

    def test_explicit_lists(self, doubled_c4, doubled_parity):
        data = {
            'B': [list(c) for c in doubled_parity.balanced],
            'L': [list(c) for c in doubled_parity.lift],
            'F': [list(c) for c in doubled_parity.frame],
        }
        t = tripartition_from_dict(doubled_c4, data, cycle_index(doubled_c4))
        assert t.lift == doubled_parity.lift

    def test_missing_side(self, doubled_c4):
        with pytest.raises(InputError, match="missing F"):
            tripartition_from_dict(doubled_c4, {'B': [], 'L': []}, cycle_index(doubled_c4))

    def test_parity_rule(self, doubled_c4, doubled_parity):
        data = {'rule': 'four-cycle-parity', 'params': {'cycle': [0, 1, 2, 3]}}
        t = tripartition_from_dict(doubled_c4, data, cycle_index(doubled_c4))
        assert t.frame == doubled_parity.frame

    def test_split_rule(self, kab_frame):
        g = kab_frame.graph
        data = {'rule': 'split', 'params': {'frame': [[9, 10, 11], [12, 13, 14]]}}
        t = tripartition_from_dict(g, data, cycle_index(g))
        assert t.frame == kab_frame.frame
        with pytest.raises(InputError, match="split rule"):
            tripartition_from_dict(g, {'rule': 'split'}, cycle_index(g))

    def test_unknown_tripartition_rule(self, k4):
        with pytest.raises(InputError, match="Unknown tripartition rule"):
            tripartition_from_dict(k4, {'rule': 'odd'}, cycle_index(k4))

    def test_bad_chi_value(self):
        with pytest.raises(InputError, match="dependent"):
            chi_from_list([{'cycle_a': [0, 1, 2], 'cycle_b': [3, 4, 5], 'value': 'maybe'}])


class TestBundles:
    def test_rule_forms_are_kept(self):
        bundle = get_example('complete-empty-bias', n=5).build()
        data = bundle_to_dict(bundle)
        assert data['bias'] == {'rule': 'empty'}
        assert data['tripartition'] == {'rule': 'frame'}
        assert data['params'] == {'n': 5, 'side': 'F'}
        back = round_trip(bundle)
        assert back.tripartition.frame == bundle.tripartition.frame
        assert back.instance == bundle.instance

    def test_parity_bundle_needs_no_bias(self):
        bundle = get_example('doubled-four-cycle').build()
        data = bundle_to_dict(bundle)
        assert 'bias' not in data
        assert round_trip(bundle).tripartition.lift == bundle.tripartition.lift

    def test_explicit_lists_without_rules(self, doubled_c4, doubled_parity):
        bundle = ExampleBundle(name='doubled', graph=doubled_c4, tripartition=doubled_parity)
        data = bundle_to_dict(bundle)
        assert sorted(data['tripartition']) == ['B', 'F', 'L']
        back = round_trip(bundle)
        assert back.tripartition.frame == doubled_parity.frame
        assert back.tripartition_rule is None

    def test_split_bundle(self):
        bundle = get_example('kab-plus-cycles', side='L').build()
        back = round_trip(bundle)
        assert back.tripartition.lift == bundle.tripartition.lift

    def test_bracelet_function_bundle(self, k6_empty, k6_lift):
        chi = constant_chi(k6_empty, BraceletValue.DEPENDENT)
        bundle = ExampleBundle(name='chi', graph=k6_empty.graph, bias=k6_empty, chi=chi)
        data = bundle_to_dict(bundle)
        assert data['bias'] == {'balanced_cycles': []}
        assert len(data['chi']) == 10
        back = round_trip(bundle)
        assert back.tripartition is None
        assert circuits(back.resolve()) == circuits(k6_lift)

    def test_homology_bundle(self):
        """Truncated indexes decode without the theta check."""
        bundle = get_example('torus-grid', max_length=4).build()
        back = round_trip(bundle)
        assert back.max_length == 4
        assert back.homology == bundle.homology

    def test_graph_is_required(self):
        with pytest.raises(InputError, match="no 'graph'"):
            bundle_from_dict({'tripartition': {'rule': 'frame'}})

    def test_resolve_needs_something(self, triangle):
        bundle = ExampleBundle(name='bare', graph=triangle)
        with pytest.raises(InputError):
            bundle.resolve()
        with pytest.raises(InputError):
            bundle.biased_graph


class TestFiles:
    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError, match="missing file"):
            load_json(str(tmp_path / 'absent.json'))

    def test_invalid_json(self, tmp_path):
        path = tmp_path / 'bad.json'
        path.write_text('{"graph": ', encoding='utf-8')
        with pytest.raises(InputError, match="invalid json"):
            load_json(str(path))

    def test_root_must_be_an_object(self, tmp_path):
        path = tmp_path / 'list.json'
        path.write_text('[1, 2]', encoding='utf-8')
        with pytest.raises(InputError, match="root must be an object"):
            load_json(str(path))

    def test_later_files_win(self, tmp_path):
        first = tmp_path / 'graph.json'
        first.write_text(json.dumps({
            'name': 'k4',
            'graph': {'vertices': 4, 'edges': [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]},
            'bias': {'rule': 'empty'},
            'tripartition': {'rule': 'frame'},
        }), encoding='utf-8')
        second = tmp_path / 'lift.json'
        second.write_text(json.dumps({'tripartition': {'rule': 'lift'}}), encoding='utf-8')
        bundle = load_bundle([str(first), str(second)])
        assert bundle.name == 'k4'
        assert len(bundle.tripartition.lift) == 7
        assert bundle.tripartition.frame == frozenset()

    def test_compact_sorted_output(self):
        assert dumps({'b': 1, 'a': [1, 2]}) == '{"a":[1,2],"b":1}'
        assert dumps({'b': 1, 'a': 2}, pretty=True).startswith('{\n  "a": 2')
