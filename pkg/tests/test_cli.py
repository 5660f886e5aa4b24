"""Tests for the command-line front end."""

import json

import pytest

from quasimatroid.analysis.matroid import cocircuits
from quasimatroid.cli import EXIT_INPUT, EXIT_OK, main
from quasimatroid.services.suite import FAST_CHECKS


@pytest.fixture()
def cli(capsys):
    def run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return run


@pytest.fixture()
def generated(cli, tmp_path):
    """Write a generated instance to a file and return its path."""
    def write(name, *options):
        code, out, _ = cli('gen', name, *options)
        assert code == EXIT_OK
        path = tmp_path / f'{name}.json'
        path.write_text(out, encoding='utf-8')
        return str(path)
    return write


class TestGen:
    def test_lists_generators(self, cli):
        code, out, _ = cli('gen')
        assert code == EXIT_OK
        names = [entry['name'] for entry in json.loads(out)]
        assert 'four-cycle-parity' in names
        assert names == sorted(names)

    def test_unknown_generator(self, cli):
        code, out, err = cli('gen', 'petersen')
        assert code == EXIT_INPUT
        assert out == ''
        diagnostic = json.loads(err.strip().splitlines()[-1])
        assert diagnostic == {'error': 'InputError', 'message': 'Unknown example: petersen',
                              'witness': None}

    def test_pretty_output(self, cli):
        _, out, _ = cli('--pretty', 'gen', 'complete-graphic', '--n', '3')
        assert out.startswith('{\n')
        assert json.loads(out)['graph']['vertices'] == 3


class TestQueries:
    def test_validate(self, cli, generated):
        code, out, _ = cli('validate', generated('doubled-four-cycle'))
        assert code == EXIT_OK
        report = json.loads(out)
        assert (report['B'], report['L'], report['F']) == (8, 4, 8)
        assert report['degenerate'] == {'L': False, 'F': False}

    def test_rank(self, cli, generated):
        path = generated('complete-graphic', '--n', '4')
        assert cli('rank', path)[1].strip() == '3'
        assert cli('rank', path, '--set', '0,1,3')[1].strip() == '2'

    def test_rank_of_an_unknown_edge(self, cli, generated):
        code, _, err = cli('rank', generated('complete-graphic'), '--set', '9')
        assert code == EXIT_INPUT
        assert 'edge 9' in err

    def test_circuits(self, cli, generated):
        code, out, _ = cli('circuits', generated('complete-graphic'))
        assert code == EXIT_OK
        assert len(json.loads(out)) == 7

    def test_cocircuits(self, cli, generated, doubled_parity):
        _, out, _ = cli('cocircuits', generated('doubled-four-cycle'))
        assert len(json.loads(out)) == len(cocircuits(doubled_parity))

    def test_bases(self, cli, generated):
        _, out, _ = cli('bases', generated('complete-graphic'))
        assert len(json.loads(out)) == 16

    def test_minor(self, cli, generated):
        _, out, _ = cli('minor', generated('doubled-four-cycle'), '--delete', '4', '--contract', '0')
        data = json.loads(out)
        assert data['graph']['vertices'] == 3
        assert [1, 0] in data['edge_map']
        assert sorted(data['tripartition']) == ['B', 'F', 'L']

    def test_link_sum(self, cli, generated, tmp_path):
        triangle = tmp_path / 'triangle.json'
        triangle.write_text(json.dumps({'graph': {'vertices': 3, 'edges': [[0, 1], [1, 2], [0, 2]]}}),
                            encoding='utf-8')
        code, out, _ = cli('sum', 'link', generated('doubled-four-cycle'), str(triangle),
                           '--e1', '0', '--e2', '0')
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['graph']['vertices'] == 5
        assert len(data['graph']['edges']) == 9

    def test_ingleton(self, cli, generated):
        _, out, _ = cli('ingleton', generated('doubled-four-cycle'))
        assert json.loads(out)['value'] == -1


class TestVerify:
    def test_fast_suite_passes(self, cli, generated):
        code, out, _ = cli('verify', generated('doubled-four-cycle'))
        assert code == EXIT_OK
        reports = [json.loads(line) for line in out.splitlines()]
        assert [r['check'] for r in reports] == list(FAST_CHECKS)

    def test_output_is_reproducible(self, cli, generated):
        """--no-timing output does not depend on the worker count."""
        path = generated('doubled-four-cycle')
        first = cli('verify', path, '--seed', '4', '--no-timing')[1]
        second = cli('verify', path, '--seed', '4', '--no-timing', '--workers', '1')[1]
        assert first == second

    def test_improper_input(self, cli, tmp_path):
        path = tmp_path / 'loops.json'
        path.write_text(json.dumps({
            'graph': {'vertices': 2, 'edges': [[0, 0], [1, 1]]},
            'tripartition': {'B': [], 'L': [[0]], 'F': [[1]]},
        }), encoding='utf-8')
        code, out, err = cli('validate', str(path))
        assert code == EXIT_INPUT
        assert out == ''
        diagnostic = json.loads(err.strip().splitlines()[-1])
        assert diagnostic['error'] == 'ImproperTripartition'
        assert diagnostic['witness'] == {'type': 'MeetViolation', 'c_in_L': [0], 'c_in_F': [1]}

    def test_improper_input_fails_the_suite(self, cli, tmp_path):
        path = tmp_path / 'loops.json'
        path.write_text(json.dumps({
            'graph': {'vertices': 2, 'edges': [[0, 0], [1, 1]]},
            'tripartition': {'B': [], 'L': [[0]], 'F': [[1]]},
        }), encoding='utf-8')
        code, out, _ = cli('verify', str(path))
        assert code == 1
        assert json.loads(out.splitlines()[0])['result'] == 'fail'
