"""Command-line front end.

Usage:
    python run.py gen                                  # list generators
    python run.py gen four-cycle-parity --n 8 > k8.json
    python run.py validate k8.json
    python run.py rank k4.json --set 0,1,2,3
    python run.py circuits instance.json
    python run.py cocircuits instance.json
    python run.py bases instance.json
    python run.py minor instance.json --delete 3 --contract 0,1
    python run.py sum link first.json second.json --e1 0 --e2 2
    python run.py sum loop first.json second.json --e1 6 --e2 0
    python run.py ingleton k8.json
    python run.py gen four-cycle-parity --n 8 | python run.py verify --suite fast

Instances are read from the given files (merged key by key) or from stdin.
Output is one JSON document per line on stdout; diagnostics go to stderr.
Exit codes: 0 success, 1 verification failure, 2 input error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from quasimatroid import configure
from quasimatroid.analysis.bracelets import bracelet_graph, constant_chi
from quasimatroid.analysis.constructions import link_sum, loop_sum, minor
from quasimatroid.analysis.matroid import RankOracle, bases, circuits, cocircuits
from quasimatroid.analysis.tripartition import (
    chi_from_tripartition,
    disjoint_pair,
    require_proper,
)
from quasimatroid.common import (
    BraceletValue,
    CheckResult,
    DegenerateTripartition,
    InputError,
    QuasiMatroidError,
    Side,
)
from quasimatroid.examples import get_all_examples, get_example
from quasimatroid.examples.common import ExampleBundle
from quasimatroid.services import serializers
from quasimatroid.services.brute_force import MatroidTable
from quasimatroid.services.suite import SUITES, run_suite
from quasimatroid.services.verify import cocircuits_bruteforce, ingleton_exhaustive, ingleton_search

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def _edge_list(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated edge indices, got {text!r}") from None


def _emit(payload, args) -> None:
    print(serializers.dumps(payload, pretty=args.pretty))


def _proper(bundle: ExampleBundle):
    return require_proper(bundle.resolve())


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_gen(args) -> int:
    if not args.example:
        _emit([
            {'name': name, 'description': cls.DESCRIPTION, 'defaults': cls.DEFAULTS}
            for name, cls in get_all_examples().items()
        ], args)
        return EXIT_OK
    params = {
        'n': args.n, 'side': args.side, 'a': args.a, 'b': args.b, 'm': args.m,
        'max_length': args.max_length, 'seed': args.seed,
        'vertices': args.vertices, 'edges': args.edges,
    }
    bundle = get_example(args.example, **params).build()
    _emit(serializers.bundle_to_dict(bundle), args)
    return EXIT_OK


def cmd_validate(args) -> int:
    bundle = serializers.load_bundle(args.files)
    report = {'instance': bundle.instance, 'edges': bundle.graph.edge_count,
              'cycles': len(bundle.biased_graph.cycles)}
    if bundle.tripartition is None and bundle.chi is None:
        report['balanced'] = len(bundle.biased_graph.balanced)
        _emit(report, args)
        return EXIT_OK
    t = _proper(bundle)
    report.update({
        'proper': True,
        'B': len(t.balanced),
        'L': len(t.lift),
        'F': len(t.frame),
        'degenerate': {side.value: disjoint_pair(t, side) is None for side in (Side.L, Side.F)},
    })
    _emit(report, args)
    return EXIT_OK


def cmd_rank(args) -> int:
    bundle = serializers.load_bundle(args.files)
    t = _proper(bundle)
    chosen = _edge_list(args.set) if args.set is not None else list(t.graph.ground)
    bad = [e for e in chosen if not 0 <= e < t.graph.edge_count]
    if bad:
        raise InputError(f"edge {bad[0]} is not in the graph")
    _emit(RankOracle(t).rank(chosen), args)
    return EXIT_OK


def cmd_circuits(args) -> int:
    t = _proper(serializers.load_bundle(args.files))
    _emit(circuits(t).to_list(), args)
    return EXIT_OK


def cmd_cocircuits(args) -> int:
    t = _proper(serializers.load_bundle(args.files))
    try:
        found = cocircuits(t)
    except DegenerateTripartition as e:
        logger.info(f"{e}; falling back to the subset table")
        found = cocircuits_bruteforce(circuits(t, check=False), cap=args.cap)
    _emit([list(c) for c in found], args)
    return EXIT_OK


def cmd_bases(args) -> int:
    t = _proper(serializers.load_bundle(args.files))
    _emit([list(b) for b in bases(t, cap=args.cap)], args)
    return EXIT_OK


def cmd_minor(args) -> int:
    bundle = serializers.load_bundle(args.files)
    t = _proper(bundle)
    result, labels = minor(t, _edge_list(args.delete), _edge_list(args.contract))
    derived = ExampleBundle(name=f"minor of {bundle.instance}", graph=result.graph,
                            tripartition=result)
    data = serializers.bundle_to_dict(derived)
    data['edge_map'] = [[old, new] for old, new in sorted(labels.items())]
    _emit(data, args)
    return EXIT_OK


def _summand_chi(bundle: ExampleBundle):
    if bundle.chi is not None:
        return bundle.chi
    if bundle.tripartition is not None:
        return chi_from_tripartition(bundle.tripartition)
    bg = bundle.biased_graph
    if len(bracelet_graph(bg).components) > 1:
        raise InputError(f"{bundle.instance} needs a bracelet function or a tripartition")
    return constant_chi(bg, BraceletValue.INDEPENDENT)


def cmd_sum(args) -> int:
    first = serializers.load_bundle([args.first])
    second = serializers.load_bundle([args.second])
    if args.kind == 'link':
        result = link_sum(_proper(first), args.e1, second.graph, args.e2)
    else:
        result = loop_sum(first.biased_graph, args.e1, second.biased_graph, args.e2,
                          _summand_chi(first), _summand_chi(second))
    data = result.to_dict()
    if result.tripartition is not None:
        data['tripartition'] = serializers.tripartition_to_dict(result.tripartition)
    _emit(data, args)
    return EXIT_OK


def cmd_ingleton(args) -> int:
    bundle = serializers.load_bundle(args.files)
    t = _proper(bundle)
    if args.exhaustive:
        table = MatroidTable.from_circuits(circuits(t, check=False))
        report = ingleton_exhaustive(table, bundle.instance, seed=args.seed)
        _emit(report.to_dict(timing=not args.no_timing), args)
        return EXIT_OK
    witness = ingleton_search(t)
    _emit(witness.to_dict() if witness is not None else None, args)
    return EXIT_OK


def cmd_verify(args) -> int:
    bundle = serializers.load_bundle(args.files)
    reports = run_suite(bundle, suite=args.suite, seed=args.seed, cap=args.cap,
                        workers=args.workers)
    for report in reports:
        _emit(report.to_dict(timing=not args.no_timing), args)
    failed = [r for r in reports if r.result == CheckResult.FAIL]
    return EXIT_FAILED if failed else EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='quasimatroid',
        description='Quasi-graphic matroids from graphs with cycle tripartitions.',
    )
    parser.add_argument('--pretty', action='store_true', help='indented JSON output')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress to stderr (-vv for debug)')
    parser.add_argument('--config', default=None,
                        help='configuration name: development, production or testing')
    sub = parser.add_subparsers(dest='command', required=True)

    gen = sub.add_parser('gen', help='generate an example instance')
    gen.add_argument('example', nargs='?', help='generator name; omit to list them')
    for flag in ('--n', '--a', '--b', '--m', '--seed', '--vertices', '--edges'):
        gen.add_argument(flag, type=int, default=None)
    gen.add_argument('--max-length', dest='max_length', type=int, default=None)
    gen.add_argument('--side', default=None, help='L or F')
    gen.set_defaults(handler=cmd_gen)

    def with_files(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        command = sub.add_parser(name, help=help_text)
        command.add_argument('files', nargs='*', help="JSON inputs ('-' or none for stdin)")
        command.set_defaults(handler=handler)
        return command

    with_files('validate', cmd_validate, 'check an instance for propriety')
    rank = with_files('rank', cmd_rank, 'rank of an edge set')
    rank.add_argument('--set', default=None, help='comma-separated edges (default: all)')
    with_files('circuits', cmd_circuits, 'list the circuits')
    cocircuit = with_files('cocircuits', cmd_cocircuits, 'list the cocircuits')
    cocircuit.add_argument('--cap', type=int, default=None)
    basis = with_files('bases', cmd_bases, 'list the bases')
    basis.add_argument('--cap', type=int, default=None)
    minor_cmd = with_files('minor', cmd_minor, 'delete and contract edges')
    minor_cmd.add_argument('--delete', default=None, help='comma-separated edges')
    minor_cmd.add_argument('--contract', default=None, help='comma-separated edges')
    ingleton = with_files('ingleton', cmd_ingleton, 'look for an Ingleton violation')
    ingleton.add_argument('--exhaustive', action='store_true',
                          help='scan subset quadruples of the whole ground set')
    ingleton.add_argument('--seed', type=int, default=None)
    ingleton.add_argument('--no-timing', action='store_true')
    verify = with_files('verify', cmd_verify, 'run a verification suite')
    verify.add_argument('--suite', choices=sorted(SUITES), default='fast')
    verify.add_argument('--seed', type=int, default=None)
    verify.add_argument('--cap', type=int, default=None, help='override the exhaustive edge cap')
    verify.add_argument('--workers', type=int, default=None)
    verify.add_argument('--no-timing', action='store_true',
                        help='report elapsed_ms as 0 for byte-identical output')

    sums = sub.add_parser('sum', help='link-sum or loop-sum of two instances')
    sums.add_argument('kind', choices=['link', 'loop'])
    sums.add_argument('first')
    sums.add_argument('second')
    sums.add_argument('--e1', type=int, required=True, help='basepoint in the first instance')
    sums.add_argument('--e2', type=int, required=True, help='basepoint in the second instance')
    sums.set_defaults(handler=cmd_sum)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format='%(levelname)s: %(message)s', stream=sys.stderr)
    configure(args.config)
    try:
        return args.handler(args)
    except (QuasiMatroidError, ValueError) as e:
        diagnostic = e.to_dict() if isinstance(e, QuasiMatroidError) else {
            'error': type(e).__name__, 'message': str(e),
        }
        diagnostic.setdefault('witness', None)
        print(serializers.dumps(diagnostic), file=sys.stderr)
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
