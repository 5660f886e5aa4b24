"""
Verification suites.

A suite is an ordered list of named checks run against one instance.
Checks are independent, so they run on a thread pool; reports are put back
into suite order and every seeded check derives its seed from the suite
seed and its position, so a run is reproducible whatever the scheduling.
"""
from __future__ import annotations

import logging
import threading
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable

import numpy as np

from quasimatroid.analysis.matroid import RankOracle, circuits
from quasimatroid.common import (
    CapError,
    CheckResult,
    GroundSetTooLarge,
    InputError,
    QuasiMatroidError,
)
from quasimatroid.config import get_config
from quasimatroid.examples.common import ExampleBundle
from quasimatroid.models import CircuitFamily, Tripartition
from quasimatroid.services import verify
from quasimatroid.services.brute_force import MatroidTable

logger = logging.getLogger(__name__)

FAST_CHECKS = (
    'proper',
    'circuit_axioms',
    'framework',
    'rank_axioms',
    'independence_agreement',
    'connectivity',
    'ingleton',
    'degenerate_reduction',
)

FULL_CHECKS = FAST_CHECKS + (
    'rank_agreement',
    'cocircuit_agreement',
    'minor_commutation',
    'ingleton_exhaustive',
    'circuit_shapes',
    'biased_graphic_rank',
    'block_restrictions',
    'loop_framework',
)

SUITES = {'fast': FAST_CHECKS, 'full': FULL_CHECKS}


class _Run:
    """Shared state of one suite run; the circuit family is built once, on demand."""

    def __init__(self, t: Tripartition, instance: str, cap: int | None):
        self.t = t
        self.instance = instance
        self.cap = cap
        self._circuits: CircuitFamily | None = None
        self._lock = threading.Lock()

    @property
    def circuit_cap(self) -> int:
        return get_config().AXIOM_EDGE_CAP if self.cap is None else self.cap

    def circuits(self) -> CircuitFamily:
        """Raises GroundSetTooLarge above the circuit cap."""
        width = self.t.graph.edge_count
        if width > self.circuit_cap:
            raise GroundSetTooLarge(
                f"{width} edges exceed the circuit enumeration cap", self.circuit_cap
            )
        with self._lock:
            if self._circuits is None:
                self._circuits = circuits(self.t, check=False)
                logger.debug(f"{self.instance}: {len(self._circuits)} circuits")
            return self._circuits


def _proper(run: _Run, seed: int):
    return verify.propriety_report(run.t, run.instance)


def _circuit_axioms(run: _Run, seed: int):
    return verify.circuit_axioms(run.circuits(), run.instance, cap=run.circuit_cap)


def _framework(run: _Run, seed: int):
    return verify.framework_report(run.circuits(), run.t.graph, run.instance)


def _rank_axioms(run: _Run, seed: int):
    return verify.rank_axioms(RankOracle(run.t), run.t.graph.ground, run.instance,
                              cap=run.cap, seed=seed)


def _independence_agreement(run: _Run, seed: int):
    return verify.independence_agreement(run.t, run.instance, cap=run.cap)


def _connectivity(run: _Run, seed: int):
    return verify.connectivity_checks(run.t, run.instance)


def _ingleton(run: _Run, seed: int):
    return verify.ingleton_report(run.t, run.instance)


def _degenerate_reduction(run: _Run, seed: int):
    return verify.degenerate_reduction(run.t, run.instance, cap=run.circuit_cap)


def _rank_agreement(run: _Run, seed: int):
    return verify.rank_agreement(run.t, run.instance, cap=run.cap)


def _cocircuit_agreement(run: _Run, seed: int):
    return verify.cocircuit_agreement(run.t, run.instance, cap=run.cap)


def _minor_commutation(run: _Run, seed: int):
    return verify.minor_commutation(run.t, run.instance, cap=run.cap)


def _ingleton_exhaustive(run: _Run, seed: int):
    table = MatroidTable.from_circuits(run.circuits(), cap=run.circuit_cap)
    return verify.ingleton_exhaustive(table, run.instance, seed=seed)


def _circuit_shapes(run: _Run, seed: int):
    return verify.shape_report(run.circuits(), run.t.graph, run.instance)


def _biased_graphic_rank(run: _Run, seed: int):
    return verify.biased_graphic_rank_check(run.circuits(), run.t.graph, run.instance)


def _block_restrictions(run: _Run, seed: int):
    return verify.block_report(run.circuits(), run.t.graph, run.instance)


def _loop_framework(run: _Run, seed: int):
    return verify.loop_framework_check(run.t, run.instance, cap=run.circuit_cap)


_CHECKS: dict[str, Callable[[_Run, int], verify.VerificationReport]] = {
    'proper': _proper,
    'circuit_axioms': _circuit_axioms,
    'framework': _framework,
    'rank_axioms': _rank_axioms,
    'independence_agreement': _independence_agreement,
    'connectivity': _connectivity,
    'ingleton': _ingleton,
    'degenerate_reduction': _degenerate_reduction,
    'rank_agreement': _rank_agreement,
    'cocircuit_agreement': _cocircuit_agreement,
    'minor_commutation': _minor_commutation,
    'ingleton_exhaustive': _ingleton_exhaustive,
    'circuit_shapes': _circuit_shapes,
    'biased_graphic_rank': _biased_graphic_rank,
    'block_restrictions': _block_restrictions,
    'loop_framework': _loop_framework,
}


def check_seed(seed: int, position: int) -> int:
    """Seed of the check at ``position``, independent of execution order."""
    return int(np.random.SeedSequence([seed, position]).generate_state(1)[0])


def _run_check(name: str, run: _Run, seed: int) -> verify.VerificationReport:
    try:
        return _CHECKS[name](run, seed)
    except CapError as e:
        return verify.VerificationReport(
            name, run.instance, CheckResult.SKIP, {'reason': str(e), 'cap': e.cap}, seed
        )
    except QuasiMatroidError as e:
        return verify.VerificationReport(name, run.instance, CheckResult.FAIL, e.to_dict(), seed)


def run_suite(
    bundle: ExampleBundle | Tripartition,
    suite: str = 'fast',
    seed: int | None = None,
    cap: int | None = None,
    workers: int | None = None,
    instance: str | None = None,
) -> list[verify.VerificationReport]:
    """Run every check of ``suite`` and return the reports in suite order.

    An improper tripartition fails the propriety check and every other
    check is reported as skipped.
    """
    if suite not in SUITES:
        raise InputError(f"Unknown suite: {suite}")
    config = get_config()
    seed = config.DEFAULT_SEED if seed is None else seed
    workers = config.VERIFY_WORKERS if workers is None else workers
    if isinstance(bundle, ExampleBundle):
        t = bundle.resolve()
        instance = instance or bundle.instance
    else:
        t = bundle
        instance = instance or 'input'
    run = _Run(t, instance, cap)
    names = SUITES[suite]
    seeds = [check_seed(seed, position) for position in range(len(names))]

    first = _run_check(names[0], run, seeds[0])
    if not first.passed:
        rest = [
            verify.VerificationReport(name, instance, CheckResult.SKIP,
                                      {'reason': 'tripartition is not proper'}, s)
            for name, s in zip(names[1:], seeds[1:])
        ]
        return [first] + rest

    reports: list[verify.VerificationReport | None] = [first] + [None] * (len(names) - 1)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        futures = {
            executor.submit(_run_check, name, run, seeds[position]): position
            for position, name in enumerate(names) if position > 0
        }
        for future in as_completed(futures):
            position = futures[future]
            try:
                reports[position] = future.result()
            except Exception as e:
                logger.warning(f"Check {names[position]} crashed on {instance}: {e}")
                reports[position] = verify.VerificationReport(
                    names[position], instance, CheckResult.FAIL,
                    {'error': type(e).__name__, 'message': str(e)}, seeds[position],
                )

    failed = sum(1 for r in reports if r.result == CheckResult.FAIL)
    skipped = sum(1 for r in reports if r.result == CheckResult.SKIP)
    logger.info(f"Suite {suite} on {instance}: {len(reports) - failed - skipped} passed, "
                f"{failed} failed, {skipped} skipped")
    return reports
