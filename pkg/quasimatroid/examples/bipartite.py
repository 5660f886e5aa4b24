"""K_{a,b} with an a-cycle on one side of the bipartition and a b-cycle on the other."""
from __future__ import annotations

from quasimatroid.analysis.bias import empty_bias
from quasimatroid.analysis.tripartition import split_tripartition
from quasimatroid.common import CapExceeded, Cycle, InputError, Side
from quasimatroid.config import get_config
from quasimatroid.examples import register_example
from quasimatroid.examples.base import BaseExample
from quasimatroid.examples.common import ExampleBundle
from quasimatroid.models import Multigraph, Tripartition


def kab_graph(a: int, b: int) -> tuple[Multigraph, Cycle, Cycle]:
    """The graph and its two added cycles.

    Vertices ``0..a-1`` form side A and ``a..a+b-1`` side B. Edges are the
    a*b bipartite pairs, then the A-cycle, then the B-cycle.
    """
    pairs = [(i, a + j) for i in range(a) for j in range(b)]
    ring_a = [(i, (i + 1) % a) for i in range(a)]
    ring_b = [(a + j, a + (j + 1) % b) for j in range(b)]
    g = Multigraph.from_edges(a + b, pairs + ring_a + ring_b)
    first = tuple(range(a * b, a * b + a))
    second = tuple(range(a * b + a, a * b + a + b))
    return g, first, second


def kab_plus_cycles(a: int, b: int, assignment: Side | str = Side.F,
                    cap: int | None = None) -> Tripartition:
    """No balanced cycles; the two added cycles go to ``assignment`` and
    every other cycle to the opposite side.

    Raises:
        CapExceeded: ``a`` or ``b`` is above ``cap`` (default EXAMPLE_MAX_N).
    """
    cap = get_config().EXAMPLE_MAX_N if cap is None else cap
    if a < 3 or b < 3:
        raise InputError(f"K_{{a,b}} plus cycles needs a, b >= 3, got {a}, {b}")
    if max(a, b) > cap:
        raise CapExceeded(f"K_{{{a},{b}}} exceeds the example cap", cap)
    assignment = Side(assignment)
    g, first, second = kab_graph(a, b)
    bg = empty_bias(g)
    pair = {first, second}
    if assignment == Side.L:
        return split_tripartition(bg, pair)
    if assignment == Side.F:
        return split_tripartition(bg, [c for c in bg.unbalanced if c not in pair])
    raise InputError("the added cycles must go to L or F")


@register_example
class KabPlusCycles(BaseExample):
    NAME = 'kab-plus-cycles'
    DESCRIPTION = 'K_{a,b} plus a cycle on each side, the two cycles split from the rest'
    DEFAULTS = {'a': 3, 'b': 3, 'side': 'F'}

    def build(self) -> ExampleBundle:
        a = self._int_param('a', 3)
        b = self._int_param('b', 3)
        side = str(self.params['side']).upper()
        if side not in ('L', 'F'):
            raise InputError(f"{self.NAME}: side must be L or F, got {side}")
        t = kab_plus_cycles(a, b, side)
        _, first, second = kab_graph(a, b)
        key = 'lift' if side == 'L' else 'frame'
        return self.bundle(
            graph=t.graph,
            tripartition=t,
            bias_rule={'rule': 'empty'},
            tripartition_rule={'rule': 'split', 'params': {key: [list(first), list(second)]}},
        )
