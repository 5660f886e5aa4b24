"""Complete graphs with the empty bias, and graphic complete graphs."""
from __future__ import annotations

import itertools

from quasimatroid.analysis.bias import empty_bias, graphic_bias
from quasimatroid.analysis.tripartition import frame_tripartition, lift_tripartition
from quasimatroid.common import CapExceeded, InputError, Side
from quasimatroid.config import get_config
from quasimatroid.examples import register_example
from quasimatroid.examples.base import BaseExample
from quasimatroid.examples.common import ExampleBundle
from quasimatroid.models import Multigraph, Tripartition


def complete_graph(n: int, cap: int | None = None) -> Multigraph:
    """K_n with edges in lexicographic vertex-pair order.

    Raises:
        CapExceeded: ``n`` is above ``cap`` (default EXAMPLE_MAX_N).
    """
    cap = get_config().EXAMPLE_MAX_N if cap is None else cap
    if n > cap:
        raise CapExceeded(f"K_{n} exceeds the example cap", cap)
    return Multigraph.from_edges(n, itertools.combinations(range(n), 2))


def complete_empty_bias(n: int, side: Side | str = Side.F, cap: int | None = None) -> Tripartition:
    """(K_n, no balanced cycles) with every cycle on one side.

    Raises:
        CapExceeded: ``n`` is above ``cap`` (default EXAMPLE_MAX_N).
    """
    side = Side(side)
    bg = empty_bias(complete_graph(n, cap))
    if side == Side.F:
        return frame_tripartition(bg)
    if side == Side.L:
        return lift_tripartition(bg)
    raise InputError("the empty bias has no balanced cycles; side must be L or F")


def complete_graphic(n: int, cap: int | None = None) -> Tripartition:
    """Every cycle of K_n balanced: the cycle matroid."""
    return frame_tripartition(graphic_bias(complete_graph(n, cap)))


@register_example
class CompleteEmptyBias(BaseExample):
    NAME = 'complete-empty-bias'
    DESCRIPTION = 'K_n, no balanced cycles, all cycles in F or all in L'
    DEFAULTS = {'n': 6, 'side': 'F'}

    def build(self) -> ExampleBundle:
        n = self._int_param('n', 3)
        side = str(self.params['side']).upper()
        if side not in ('L', 'F'):
            raise InputError(f"{self.NAME}: side must be L or F, got {side}")
        t = complete_empty_bias(n, side)
        return self.bundle(
            graph=t.graph,
            tripartition=t,
            bias_rule={'rule': 'empty'},
            tripartition_rule={'rule': 'frame' if side == 'F' else 'lift'},
        )


@register_example
class CompleteGraphic(BaseExample):
    NAME = 'complete-graphic'
    DESCRIPTION = 'K_n, every cycle balanced'
    DEFAULTS = {'n': 4}

    def build(self) -> ExampleBundle:
        t = complete_graphic(self._int_param('n', 1))
        return self.bundle(
            graph=t.graph,
            tripartition=t,
            bias_rule={'rule': 'graphic'},
            tripartition_rule={'rule': 'frame'},
        )
