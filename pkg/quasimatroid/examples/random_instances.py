from __future__ import annotations

import numpy as np

from quasimatroid.analysis.bias import signed_bias
from quasimatroid.analysis.tripartition import disjointness_groups, split_tripartition
from quasimatroid.common import CapExceeded
from quasimatroid.config import get_config
from quasimatroid.examples import register_example
from quasimatroid.examples.base import BaseExample
from quasimatroid.examples.common import ExampleBundle
from quasimatroid.models import Multigraph, Tripartition


def random_signed_graph(rng: np.random.Generator, vertices: int,
                        edges: int) -> tuple[Multigraph, list[int]]:
    """Uniform endpoint pairs (loops and parallel edges allowed) and a fair coin per edge sign."""
    ends = rng.integers(0, vertices, size=(edges, 2))
    negative = np.nonzero(rng.random(edges) < 0.5)[0]
    return Multigraph.from_edges(vertices, ends.tolist()), negative.tolist()


def random_instance(seed: int, vertices: int = 4, edges: int = 7,
                    cap: int | None = None) -> Tripartition:
    """A seeded signed multigraph with a uniformly chosen proper (L, F) split.

    Each disjointness group of unbalanced cycles goes to L on a fair coin.

    Raises:
        CapExceeded: more than ``cap`` edges (default EXHAUSTIVE_EDGE_CAP).
    """
    cap = get_config().EXHAUSTIVE_EDGE_CAP if cap is None else cap
    if edges > cap:
        raise CapExceeded(f"{edges} random edges exceed the cap", cap)
    rng = np.random.default_rng(seed)
    g, negative = random_signed_graph(rng, max(vertices, 1), edges)
    bg = signed_bias(g, negative)
    groups = disjointness_groups(bg)
    coins = rng.random(len(groups)) < 0.5
    lift = [c for group, heads in zip(groups, coins) if heads for c in group]
    return split_tripartition(bg, lift)


@register_example
class RandomInstance(BaseExample):
    NAME = 'random'
    DESCRIPTION = 'seeded random signed multigraph with a random proper split'
    DEFAULTS = {'seed': 0, 'vertices': 4, 'edges': 7}

    def build(self) -> ExampleBundle:
        t = random_instance(
            self._int_param('seed'),
            self._int_param('vertices', 1),
            self._int_param('edges'),
        )
        return self.bundle(graph=t.graph, tripartition=t)
