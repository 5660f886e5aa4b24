from __future__ import annotations

from dataclasses import dataclass, field

from quasimatroid.analysis.tripartition import tripartition_from_chi
from quasimatroid.common import Cycle, InputError
from quasimatroid.models import BiasedGraph, BraceletFunction, Multigraph, Tripartition


@dataclass
class ExampleBundle:
    """A generated or decoded instance.

    ``bias_rule`` and ``tripartition_rule`` hold the compact rule form the
    instance was generated from; serialisation prefers them to explicit
    cycle lists.
    """
    name: str
    graph: Multigraph
    tripartition: Tripartition | None = None
    bias: BiasedGraph | None = None
    chi: BraceletFunction | None = None
    homology: dict[Cycle, tuple[int, int]] | None = None
    params: dict = field(default_factory=dict)
    max_length: int | None = None
    bias_rule: dict | None = None
    tripartition_rule: dict | None = None

    @property
    def instance(self) -> str:
        if not self.params:
            return self.name
        args = ','.join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.name}({args})"

    @property
    def biased_graph(self) -> BiasedGraph:
        if self.tripartition is not None:
            return self.tripartition.biased_graph
        if self.bias is not None:
            return self.bias
        raise InputError(f"{self.instance} carries neither a bias nor a tripartition")

    def resolve(self) -> Tripartition:
        """The tripartition, derived from the bracelet function when only that is given."""
        if self.tripartition is not None:
            return self.tripartition
        if self.chi is not None:
            return tripartition_from_chi(self.biased_graph, self.chi)
        raise InputError(f"{self.instance} carries no tripartition or bracelet function")
