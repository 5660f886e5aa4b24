from quasimatroid.models.multigraph import Multigraph
from quasimatroid.models.cycles import CycleIndex
from quasimatroid.models.biased_graph import BiasedGraph
from quasimatroid.models.tripartition import Tripartition
from quasimatroid.models.bracelet import Bracelet, BraceletFunction, BraceletGraph
from quasimatroid.models.circuits import CircuitFamily

__all__ = [
    'Multigraph',
    'CycleIndex',
    'BiasedGraph',
    'Tripartition',
    'Bracelet',
    'BraceletFunction',
    'BraceletGraph',
    'CircuitFamily',
]
