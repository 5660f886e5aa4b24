from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

EdgeSet = tuple[int, ...]
Cycle = tuple[int, ...]


def edge_set(edges: Iterable[int]) -> EdgeSet:
    """Canonical (sorted, duplicate-free) form of an edge collection."""
    return tuple(sorted({int(e) for e in edges}))


class Side(str, Enum):
    B = 'B'
    L = 'L'
    F = 'F'


class BraceletValue(str, Enum):
    DEPENDENT = 'dependent'
    INDEPENDENT = 'independent'


class ShapeKind(str, Enum):
    FOREST = 'forest'
    SINGLE_CYCLE = 'single_cycle'
    THETA = 'theta'
    TIGHT_HANDCUFF = 'tight_handcuff'
    LOOSE_HANDCUFF = 'loose_handcuff'
    BRACELET = 'bracelet'
    OTHER = 'other'


# Shapes a circuit of a quasi-graphic matroid may take
CIRCUIT_SHAPES = frozenset({
    ShapeKind.SINGLE_CYCLE,
    ShapeKind.THETA,
    ShapeKind.TIGHT_HANDCUFF,
    ShapeKind.LOOSE_HANDCUFF,
    ShapeKind.BRACELET,
})


class CheckResult(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    SKIP = 'skip'


class FrameLift(str, Enum):
    FRAME = 'frame'
    LIFT = 'lift'
    BOTH = 'both'
    NEITHER = 'neither'


# ---------------------------------------------------------------------------
# Violation witnesses
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ThetaViolation:
    theta: EdgeSet
    cycles: tuple[Cycle, Cycle, Cycle]
    balanced: tuple[Cycle, Cycle]

    kind = 'ThetaViolation'

    def to_dict(self) -> dict:
        return {
            'type': self.kind,
            'theta': list(self.theta),
            'cycles': [list(c) for c in self.cycles],
            'balanced': [list(c) for c in self.balanced],
        }


@dataclass(frozen=True)
class MeetViolation:
    lift_cycle: Cycle
    frame_cycle: Cycle

    kind = 'MeetViolation'

    def to_dict(self) -> dict:
        return {
            'type': self.kind,
            'c_in_L': list(self.lift_cycle),
            'c_in_F': list(self.frame_cycle),
        }


@dataclass(frozen=True)
class ChiViolation:
    first: object   # Bracelet
    second: object  # Bracelet
    first_value: BraceletValue
    second_value: BraceletValue

    kind = 'ChiViolation'

    def to_dict(self) -> dict:
        return {
            'type': self.kind,
            'b1': self.first.to_dict(),
            'b2': self.second.to_dict(),
            'values': [self.first_value.value, self.second_value.value],
        }


# ---------------------------------------------------------------------------
# Exceptions
# ---------------------------------------------------------------------------

class QuasiMatroidError(Exception):
    """Root of every error raised by this package."""

    def to_dict(self) -> dict:
        return {'error': type(self).__name__, 'message': str(self)}


class InvalidGraph(QuasiMatroidError):
    pass


class InvalidBias(QuasiMatroidError):
    def __init__(self, message: str, violation=None):
        super().__init__(message)
        self.violation = violation

    def to_dict(self) -> dict:
        data = super().to_dict()
        if self.violation is not None:
            data['witness'] = self.violation.to_dict()
        return data


class InvalidTripartition(QuasiMatroidError):
    pass


class InputError(QuasiMatroidError):
    """Malformed JSON input or an unknown rule/example name."""


class CapError(QuasiMatroidError):
    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap

    def to_dict(self) -> dict:
        data = super().to_dict()
        data['cap'] = self.cap
        return data


class CycleLimitExceeded(CapError):
    pass


class SearchCapExceeded(CapError):
    pass


class CapExceeded(CapError):
    pass


class GroundSetTooLarge(CapError):
    pass


class GraphBalanced(QuasiMatroidError):
    pass


class ImproperTripartition(InvalidBias):
    pass


class ImproperChi(InvalidBias):
    pass


class DisconnectedGraph(QuasiMatroidError):
    pass


class DegenerateTripartition(QuasiMatroidError):
    pass


class LoopContraction(QuasiMatroidError):
    pass


class BasepointNotLink(QuasiMatroidError):
    pass


class BasepointNotUnbalancedLoop(QuasiMatroidError):
    pass


class EdgeSetCollision(QuasiMatroidError):
    pass


class NotAFourCycle(QuasiMatroidError):
    pass
