from __future__ import annotations

import logging
from abc import ABC, abstractmethod

from quasimatroid.common import InputError
from quasimatroid.examples.common import ExampleBundle


class BaseExample(ABC):
    NAME: str = ""
    DESCRIPTION: str = ""
    DEFAULTS: dict = {}

    def __init__(self, **params):
        unknown = set(params) - set(self.DEFAULTS)
        if unknown:
            raise InputError(f"{self.NAME} has no parameter {sorted(unknown)[0]!r}")
        self.params = {**self.DEFAULTS, **params}
        self.logger = logging.getLogger(f'example.{self.NAME}')

    @abstractmethod
    def build(self) -> ExampleBundle:
        ...

    def bundle(self, **fields) -> ExampleBundle:
        return ExampleBundle(name=self.NAME, params=dict(self.params), **fields)

    def _int_param(self, key: str, low: int = 0) -> int:
        try:
            value = int(self.params[key])
        except (TypeError, ValueError):
            raise InputError(f"{self.NAME}: {key} must be an integer") from None
        if value < low:
            raise InputError(f"{self.NAME}: {key} must be at least {low}, got {value}")
        return value
