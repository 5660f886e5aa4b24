import importlib
import logging
import os
import pkgutil

from quasimatroid.common import InputError

logger = logging.getLogger(__name__)

_registry = {}


def register_example(cls):
    """Decorator to register an instance generator."""
    _registry[cls.NAME] = cls
    logger.info(f"Registered example: {cls.NAME} ({cls.DESCRIPTION})")
    return cls


def get_example_class(name: str):
    return _registry.get(name)


def get_all_examples():
    return dict(sorted(_registry.items()))


def get_example(name: str, **params):
    """Instantiate a generator, keeping only the parameters it declares."""
    cls = _registry.get(name)
    if cls is None:
        raise InputError(f"Unknown example: {name}")
    filtered = {k: v for k, v in params.items() if k in cls.DEFAULTS and v is not None}
    return cls(**filtered)


def _auto_discover():
    package_dir = os.path.dirname(__file__)
    for _, module_name, _ in pkgutil.iter_modules([package_dir]):
        if module_name not in ('base', 'common', '__init__'):
            try:
                importlib.import_module(f'.{module_name}', package=__package__)
            except Exception as e:
                logger.error(f"Failed to load example module {module_name}: {e}")


_auto_discover()
