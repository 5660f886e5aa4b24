"""Quasi-graphic and biased-graphic matroids from graphs with cycle tripartitions."""
import importlib
import logging
import os

from logging.handlers import RotatingFileHandler

from dotenv import load_dotenv

__version__ = '1.0.0'

_PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def configure(config_name=None):
    """Load environment files, pick a configuration and set up logging.

    Args:
        config_name: Configuration name ('development', 'production' or
                     'testing'). Defaults to QUASIMATROID_ENV or 'development'.

    Returns:
        The selected configuration class.
    """
    env = config_name or os.environ.get('QUASIMATROID_ENV', 'development')
    env_file = os.path.join(_PROJECT_ROOT, f'.env.{env}')
    if os.path.exists(env_file):
        load_dotenv(env_file)

    # A local .env overrides the environment-specific one
    dotenv_path = os.path.join(_PROJECT_ROOT, '.env')
    if os.path.exists(dotenv_path):
        load_dotenv(dotenv_path, override=True)

    if config_name is None:
        config_name = os.environ.get('QUASIMATROID_ENV', 'development')

    # Class attributes are read at import time
    from quasimatroid import config as config_module
    importlib.reload(config_module)
    config_class = config_module.get_config(config_name)

    configure_logging(config_class)
    return config_class


def configure_logging(config_class):
    """Set up RotatingFileHandler on the root logger."""
    max_bytes = getattr(config_class, 'LOG_FILE_MAX_BYTES', 0)
    if not max_bytes:
        return

    log_dir = getattr(config_class, 'LOG_DIR', 'logs')
    os.makedirs(log_dir, exist_ok=True)

    log_file = os.path.join(log_dir, 'quasimatroid.log')
    root = logging.getLogger()
    for existing in root.handlers:
        if (isinstance(existing, RotatingFileHandler)
                and existing.baseFilename == os.path.abspath(log_file)):
            return

    handler = RotatingFileHandler(
        log_file,
        maxBytes=max_bytes,
        backupCount=getattr(config_class, 'LOG_FILE_BACKUP_COUNT', 3),
    )
    handler.setFormatter(logging.Formatter(
        getattr(config_class, 'LOG_FORMAT',
                '%(asctime)s [%(levelname)s] %(name)s: %(message)s')
    ))
    handler.setLevel(logging.DEBUG)

    root.addHandler(handler)
    if root.level == logging.WARNING:
        root.setLevel(logging.DEBUG)
