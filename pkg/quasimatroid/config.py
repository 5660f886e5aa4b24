import os


def _env_int(name, default):
    value = os.environ.get(name)
    if value is None or value.strip() == '':
        return default
    return int(value)


class BaseConfig:
    """Base configuration shared across all environments."""

    # Enumeration caps (QUASIMATROID_CAP overrides the cycle limit)
    CYCLE_LIMIT = _env_int('QUASIMATROID_CAP', 1_000_000)
    BALANCING_CANDIDATE_CAP = _env_int('BALANCING_CANDIDATE_CAP', 5_000_000)
    BALANCING_WARN_SIZE = 6
    TRIPARTITION_ENUM_CAP = 12  # disjointness groups
    EXAMPLE_MAX_N = _env_int('EXAMPLE_MAX_N', 8)

    # Exhaustive-check caps (ground set sizes)
    EXHAUSTIVE_EDGE_CAP = _env_int('EXHAUSTIVE_EDGE_CAP', 12)
    AXIOM_EDGE_CAP = _env_int('AXIOM_EDGE_CAP', 16)
    RANK_AXIOM_EDGE_CAP = 14
    BASES_EDGE_CAP = 16
    QUADRUPLE_CAP = _env_int('QUADRUPLE_CAP', 10 ** 7)

    # Sampling
    SAMPLE_SIZE = _env_int('SAMPLE_SIZE', 2000)
    DEFAULT_SEED = _env_int('QUASIMATROID_SEED', 0)

    # Verification runner
    VERIFY_WORKERS = _env_int('VERIFY_WORKERS', 4)

    # Logging
    LOG_DIR = os.environ.get('LOG_DIR', 'logs')
    LOG_FILE_MAX_BYTES = 5 * 1024 * 1024  # 5MB per file
    LOG_FILE_BACKUP_COUNT = 3
    LOG_FORMAT = '%(asctime)s [%(levelname)s] %(name)s: %(message)s'


class DevelopmentConfig(BaseConfig):
    """Development environment configuration."""

    LOG_FILE_MAX_BYTES = 0


class ProductionConfig(BaseConfig):
    """Batch verification runs."""

    VERIFY_WORKERS = _env_int('VERIFY_WORKERS', 8)


class TestingConfig(BaseConfig):
    """Testing environment configuration."""

    SAMPLE_SIZE = 200
    VERIFY_WORKERS = 2
    LOG_FILE_MAX_BYTES = 0  # Disable file logging in tests


config_map = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
}


def get_config(name=None):
    """Return the configuration class for *name* or QUASIMATROID_ENV."""
    name = name or os.environ.get('QUASIMATROID_ENV', 'development')
    return config_map.get(name, config_map['development'])
