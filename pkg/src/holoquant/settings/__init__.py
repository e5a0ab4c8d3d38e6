"""Run configuration: config files and the resolution hierarchy."""

from .config_file import ConfigFileReader
from .resolver import ENV_PREFIX, ConfigResolver

__all__ = [
    "ConfigResolver",
    "ConfigFileReader",
    "ENV_PREFIX",
]
