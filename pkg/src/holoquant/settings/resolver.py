"""Run configuration resolution."""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

from pydantic import ValidationError

from ..exceptions import ConfigurationError
from ..models.run import RunConfig
from .config_file import ConfigFileReader

logger = logging.getLogger(__name__)

ENV_PREFIX = "HOLOQUANT_"


class ConfigResolver:
    """Builds a RunConfig from flags, a config file, environment variables and defaults."""

    def __init__(self, environ: Optional[Mapping[str, str]] = None):
        self.environ = os.environ if environ is None else environ

    def resolve(
        self,
        config_path: Union[str, Path, None] = None,
        **overrides: Any,
    ) -> RunConfig:
        """Implements the priority hierarchy and returns a validated RunConfig."""
        values: Dict[str, Any] = {}

        # 4. Environment variables (lowest priority above the defaults)
        values.update(self._from_environment())

        # 3. Config file
        if config_path is not None:
            from_file = ConfigFileReader(config_path).load()
            logger.info("Loaded %d setting(s) from %s", len(from_file), config_path)
            values.update(from_file)

        # 1. Explicit flags
        values.update({key: value for key, value in overrides.items() if value is not None})

        try:
            return RunConfig(**values)
        except ValidationError as e:
            raise ConfigurationError(f"Invalid configuration:\n{e}") from e

    def _from_environment(self) -> Dict[str, Any]:
        found = {}
        for name in RunConfig.model_fields:
            raw = self.environ.get(ENV_PREFIX + name.upper())
            if raw is not None:
                found[name] = raw
        if found:
            logger.debug("Environment settings: %s", ", ".join(sorted(found)))
        return found
