"""Flat `key: value` run configuration files."""

from pathlib import Path
from typing import Any, Dict, Union

import yaml

from ..exceptions import ConfigFileError
from ..models.run import RunConfig


class ConfigFileReader:
    """Loads and checks a flat YAML mapping of RunConfig fields."""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)

    def load(self) -> Dict[str, Any]:
        if not self.path.exists():
            raise ConfigFileError(f"Config file not found: {self.path}")
        try:
            data = yaml.safe_load(self.path.read_text(encoding="utf-8"))
        except (OSError, UnicodeDecodeError) as e:
            raise ConfigFileError(f"Cannot read config file {self.path}: {e}") from e
        except yaml.YAMLError as e:
            raise ConfigFileError(f"Config file {self.path} is not valid key: value text: {e}") from e
        if data is None:
            return {}
        if not isinstance(data, dict):
            raise ConfigFileError(f"Config file {self.path} must hold key: value lines")
        return self._check_keys(data)

    def _check_keys(self, data: Dict[Any, Any]) -> Dict[str, Any]:
        known = set(RunConfig.model_fields)
        unknown = sorted(str(key) for key in data if key not in known)
        if unknown:
            raise ConfigFileError(
                f"Unknown key(s) in {self.path}: {', '.join(unknown)}.\n\n"
                f"Known keys: {', '.join(sorted(known))}"
            )
        nested = sorted(str(key) for key, value in data.items() if isinstance(value, (dict, list)))
        if nested:
            raise ConfigFileError(f"Config values must be scalars; nested value for {', '.join(nested)}")
        return {str(key): value for key, value in data.items()}
