import json
import os
from typing import Any, Dict

import yaml

from fp_walls.types.config import RunConfig

CONFIG_SUFFIXES = (".yaml", ".yml", ".json")


class ConfigLoader:
    @classmethod
    def load_data(
        cls,
        file_path: str,
        encoding: str = 'utf-8'
    ) -> Dict[str, Any]:
        if not os.path.exists(file_path):
            raise ValueError(f"Run config file {file_path} not found")
        _, suffix = os.path.splitext(file_path)
        if suffix not in CONFIG_SUFFIXES:
            raise ValueError(f"Run config type {suffix} not recognized")
        with open(file_path, "r", encoding=encoding) as f:
            try:
                if suffix == ".json":
                    data = json.load(f)
                else:
                    data = yaml.safe_load(f)
            except (json.JSONDecodeError, yaml.YAMLError) as e:
                raise ValueError(f"Run config {file_path} could not be parsed: {e}") from e
        return data or {}

    @classmethod
    def load(
        cls,
        file_path: str,
        overrides: Dict[str, Any] | None = None,
    ) -> RunConfig:
        """Load a run config and apply nested overrides (e.g. {"budget": {"depth": 30}})."""
        data = cls.load_data(file_path)
        return cls.merge(RunConfig.model_validate(data), overrides or {})

    @classmethod
    def merge(
        cls,
        config: RunConfig,
        overrides: Dict[str, Any],
    ) -> RunConfig:
        data = config.model_dump()
        for key, value in overrides.items():
            if isinstance(value, dict):
                data.setdefault(key, {}).update(value)
            else:
                data[key] = value
        return RunConfig.model_validate(data)
