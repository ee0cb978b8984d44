"""
Configuration loading for size caps, catalog location, output format and logging.
"""

import json
import logging
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Dict, Optional

from src.utils.errors import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = "config/modtop.json"
OUTPUT_FORMATS = ("json", "text", "dot")


@dataclass(frozen=True)
class Config:
    """Size caps and front-end settings.

    ``oracle_cap`` bounds the orders at which brute-force oracles run and
    ``subset_cap`` bounds the spectra for which every subset is scanned.
    """

    ring_cap: int = 64
    module_cap: int = 256
    end_cap: int = 4096
    oracle_cap: int = 16
    subset_cap: int = 10
    catalog_path: Optional[str] = None
    output_format: str = "text"
    log_level: str = "INFO"
    log_file: Optional[str] = None
    workers: int = 1

    def __post_init__(self):
        for name in ("ring_cap", "module_cap", "end_cap", "oracle_cap", "subset_cap", "workers"):
            value = getattr(self, name)
            if not isinstance(value, int) or value <= 0:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"output format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Config":
        caps = data.get("caps", {})
        output = data.get("output", {})
        logging_config = data.get("logging", {})
        verify = data.get("verify", {})
        return cls(
            ring_cap=caps.get("ring", 64),
            module_cap=caps.get("module", 256),
            end_cap=caps.get("end_ring", 4096),
            oracle_cap=caps.get("oracle", 16),
            subset_cap=caps.get("subsets", 10),
            catalog_path=data.get("catalog"),
            output_format=output.get("format", "text"),
            log_level=logging_config.get("level", "INFO"),
            log_file=logging_config.get("file"),
            workers=verify.get("workers", 1),
        )

    def override(self, **changes: Any) -> "Config":
        """Return a copy with every non-None keyword applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


DEFAULT_CONFIG = Config()


def load_config(path: Optional[str] = None) -> Config:
    """Load configuration from a JSON file.

    Args:
        path: Path to the configuration file; the default location is used when None

    Returns:
        Config with defaults for every missing key
    """
    config_path = Path(path or DEFAULT_CONFIG_PATH)
    if not config_path.exists():
        if path:
            raise ConfigError(f"Configuration file not found: {config_path}")
        logger.debug(f"No configuration file at {config_path}, using defaults")
        return DEFAULT_CONFIG

    try:
        with open(config_path, encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigError(f"{config_path}:{e.lineno}:{e.colno}: {e.msg}")

    if not isinstance(data, dict):
        raise ConfigError(f"{config_path}: top level must be an object")

    config = Config.from_dict(data)
    logger.debug(f"Loaded configuration from {config_path}: {config}")
    return config
