#!/usr/bin/env python3
"""
Run Configuration

Loads hilbert_config.json and environment overrides, and holds the validated
settings of a single CLI run.
"""

import json
import logging
import os
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional

from hilbert_errors import InvalidInputError
from branching import GroupId

logger = logging.getLogger(__name__)

CONFIG_ENV = 'INVARIANT_HILBERT_CONFIG'
MAX_DEGREE_ENV = 'INVARIANT_HILBERT_MAX_DEGREE'
WORKERS_ENV = 'INVARIANT_HILBERT_WORKERS'
LOG_LEVEL_ENV = 'INVARIANT_HILBERT_LOG_LEVEL'

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[2] / "hilbert_config.json"

DEFAULT_SETTINGS: Dict[str, Any] = {
    'max_degree_cap': 32,
    'default_format': 'text',
    'default_oracle': 'none',
    'workers': 1,
    'log_level': 'WARNING',
    'golden_catalog': None
}


class Oracle(Enum):
    NONE = "none"
    WEYL = "weyl"
    BRANCHING = "branching"


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"


def load_config(path: Optional[str] = None) -> Dict[str, Any]:
    """
    Read settings from a JSON file, then apply environment overrides

    Args:
        path: Config file; defaults to $INVARIANT_HILBERT_CONFIG, then the
              repository's hilbert_config.json

    Returns:
        Settings dictionary with every key of DEFAULT_SETTINGS
    """
    settings = dict(DEFAULT_SETTINGS)
    config_path = Path(path or os.environ.get(CONFIG_ENV, DEFAULT_CONFIG_PATH))

    if config_path.exists():
        try:
            with open(config_path, 'r', encoding='utf-8') as file:
                loaded = json.load(file)
        except json.JSONDecodeError as e:
            logger.error(f"Failed to parse config file {config_path}: {e}")
            raise InvalidInputError(f"Malformed config file {config_path}: {e}")
        if not isinstance(loaded, dict):
            raise InvalidInputError(f"Config file {config_path} must hold a JSON object")
        unknown = set(loaded) - set(DEFAULT_SETTINGS)
        if unknown:
            logger.warning(f"Ignoring unknown config keys: {', '.join(sorted(unknown))}")
        settings.update({key: value for key, value in loaded.items() if key in DEFAULT_SETTINGS})
    else:
        logger.info(f"No config file at {config_path}; using built-in defaults")

    if os.environ.get(MAX_DEGREE_ENV):
        settings['max_degree_cap'] = _env_int(MAX_DEGREE_ENV)
    if os.environ.get(WORKERS_ENV):
        settings['workers'] = _env_int(WORKERS_ENV)
    if os.environ.get(LOG_LEVEL_ENV):
        settings['log_level'] = os.environ[LOG_LEVEL_ENV]
    return settings


def _env_int(name: str) -> int:
    try:
        return int(os.environ[name])
    except ValueError:
        raise InvalidInputError(f"Environment variable {name} must be an integer, got {os.environ[name]!r}")


@dataclass
class RunConfig:
    """Validated settings of one computation"""
    group: GroupId
    spec_text: str
    maxdeg: int
    oracle: Oracle = Oracle.NONE
    format: OutputFormat = OutputFormat.TEXT
    golden_key: Optional[str] = None
    workers: int = 1
    max_degree_cap: int = 32
    golden_catalog: Optional[str] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if isinstance(self.oracle, str):
            self.oracle = Oracle(self.oracle)
        if isinstance(self.format, str):
            self.format = OutputFormat(self.format)
        if self.maxdeg < 0:
            raise InvalidInputError(f"maxdeg must be nonnegative, got {self.maxdeg}")
        if self.maxdeg > self.max_degree_cap:
            raise InvalidInputError(f"maxdeg {self.maxdeg} exceeds the configured cap {self.max_degree_cap}")
        if self.workers < 1:
            raise InvalidInputError(f"workers must be positive, got {self.workers}")
