#!/usr/bin/env python3
"""
CLI Module

Command-line surface: run configuration and the series / exterior / branch / lr / golden commands.
"""

from hilbert_engine import parse_module_spec
from .config import RunConfig, Oracle, OutputFormat, load_config, DEFAULT_SETTINGS

__version__ = '1.0.0'
__all__ = [
    'parse_module_spec',
    'RunConfig',
    'Oracle',
    'OutputFormat',
    'load_config',
    'DEFAULT_SETTINGS'
]
