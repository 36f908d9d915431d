#!/usr/bin/env python3
"""
Rational Series Module

Closed-form rational Hilbert series, their exact expansion, and the golden
catalog of closed forms.
"""

from .rational_form import RationalForm, expand_rational
from .golden_catalog import (
    GoldenEntry, DEFAULT_CATALOG_PATH, make_key, golden_entries, golden_forms, golden_entry
)

__version__ = '1.0.0'
__all__ = [
    'RationalForm',
    'expand_rational',
    'GoldenEntry',
    'DEFAULT_CATALOG_PATH',
    'make_key',
    'golden_entries',
    'golden_forms',
    'golden_entry'
]
