#!/usr/bin/env python3
"""
Hilbert Engine Module

Module specifications, characters of symmetric powers, Schur multiplicity
tables and Hilbert series of invariant rings, computed by the predicate filter
and by substitution into multiplicity series, plus the textual module spec
parser.
"""

from .module_spec import ModuleSpec
from .series import TruncatedSeries
from .engine import (
    HilbertEngine, MultiplicityTable, module_character,
    symmetric_algebra_characters, multiplicity_table, series_from_table,
    hilbert_series_invariants
)
from .substitution import (
    multiplicity_series_terms, substitution_series, hilbert_series_via_substitution
)
from .spec_parser import parse_module_spec

__version__ = '1.0.0'
__all__ = [
    'ModuleSpec',
    'TruncatedSeries',
    'HilbertEngine',
    'MultiplicityTable',
    'module_character',
    'symmetric_algebra_characters',
    'multiplicity_table',
    'series_from_table',
    'hilbert_series_invariants',
    'multiplicity_series_terms',
    'substitution_series',
    'hilbert_series_via_substitution',
    'parse_module_spec'
]
