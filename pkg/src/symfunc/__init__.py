#!/usr/bin/env python3
"""
Symmetric Functions Module

Exact symmetric-function arithmetic: sparse polynomials, Schur polynomials,
Kostka numbers, Schur-basis decomposition and Littlewood-Richardson
coefficients.
"""

from .sympoly import SymPoly, Exponent
from .schur import (
    SchurExpansion, schur_polynomial, kostka_number, schur_expand, gl_dimension
)
from .littlewood_richardson import lr_coefficient

__version__ = '1.0.0'
__all__ = [
    'SymPoly',
    'Exponent',
    'SchurExpansion',
    'schur_polynomial',
    'kostka_number',
    'schur_expand',
    'gl_dimension',
    'lr_coefficient'
]
