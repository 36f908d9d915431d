#!/usr/bin/env python3
"""
Exterior Invariants Module

Hilbert polynomials of Lambda(S^2 V)^G and Lambda(Lambda^2 V)^G for
G = Sp(2k), O(n), SO(n), by filtering the GL(n)-decomposition and by explicit
summation formulas.
"""

from .hilbert_polynomial import HilbertPolynomial, exterior_generator_product
from .decomposition import (
    ExteriorKind, exterior_decomposition, exterior_invariant_poly, exterior_total_dimension
)
from .closed_forms import (
    SummationBlock, ClosedForm, closed_form_for, closed_form_exterior,
    known_generator_degrees, generator_product_for
)

__version__ = '1.0.0'
__all__ = [
    'HilbertPolynomial',
    'exterior_generator_product',
    'ExteriorKind',
    'exterior_decomposition',
    'exterior_invariant_poly',
    'exterior_total_dimension',
    'SummationBlock',
    'ClosedForm',
    'closed_form_for',
    'closed_form_exterior',
    'known_generator_degrees',
    'generator_product_for'
]
