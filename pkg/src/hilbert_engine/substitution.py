#!/usr/bin/env python3
"""
Multiplicity Series Substitution

Evaluates the multiplicity series M (in x-variables) and M' (in the
coordinates v_i = x_1 ... x_i) at the points that isolate invariants:

  Sp(2k): M'(0, 1, 0, 1, ..., 0, 1; t)
  O(n):   M_n(t) = (M_{n-1}(-1, t) + M_{n-1}(1, t)) / 2, iterated over x_n, ..., x_1
  SO(n):  the same averaging over v_1, ..., v_{n-1} applied to M', then v_n = 1

All work happens on the finite table of (exponent, degree) terms with exact
rational arithmetic.
"""

import logging
from fractions import Fraction
from typing import Dict, Tuple

from hilbert_errors import InternalInconsistencyError
from branching import GroupId, GroupKind
from .engine import MultiplicityTable, HilbertEngine
from .module_spec import ModuleSpec
from .series import TruncatedSeries

logger = logging.getLogger(__name__)

# (exponent vector, t-degree) -> coefficient
TermTable = Dict[Tuple[Tuple[int, ...], int], Fraction]


def multiplicity_series_terms(table: MultiplicityTable, coordinates: str = "x") -> TermTable:
    """
    Term table of M (coordinates "x": exponents lambda) or M' (coordinates "v":
    exponents lambda_i - lambda_{i+1}).
    """
    terms: TermTable = {}
    for degree, partition, multiplicity in table.terms():
        padded = partition.padded(table.n)
        if coordinates == "v":
            exponent = tuple(padded[i] - (padded[i + 1] if i + 1 < table.n else 0) for i in range(table.n))
        elif coordinates == "x":
            exponent = padded
        else:
            raise ValueError(f"Unknown coordinates {coordinates!r}")
        terms[(exponent, degree)] = Fraction(multiplicity)
    return terms


def _specialize(terms: TermTable, index: int, value: int) -> TermTable:
    """Substitute a number for the variable at index and drop it from the key"""
    result: TermTable = {}
    for (exponent, degree), coeff in terms.items():
        power = exponent[index]
        factor = (1 if power == 0 else 0) if value == 0 else value ** power
        if factor:
            key = (exponent[:index] + exponent[index + 1:], degree)
            result[key] = result.get(key, 0) + coeff * factor
    return {key: c for key, c in result.items() if c}


def _average_signs(terms: TermTable, index: int) -> TermTable:
    """(f(..., -1, ...) + f(..., 1, ...)) / 2 in the variable at index"""
    minus = _specialize(terms, index, -1)
    plus = _specialize(terms, index, 1)
    result: TermTable = {}
    for part in (minus, plus):
        for key, coeff in part.items():
            result[key] = result.get(key, 0) + coeff / 2
    return {key: c for key, c in result.items() if c}


def _collect(terms: TermTable, maxdeg: int) -> TruncatedSeries:
    coeffs = [Fraction(0)] * (maxdeg + 1)
    for (exponent, degree), coeff in terms.items():
        if exponent:
            raise InternalInconsistencyError(f"Variables left after substitution: {exponent}")
        if degree <= maxdeg:
            coeffs[degree] += coeff
    for degree, value in enumerate(coeffs):
        if value.denominator != 1:
            raise InternalInconsistencyError(f"Non-integer coefficient {value} at t^{degree}")
    return TruncatedSeries([int(v) for v in coeffs], maxdeg)


def substitution_series(table: MultiplicityTable, group: GroupId, maxdeg: int) -> TruncatedSeries:
    """
    Hilbert series of C[W]^G read off the multiplicity series by substitution.

    Args:
        table: Schur multiplicities of S(W)
        group: Sp(n), O(n) or SO(n)
        maxdeg: Truncation degree

    Returns:
        TruncatedSeries, equal to the predicate-filtered series
    """
    n = table.n
    if group.kind == GroupKind.SP:
        terms = multiplicity_series_terms(table, "v")
        # peel off variables from the right so indices stay valid
        for index in reversed(range(n)):
            terms = _specialize(terms, index, 0 if index % 2 == 0 else 1)
    elif group.kind == GroupKind.O:
        terms = multiplicity_series_terms(table, "x")
        for index in reversed(range(n)):
            terms = _average_signs(terms, index)
    else:
        terms = multiplicity_series_terms(table, "v")
        terms = _specialize(terms, n - 1, 1)
        for index in reversed(range(n - 1)):
            terms = _average_signs(terms, index)
    logger.debug(f"Substitution for {group} left {len(terms)} terms")
    return _collect(terms, maxdeg)


def hilbert_series_via_substitution(spec: ModuleSpec, group: GroupId, maxdeg: int,
                                    workers: int = 1) -> TruncatedSeries:
    """Hilbert series of C[W]^G through M / M' substitution"""
    return HilbertEngine(spec, maxdeg, workers).series_via_substitution(group)
