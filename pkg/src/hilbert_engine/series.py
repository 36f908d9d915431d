#!/usr/bin/env python3
"""
Truncated Series

Univariate power series in t with exact integer coefficients up to a fixed
degree, stored in numpy object arrays so entries stay arbitrary precision.
"""

from typing import Iterable, List, Sequence

import numpy as np

from hilbert_errors import InvalidInputError


class TruncatedSeries:
    """Coefficients of t^0 .. t^maxdeg"""

    __slots__ = ('coeffs', 'maxdeg')

    def __init__(self, coeffs: Iterable[int], maxdeg: int = None):
        values = [int(c) for c in coeffs]
        if maxdeg is None:
            maxdeg = len(values) - 1
        if maxdeg < 0:
            raise InvalidInputError(f"Degree bound must be nonnegative, got {maxdeg}")
        values = (values + [0] * (maxdeg + 1))[:maxdeg + 1]
        self.coeffs = np.array(values, dtype=object)
        self.maxdeg = maxdeg

    @classmethod
    def zeros(cls, maxdeg: int) -> 'TruncatedSeries':
        return cls([], maxdeg)

    @classmethod
    def one(cls, maxdeg: int) -> 'TruncatedSeries':
        return cls([1], maxdeg)

    @classmethod
    def _from_array(cls, array: np.ndarray, maxdeg: int) -> 'TruncatedSeries':
        series = cls.__new__(cls)
        series.coeffs = array
        series.maxdeg = maxdeg
        return series

    def __getitem__(self, degree: int) -> int:
        return int(self.coeffs[degree]) if 0 <= degree <= self.maxdeg else 0

    def __len__(self) -> int:
        return self.maxdeg + 1

    def to_list(self) -> List[int]:
        return [int(c) for c in self.coeffs]

    def __eq__(self, other) -> bool:
        if isinstance(other, (list, tuple)):
            return self.to_list() == [int(c) for c in other]
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.maxdeg == other.maxdeg and self.to_list() == other.to_list()

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.to_list()})"

    def truncate(self, maxdeg: int) -> 'TruncatedSeries':
        return TruncatedSeries(self.to_list()[:maxdeg + 1], maxdeg)

    def agrees_with(self, other: 'TruncatedSeries') -> bool:
        """Equality up to the smaller of the two degree bounds"""
        bound = min(self.maxdeg, other.maxdeg)
        return self.to_list()[:bound + 1] == other.to_list()[:bound + 1]

    def first_difference(self, other: 'TruncatedSeries'):
        """Lowest degree where the series differ (within the common bound), or None"""
        bound = min(self.maxdeg, other.maxdeg)
        for degree in range(bound + 1):
            if self[degree] != other[degree]:
                return degree
        return None

    def __add__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        bound = min(self.maxdeg, other.maxdeg)
        return TruncatedSeries._from_array(self.coeffs[:bound + 1] + other.coeffs[:bound + 1], bound)

    def __sub__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        bound = min(self.maxdeg, other.maxdeg)
        return TruncatedSeries._from_array(self.coeffs[:bound + 1] - other.coeffs[:bound + 1], bound)

    def __mul__(self, other) -> 'TruncatedSeries':
        if isinstance(other, int):
            return TruncatedSeries._from_array(self.coeffs * other, self.maxdeg)
        bound = min(self.maxdeg, other.maxdeg)
        result = np.zeros(bound + 1, dtype=object)
        for degree in range(bound + 1):
            coeff = self.coeffs[degree]
            if coeff:
                result[degree:] += coeff * other.coeffs[:bound + 1 - degree]
        return TruncatedSeries._from_array(result, bound)

    def multiply_polynomial(self, poly: Sequence[int]) -> 'TruncatedSeries':
        """Multiply by a polynomial in t given by its coefficient list"""
        return self * TruncatedSeries(poly, self.maxdeg)

    def divide_one_minus_power(self, degree: int, exponent: int = 1) -> 'TruncatedSeries':
        """Multiply by (1 - t^degree)^(-exponent)"""
        if degree < 1:
            raise InvalidInputError(f"Denominator factor needs a positive degree, got {degree}")
        result = self.coeffs.copy()
        for _ in range(exponent):
            for residue in range(min(degree, self.maxdeg + 1)):
                result[residue::degree] = np.cumsum(result[residue::degree])
        return TruncatedSeries._from_array(result, self.maxdeg)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def dominated_by(self, other: 'TruncatedSeries') -> bool:
        """Coefficientwise <= up to the common bound"""
        bound = min(self.maxdeg, other.maxdeg)
        return all(self[d] <= other[d] for d in range(bound + 1))
