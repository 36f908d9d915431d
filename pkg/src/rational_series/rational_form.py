#!/usr/bin/env python3
"""
Rational Forms

Closed-form Hilbert series N(t) / prod (1 - t^d)^e and their exact expansion
into truncated power series.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from hilbert_errors import InvalidInputError
from hilbert_engine import TruncatedSeries


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    result = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                result[i + j] += x * y
    return result


@dataclass(frozen=True)
class RationalForm:
    """numerator(t) / prod over (d, e) of (1 - t^d)^e"""
    numerator: Tuple[int, ...]
    denominator_factors: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        numerator = tuple(int(c) for c in self.numerator)
        if not numerator:
            raise InvalidInputError("Numerator must have at least one coefficient")
        factors = tuple((int(d), int(e)) for d, e in self.denominator_factors)
        for d, e in factors:
            if d < 1 or e < 1:
                raise InvalidInputError(f"Denominator factor (1-t^{d})^{e} needs positive d and e")
        object.__setattr__(self, 'numerator', numerator)
        object.__setattr__(self, 'denominator_factors', factors)

    @classmethod
    def from_factors(cls, numerator_factors: Iterable[Sequence[int]],
                     denominator_factors: Iterable[Sequence[int]]) -> 'RationalForm':
        """Multiply out a numerator given as a product of polynomials"""
        numerator = [1]
        for factor in numerator_factors:
            numerator = _poly_mul(numerator, list(factor))
        return cls(tuple(numerator), tuple(tuple(f) for f in denominator_factors))

    def __str__(self) -> str:
        terms = [f"{c}t^{i}" if i else str(c) for i, c in enumerate(self.numerator) if c]
        denominator = "".join(f"(1-t^{d})" + (f"^{e}" if e > 1 else "") for d, e in self.denominator_factors)
        return f"({' + '.join(terms) or '0'}) / ({denominator or '1'})"


def expand_rational(form: RationalForm, maxdeg: int) -> TruncatedSeries:
    """
    Expand a rational form to degree maxdeg.

    Args:
        form: Numerator and (1 - t^d)^e factors
        maxdeg: Truncation degree

    Returns:
        TruncatedSeries with exact integer coefficients
    """
    series = TruncatedSeries(form.numerator[:maxdeg + 1], maxdeg)
    for degree, exponent in form.denominator_factors:
        series = series.divide_one_minus_power(degree, exponent)
    return series
