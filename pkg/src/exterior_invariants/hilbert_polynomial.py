#!/usr/bin/env python3
"""
Hilbert Polynomial

Finite Hilbert series of the invariants of a finite-dimensional graded algebra.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from hilbert_errors import InvalidInputError


@dataclass(frozen=True)
class HilbertPolynomial:
    """Integer coefficients of t^0, t^1, ... with trailing zeros trimmed"""
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, 'coeffs', coeffs)

    @classmethod
    def from_terms(cls, terms: Dict[int, int]) -> 'HilbertPolynomial':
        if not terms:
            return cls(())
        coeffs = [0] * (max(terms) + 1)
        for degree, coeff in terms.items():
            coeffs[degree] += coeff
        return cls(tuple(coeffs))

    @classmethod
    def from_list(cls, coeffs: Iterable[int]) -> 'HilbertPolynomial':
        return cls(tuple(coeffs))

    def __getitem__(self, degree: int) -> int:
        return self.coeffs[degree] if 0 <= degree < len(self.coeffs) else 0

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def to_list(self) -> List[int]:
        return list(self.coeffs)

    def total(self) -> int:
        """Value at t = 1, the dimension of the whole invariant algebra"""
        return sum(self.coeffs)

    def lowest_positive_degree(self) -> Optional[int]:
        for degree in range(1, len(self.coeffs)):
            if self.coeffs[degree]:
                return degree
        return None

    def __mul__(self, other: 'HilbertPolynomial') -> 'HilbertPolynomial':
        terms: Dict[int, int] = {}
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    terms[i + j] = terms.get(i + j, 0) + a * b
        return HilbertPolynomial.from_terms(terms)

    def __str__(self) -> str:
        pieces = []
        for degree, coeff in enumerate(self.coeffs):
            if not coeff:
                continue
            monomial = "1" if degree == 0 else "t" if degree == 1 else f"t^{degree}"
            if degree == 0:
                pieces.append(str(coeff))
            else:
                pieces.append(monomial if coeff == 1 else f"{coeff}*{monomial}")
        return " + ".join(pieces) if pieces else "0"


ONE = HilbertPolynomial((1,))


def exterior_generator_product(degrees: Iterable[int]) -> HilbertPolynomial:
    """prod_d (1 + t^d), the Hilbert series of a free exterior algebra"""
    result = ONE
    for degree in degrees:
        if degree < 1:
            raise InvalidInputError(f"Generator degrees must be positive, got {degree}")
        factor = [0] * (degree + 1)
        factor[0] += 1
        factor[degree] += 1
        result = result * HilbertPolynomial(tuple(factor))
    return result
