#!/usr/bin/env python3
"""
Schur Functions

Schur polynomials by horizontal-strip branching, Kostka numbers, extraction of
Schur-basis coefficients from a symmetric polynomial, and the GL(n) dimension
formula.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any, Dict, Iterator, List, Sequence, Tuple

from hilbert_errors import InvalidInputError, NotSymmetricError
from partition_core import Partition
from .sympoly import SymPoly, Exponent

logger = logging.getLogger(__name__)


def _strip_predecessors(padded: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """
    Partitions nu with len(padded) - 1 parts such that padded/nu is a
    horizontal strip, i.e. padded[i+1] <= nu[i] <= padded[i].
    """
    n = len(padded)
    ranges = [range(padded[i + 1], padded[i] + 1) for i in range(n - 1)]
    return product(*ranges)


@lru_cache(maxsize=None)
def _schur_terms(padded: Tuple[int, ...]) -> Tuple[Tuple[Exponent, int], ...]:
    n = len(padded)
    if n == 0:
        return (((), 1),)
    total = sum(padded)
    terms: Dict[Exponent, int] = {}
    for nu in _strip_predecessors(padded):
        last = total - sum(nu)
        for exponent, coeff in _schur_terms(tuple(nu)):
            key = exponent + (last,)
            terms[key] = terms.get(key, 0) + coeff
    return tuple(terms.items())


def schur_polynomial(partition: Partition, n: int) -> SymPoly:
    """
    Monomial expansion of s_lambda(x_1, ..., x_n).

    Args:
        partition: Highest weight with at most n parts
        n: Number of variables

    Returns:
        SymPoly, homogeneous of degree |lambda|
    """
    if partition.length() > n:
        raise InvalidInputError(f"Schur polynomial s_{partition} needs at least {partition.length()} variables, got {n}")
    return SymPoly(n, dict(_schur_terms(partition.padded(n))))


@lru_cache(maxsize=None)
def _kostka(padded: Tuple[int, ...], content: Tuple[int, ...]) -> int:
    if not content:
        return 1 if sum(padded) == 0 else 0
    if len(padded) > len(content):
        # more rows than letters: the last row cannot be filled
        if padded[len(content)] > 0:
            return 0
        padded = padded[:len(content)]
    if len(padded) < len(content):
        padded = padded + (0,) * (len(content) - len(padded))
    last = content[-1]
    total = 0
    for nu in _strip_predecessors(padded):
        if sum(padded) - sum(nu) == last:
            total += _kostka(tuple(nu), content[:-1])
    return total


def kostka_number(partition: Partition, content: Sequence[int]) -> int:
    """
    Number of semistandard tableaux of the given shape and content.

    Args:
        partition: Shape lambda
        content: Composition mu with |mu| = |lambda|

    Returns:
        Nonnegative integer K_{lambda, mu}
    """
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise InvalidInputError(f"Content must be nonnegative: {content}")
    if sum(content) != partition.size():
        raise InvalidInputError(f"Size mismatch: |{partition}| = {partition.size()} but content sums to {sum(content)}")
    return _kostka(partition.parts, content)


@dataclass(frozen=True)
class SchurExpansion:
    """Coefficients c_lambda of a polynomial in the Schur basis"""
    n: int
    coeffs: Dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for partition, coeff in self.coeffs.items():
            if partition.length() > self.n:
                raise InvalidInputError(f"Label {partition} has more than {self.n} parts")
            if coeff:
                cleaned[partition] = int(coeff)
        object.__setattr__(self, 'coeffs', cleaned)

    def get(self, partition: Partition) -> int:
        return self.coeffs.get(partition, 0)

    def sorted_items(self) -> List[Tuple[Partition, int]]:
        return sorted(self.coeffs.items(), key=lambda item: item[0].sort_key())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.coeffs.values())

    def to_polynomial(self) -> SymPoly:
        result = SymPoly.zero(self.n)
        for partition, coeff in self.coeffs.items():
            result = result + schur_polynomial(partition, self.n) * coeff
        return result

    def to_json(self) -> List[Dict[str, Any]]:
        return [{"lambda": p.to_list(), "coeff": c} for p, c in self.sorted_items()]

    def __len__(self) -> int:
        return len(self.coeffs)


def schur_expand(poly: SymPoly) -> SchurExpansion:
    """
    Decompose a symmetric polynomial into Schur polynomials.

    Repeatedly takes the lexicographically greatest exponent, which is a
    partition for symmetric input, and subtracts that multiple of s_lambda.

    Args:
        poly: Symmetric polynomial (mixed degrees allowed)

    Returns:
        SchurExpansion with exact integer coefficients

    Raises:
        NotSymmetricError: the leading exponent is not a partition
    """
    n = poly.n
    remaining = poly.as_dict()
    coeffs: Dict[Partition, int] = {}
    while remaining:
        leading = max(remaining)
        if any(e < 0 for e in leading) or any(leading[i] < leading[i + 1] for i in range(n - 1)):
            raise NotSymmetricError(leading)
        coeff = remaining[leading]
        partition = Partition(leading)
        coeffs[partition] = coeff
        for exponent, c in _schur_terms(leading):
            total = remaining.get(exponent, 0) - coeff * c
            if total:
                remaining[exponent] = total
            else:
                remaining.pop(exponent, None)
    return SchurExpansion(n, coeffs)


def gl_dimension(partition: Partition, n: int) -> int:
    """Weyl dimension of the GL(n)-module with highest weight lambda"""
    padded = partition.padded(n)
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(padded[i] - padded[j] + j - i, j - i)
    if dim.denominator != 1:
        raise InvalidInputError(f"Non-integer GL dimension for {partition}")
    return int(dim)
