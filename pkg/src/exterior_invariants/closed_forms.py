#!/usr/bin/env python3
"""
Closed Forms For Exterior Invariants

Explicit finite summation formulas for the Hilbert polynomials of
Lambda(S^2 V)^G and Lambda(Lambda^2 V)^G. Every formula has the shape

  base + sum over blocks of sum_p t^(p(p+1)/2) * sum_{a} t^(w_1 a_1 + ... + w_m a_m)

where a block fixes the parity and range of p, the number m of summation
variables, the weights w_j, whether a_1 + ... + a_m is bounded (<=) or pinned
(=) to n - p - offset, and the parity pattern of the a_j. The tables below
list the blocks per (kind, group).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Tuple

from branching import GroupId, GroupKind
from .decomposition import ExteriorKind
from .hilbert_polynomial import HilbertPolynomial, exterior_generator_product


class VariableCount(Enum):
    HALF = "p/2"
    HALF_DOWN = "(p-1)/2"
    HALF_UP = "(p+1)/2"

    def count(self, p: int) -> int:
        if self == VariableCount.HALF:
            return p // 2
        if self == VariableCount.HALF_DOWN:
            return (p - 1) // 2
        return (p + 1) // 2


class WeightPattern(Enum):
    EVEN = "2,4,6,..."
    ODD = "1,3,5,..."

    def weights(self, m: int) -> List[int]:
        if self == WeightPattern.EVEN:
            return [2 * j for j in range(1, m + 1)]
        return [2 * j - 1 for j in range(1, m + 1)]


class Constraint(Enum):
    AT_MOST = "<="
    EQUAL = "="


class ParityRule(Enum):
    ALL_EVEN = "all even"
    LAST_ODD = "all even but the last, which is odd"

    def accepts(self, values: Tuple[int, ...]) -> bool:
        if self == ParityRule.ALL_EVEN:
            return all(a % 2 == 0 for a in values)
        if not values:
            return False
        return all(a % 2 == 0 for a in values[:-1]) and values[-1] % 2 == 1


@dataclass(frozen=True)
class SummationBlock:
    """One sum over p of t^(p(p+1)/2) times an inner sum over a_1, ..., a_m"""
    first_p: int
    top_offset: int
    variables: VariableCount
    weights: WeightPattern
    constraint: Constraint
    bound_offset: int
    parity: ParityRule

    def p_values(self, n: int) -> range:
        return range(self.first_p, n - self.top_offset + 1, 2)

    def evaluate(self, n: int) -> Dict[int, int]:
        terms: Dict[int, int] = {}
        for p in self.p_values(n):
            m = self.variables.count(p)
            bound = n - p - self.bound_offset
            if bound < 0:
                continue
            weights = self.weights.weights(m)
            shift = p * (p + 1) // 2
            for values in _tuples(m, bound, self.constraint):
                if self.parity.accepts(values):
                    degree = shift + sum(w * a for w, a in zip(weights, values))
                    terms[degree] = terms.get(degree, 0) + 1
        return terms


def _tuples(m: int, bound: int, constraint: Constraint) -> Iterator[Tuple[int, ...]]:
    """Nonnegative m-tuples with sum <= bound, or == bound"""
    if m == 0:
        if constraint == Constraint.AT_MOST or bound == 0:
            yield ()
        return
    if m == 1:
        if constraint == Constraint.EQUAL:
            yield (bound,)
        else:
            for value in range(bound + 1):
                yield (value,)
        return
    for first in range(bound + 1):
        for rest in _tuples(m - 1, bound - first, constraint):
            yield (first,) + rest


@dataclass(frozen=True)
class ClosedForm:
    base: Tuple[int, ...]
    blocks: Tuple[SummationBlock, ...]


_E, _L = ParityRule.ALL_EVEN, ParityRule.LAST_ODD

# Lambda(S^2 V)
_SYM2_O = ClosedForm((1, 1), (
    SummationBlock(2, 0, VariableCount.HALF, WeightPattern.EVEN, Constraint.AT_MOST, 0, _L),
    SummationBlock(3, 0, VariableCount.HALF_DOWN, WeightPattern.EVEN, Constraint.AT_MOST, 0, _E),
))
_SYM2_SP = ClosedForm((1,), (
    SummationBlock(2, 0, VariableCount.HALF, WeightPattern.EVEN, Constraint.AT_MOST, 0, _E),
))
_SYM2_SO_EVEN = ClosedForm((1, 1), _SYM2_O.blocks + (
    SummationBlock(1, 0, VariableCount.HALF_UP, WeightPattern.ODD, Constraint.EQUAL, 0, _L),
    SummationBlock(2, 0, VariableCount.HALF, WeightPattern.ODD, Constraint.EQUAL, 0, _E),
))

# Lambda(Lambda^2 V)
_ALT2_O = ClosedForm((1,), (
    SummationBlock(2, 1, VariableCount.HALF, WeightPattern.EVEN, Constraint.AT_MOST, 1, _E),
))
_ALT2_SP = ClosedForm((1, 1), (
    SummationBlock(2, 1, VariableCount.HALF, WeightPattern.EVEN, Constraint.AT_MOST, 1, _L),
    SummationBlock(3, 1, VariableCount.HALF_DOWN, WeightPattern.EVEN, Constraint.AT_MOST, 1, _E),
))
_ALT2_SO_EVEN = ClosedForm((1,), _ALT2_O.blocks + (
    SummationBlock(1, 1, VariableCount.HALF_UP, WeightPattern.ODD, Constraint.EQUAL, 1, _E),
))


def closed_form_for(kind: ExteriorKind, group: GroupId) -> ClosedForm:
    """Select the summation table; SO(2k+1) shares the O(2k+1) formula"""
    odd_orthogonal = group.kind == GroupKind.SO and group.n % 2 == 1
    if kind == ExteriorKind.SYM2:
        if group.kind == GroupKind.SP:
            return _SYM2_SP
        if group.kind == GroupKind.O or odd_orthogonal:
            return _SYM2_O
        return _SYM2_SO_EVEN
    if group.kind == GroupKind.SP:
        return _ALT2_SP
    if group.kind == GroupKind.O or odd_orthogonal:
        return _ALT2_O
    return _ALT2_SO_EVEN


def closed_form_exterior(kind: ExteriorKind, group: GroupId) -> HilbertPolynomial:
    """
    Evaluate the closed summation formula for the invariant Hilbert polynomial.

    Args:
        kind: SYM2 or ALT2
        group: Sp(n), O(n) or SO(n)

    Returns:
        HilbertPolynomial
    """
    form = closed_form_for(kind, group)
    terms: Dict[int, int] = {degree: coeff for degree, coeff in enumerate(form.base) if coeff}
    for block in form.blocks:
        for degree, coeff in block.evaluate(group.n).items():
            terms[degree] = terms.get(degree, 0) + coeff
    return HilbertPolynomial.from_terms(terms)


def known_generator_degrees(kind: ExteriorKind, group: GroupId) -> Optional[List[int]]:
    """
    Degrees of exterior generators when the invariant algebra is known to be a
    free exterior algebra, else None.
    """
    n = group.n
    k = n // 2
    if kind == ExteriorKind.SYM2:
        if group.kind == GroupKind.SP:
            return [4 * j - 1 for j in range(1, k + 1)]
        return None
    if group.kind == GroupKind.SP:
        return None
    if n % 2 == 1:
        return [4 * j - 1 for j in range(1, k + 1)]
    degrees = [4 * j - 1 for j in range(1, k)]
    if group.kind == GroupKind.SO:
        degrees.append(2 * k - 1)
    return degrees


def generator_product_for(kind: ExteriorKind, group: GroupId) -> Optional[HilbertPolynomial]:
    degrees = known_generator_degrees(kind, group)
    return exterior_generator_product(degrees) if degrees is not None else None
