#!/usr/bin/env python3
"""
Exterior Algebra Decomposition

GL(n)-decomposition of the exterior algebras of S^2 V and of Lambda^2 V. Both
are multiplicity free, with labels read off strict partitions alpha in
Frobenius notation:

  SYM2: (alpha_1 + 1, ..., alpha_p + 1 | alpha_1, ..., alpha_p), degree |alpha| + p
  ALT2: (alpha_1 - 1, ..., alpha_p - 1 | alpha_1, ..., alpha_p), alpha_p > 0, degree |alpha|

with alpha_1 <= n - 1. The invariant Hilbert polynomial counts the labels that
carry a G-invariant.
"""

import logging
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Tuple

from hilbert_errors import InvalidInputError
from partition_core import (
    Partition, FrobeniusCoords, frobenius_to_partition, enumerate_strict_partitions
)
from symfunc import gl_dimension
from branching import GroupId, trivial_multiplicity
from .hilbert_polynomial import HilbertPolynomial

logger = logging.getLogger(__name__)


class ExteriorKind(Enum):
    """Which exterior algebra: Lambda(S^2 V) or Lambda(Lambda^2 V)"""
    SYM2 = "sym2"
    ALT2 = "alt2"

    def generator_dimension(self, n: int) -> int:
        """dim S^2 V or dim Lambda^2 V"""
        return n * (n + 1) // 2 if self == ExteriorKind.SYM2 else n * (n - 1) // 2

    def degree_bound(self, n: int) -> int:
        return self.generator_dimension(n)


@lru_cache(maxsize=None)
def _labels_by_degree(kind: ExteriorKind, n: int) -> Dict[int, Tuple[Partition, ...]]:
    by_degree: Dict[int, List[Partition]] = {}
    positive = kind == ExteriorKind.ALT2
    for p in range(n + 1):
        for alpha in enumerate_strict_partitions(n - 1, p, positive=positive):
            if kind == ExteriorKind.SYM2:
                arms = tuple(a + 1 for a in alpha)
                degree = sum(alpha) + p
            else:
                arms = tuple(a - 1 for a in alpha)
                degree = sum(alpha)
            label = frobenius_to_partition(FrobeniusCoords(arms, alpha))
            by_degree.setdefault(degree, []).append(label)
    return {degree: tuple(sorted(labels, key=Partition.sort_key))
            for degree, labels in by_degree.items()}


def exterior_decomposition(kind: ExteriorKind, n: int, degree: int) -> List[Partition]:
    """
    Highest weights of the irreducible summands of the degree-th exterior power.

    Args:
        kind: SYM2 or ALT2
        n: Dimension of V
        degree: Exterior degree i, 0 <= i <= dim of the generating space

    Returns:
        Labels lambda with |lambda| = 2i, each listed once
    """
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    bound = kind.degree_bound(n)
    if degree < 0 or degree > bound:
        raise InvalidInputError(f"Exterior degree {degree} outside 0..{bound} for {kind.value}, n={n}")
    return list(_labels_by_degree(kind, n).get(degree, ()))


def exterior_invariant_poly(kind: ExteriorKind, group: GroupId) -> HilbertPolynomial:
    """
    Hilbert polynomial of the G-invariants by filtering the decomposition.

    Args:
        kind: SYM2 or ALT2
        group: Sp(n), O(n) or SO(n)

    Returns:
        HilbertPolynomial whose t^i coefficient counts labels of degree i that
        contain a G-invariant
    """
    terms: Dict[int, int] = {}
    for degree, labels in _labels_by_degree(kind, group.n).items():
        count = sum(trivial_multiplicity(label, group) for label in labels)
        if count:
            terms[degree] = count
    poly = HilbertPolynomial.from_terms(terms)
    logger.debug(f"Filtered {kind.value} invariants for {group}: {poly}")
    return poly


def exterior_total_dimension(kind: ExteriorKind, n: int) -> int:
    """Sum of dim V_lambda over all summands; equals 2^(dim of the generating space)"""
    return sum(gl_dimension(label, n)
               for labels in _labels_by_degree(kind, n).values()
               for label in labels)
