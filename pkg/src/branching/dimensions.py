#!/usr/bin/env python3
"""
Weyl Dimension Formulas

Dimensions of irreducible modules of Sp(2k) (type C), SO(2k+1) (type B),
SO(2k) (type D) and O(n), all computed exactly with Fractions.
"""

from fractions import Fraction
from typing import Iterable, List

from hilbert_errors import InvalidInputError
from partition_core import Partition
from .groups import GroupId, GroupKind


def _check_rank(mu: Partition, k: int):
    if mu.length() > k:
        raise InvalidInputError(f"Label {mu} has more than {k} parts")


def _classical_product(shifted: List[Fraction], rho: List[Fraction], with_linear: bool) -> int:
    dim = Fraction(1)
    k = len(shifted)
    for i in range(k):
        for j in range(i + 1, k):
            dim *= (shifted[i] ** 2 - shifted[j] ** 2) / (rho[i] ** 2 - rho[j] ** 2)
        if with_linear:
            dim *= shifted[i] / rho[i]
    if dim.denominator != 1:
        raise InvalidInputError(f"Non-integer dimension {dim}")
    return int(dim)


def sp_dimension(mu: Partition, k: int) -> int:
    """Dimension of the Sp(2k)-module with highest weight mu"""
    _check_rank(mu, k)
    padded = mu.padded(k)
    rho = [Fraction(k - i) for i in range(k)]
    shifted = [padded[i] + rho[i] for i in range(k)]
    return _classical_product(shifted, rho, with_linear=True)


def so_dimension(mu: Partition, n: int) -> int:
    """
    Dimension of the SO(n)-module with highest weight mu.

    For n = 2k and mu_k != 0 this is one of the two modules with highest
    weights (mu_1, ..., +-mu_k).
    """
    k = n // 2
    _check_rank(mu, k)
    padded = mu.padded(k)
    if n % 2 == 1:
        rho = [Fraction(2 * (k - i) - 1, 2) for i in range(k)]
        shifted = [padded[i] + rho[i] for i in range(k)]
        return _classical_product(shifted, rho, with_linear=True)
    rho = [Fraction(k - i - 1) for i in range(k)]
    shifted = [padded[i] + rho[i] for i in range(k)]
    return _classical_product(shifted, rho, with_linear=False)


def o_dimension(mu: Partition, n: int) -> int:
    """Dimension of the O(n)-module [mu] (the same for its determinant twist)"""
    k = n // 2
    dim = so_dimension(mu, n)
    if n % 2 == 0 and k > 0 and mu.part(k - 1) != 0:
        dim *= 2
    return dim


def label_dimension(mu: Partition, group: GroupId) -> int:
    if group.kind == GroupKind.SP:
        return sp_dimension(mu, group.rank)
    return o_dimension(mu, group.n)


def branching_dimension(terms: Iterable, group: GroupId) -> int:
    """Sum of multiplicity times label dimension over BranchTerms"""
    return sum(term.multiplicity * label_dimension(term.mu, group) for term in terms)
