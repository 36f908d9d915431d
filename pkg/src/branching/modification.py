#!/usr/bin/env python3
"""
Branching With Modification Rules

Restriction of irreducible GL(n)-modules to Sp(2k), O(n) and SO(n) through
Littlewood-Richardson sums over even partitions, followed by modification of
inadmissible labels via boundary-hook removal.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from hilbert_errors import InvalidInputError, UnsupportedGroupError
from partition_core import (
    Partition, EMPTY_PARTITION, HookRemoval, conjugate, double,
    enumerate_partitions, remove_boundary_hook
)
from symfunc import lr_coefficient
from .groups import GroupId, GroupKind

logger = logging.getLogger(__name__)


class DepthConvention(Enum):
    """
    Which count of a removed hook feeds the modification sign.

    COLUMNS and ROWS use the number of columns or rows the hook meets; ARM uses
    one less than the number of columns.
    """
    COLUMNS = "columns"
    ROWS = "rows"
    ARM = "arm"

    def depth(self, removal: HookRemoval) -> int:
        if self == DepthConvention.COLUMNS:
            return removal.columns_spanned
        if self == DepthConvention.ROWS:
            return removal.rows_spanned
        return removal.columns_spanned - 1


DEFAULT_DEPTH_CONVENTION = DepthConvention.ARM


@dataclass(frozen=True)
class BranchTerm:
    """A signed multiple of V<mu> (Sp) or of eps^e [mu] (O, SO)"""
    mu: Partition
    multiplicity: int
    epsilon_power: int = 0

    def __str__(self) -> str:
        eps = "eps*" if self.epsilon_power else ""
        return f"{self.multiplicity} x {eps}{self.mu}"


def _even_partition_pairs(partition: Partition, column_form: bool):
    """
    Yield (nu, mu, c) with c = c^lambda_{mu nu} > 0, nu = (2 delta)' for Sp or
    nu = 2 delta for O.
    """
    size = partition.size()
    bound = max(partition.part(0), partition.length())
    for delta_size in range(size // 2 + 1):
        for delta in enumerate_partitions(delta_size, bound):
            nu = double(delta)
            if column_form:
                nu = conjugate(nu)
            if nu.length() > partition.length() or nu.part(0) > partition.part(0):
                continue
            for mu in enumerate_partitions(size - nu.size(), partition.length()):
                c = lr_coefficient(partition, mu, nu)
                if c:
                    yield nu, mu, c


def modify_sp_label(mu: Partition, k: int,
                    depth: DepthConvention = DEFAULT_DEPTH_CONVENTION) -> Optional[Tuple[Partition, int]]:
    """
    Rewrite <mu> with more than k parts as +-<sigma>, or None when it vanishes.

    Args:
        mu: Label, possibly inadmissible
        k: Rank of Sp(2k)
        depth: Hook depth convention for the sign

    Returns:
        (sigma, sign) or None
    """
    n = 2 * k
    sign = 1
    while mu.length() > k:
        p = mu.length()
        hook_length = 2 * p - n - 2
        if hook_length <= 0:
            return None
        removal = remove_boundary_hook(mu, hook_length)
        if removal is None:
            return None
        sign *= (-1) ** (depth.depth(removal) + 1)
        logger.debug(f"Sp({n}) modification {mu} -> {removal.result} (hook {hook_length}, sign {sign})")
        mu = removal.result
    return mu, sign


def modify_o_label(mu: Partition, n: int,
                   depth: DepthConvention = DEFAULT_DEPTH_CONVENTION) -> Optional[Tuple[Partition, int, int]]:
    """
    Rewrite [mu] with more than n // 2 parts as +-eps^e [sigma], or None.

    Returns:
        (sigma, sign, epsilon_power) or None
    """
    k = n // 2
    sign = 1
    epsilon_power = 0
    while mu.length() > k:
        p = mu.length()
        hook_length = 2 * p - n
        if hook_length <= 0:
            return None
        removal = remove_boundary_hook(mu, hook_length)
        if removal is None:
            return None
        sign *= (-1) ** depth.depth(removal)
        epsilon_power ^= 1
        logger.debug(f"O({n}) modification {mu} -> {removal.result} (hook {hook_length}, sign {sign})")
        mu = removal.result
    return mu, sign, epsilon_power


def _merged(raw: Dict[Tuple[Partition, int], int]) -> List[BranchTerm]:
    terms = [BranchTerm(mu, mult, eps) for (mu, eps), mult in raw.items() if mult]
    return sorted(terms, key=lambda t: (t.mu.sort_key(), t.epsilon_power))


def branch_to_sp(partition: Partition, k: int,
                 depth: DepthConvention = DEFAULT_DEPTH_CONVENTION) -> List[BranchTerm]:
    """
    Decompose V_lambda of GL(2k) restricted to Sp(2k).

    Args:
        partition: Highest weight with at most 2k parts
        k: Rank of the symplectic group
        depth: Hook depth convention for modification signs

    Returns:
        Merged BranchTerms over admissible labels (at most k parts)
    """
    if k < 1:
        raise InvalidInputError(f"Sp(2k) needs k >= 1, got {k}")
    partition.padded(2 * k)
    raw: Dict[Tuple[Partition, int], int] = defaultdict(int)
    for nu, mu, c in _even_partition_pairs(partition, column_form=True):
        modified = modify_sp_label(mu, k, depth)
        if modified is None:
            continue
        sigma, sign = modified
        raw[(sigma, 0)] += sign * c
    return _merged(raw)


def branch_to_o(partition: Partition, n: int, so_view: bool = False,
                depth: DepthConvention = DEFAULT_DEPTH_CONVENTION) -> List[BranchTerm]:
    """
    Decompose V_lambda of GL(n) restricted to O(n), or to SO(n) with so_view.

    In the O view each term keeps its determinant marker; for n = 2k a label
    with exactly k parts is its own associate, so the marker is dropped. The
    SO view sets eps = 1 everywhere before merging.

    Args:
        partition: Highest weight with at most n parts
        n: Dimension of the standard module
        so_view: Merge as SO(n)-labels
        depth: Hook depth convention for modification signs

    Returns:
        Merged BranchTerms
    """
    partition.padded(n)
    k = n // 2
    raw: Dict[Tuple[Partition, int], int] = defaultdict(int)
    for nu, mu, c in _even_partition_pairs(partition, column_form=False):
        modified = modify_o_label(mu, n, depth)
        if modified is None:
            continue
        sigma, sign, epsilon_power = modified
        if so_view or (n % 2 == 0 and k > 0 and sigma.length() == k):
            epsilon_power = 0
        raw[(sigma, epsilon_power)] += sign * c
    return _merged(raw)


def branch(partition: Partition, group: GroupId,
           depth: DepthConvention = DEFAULT_DEPTH_CONVENTION) -> List[BranchTerm]:
    """Dispatch to the Sp or O/SO branching for the given group"""
    if group.kind == GroupKind.SP:
        return branch_to_sp(partition, group.rank, depth)
    return branch_to_o(partition, group.n, so_view=(group.kind == GroupKind.SO), depth=depth)


def trivial_multiplicity_via_branching(partition: Partition, group: GroupId,
                                       depth: DepthConvention = DEFAULT_DEPTH_CONVENTION) -> int:
    """
    Multiplicity of the trivial label in the merged branching.

    Args:
        partition: Highest weight
        group: Sp(n) or SO(n)
        depth: Hook depth convention

    Returns:
        Nonnegative integer

    Raises:
        UnsupportedGroupError: for O(n), whose eps marker is not a scalar
    """
    if group.kind == GroupKind.O:
        raise UnsupportedGroupError("O(n) branching is diagnostic only; use predicate path")
    for term in branch(partition, group, depth):
        if term.mu == EMPTY_PARTITION and term.epsilon_power == 0:
            return term.multiplicity
    return 0
