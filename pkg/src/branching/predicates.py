#!/usr/bin/env python3
"""
Trivial Multiplicity Predicates

Closed criteria for when an irreducible polynomial GL(n)-module contains the
trivial module of Sp(2k), O(n) or SO(n), and then exactly once.
"""

from partition_core import Partition, has_even_columns, is_even_partition, is_odd_partition
from .groups import GroupId, GroupKind


def trivial_multiplicity(partition: Partition, group: GroupId) -> int:
    """
    Dimension (0 or 1) of the G-fixed subspace of V_lambda.

    Args:
        partition: Highest weight with at most n parts
        group: Sp(n), O(n) or SO(n)

    Returns:
        1 for Sp when lambda has even columns, for O when lambda is even, and
        for SO when lambda is even or odd at length n; otherwise 0
    """
    partition.padded(group.n)
    if group.kind == GroupKind.SP:
        return int(has_even_columns(partition, group.n))
    if group.kind == GroupKind.O:
        return int(is_even_partition(partition))
    # an even and an odd partition never coincide, so the indicators just add
    return int(is_even_partition(partition)) + int(is_odd_partition(partition, group.n))
