#!/usr/bin/env python3
"""
Partition Enumeration

Listings of partitions and strict tuples in a fixed order so that golden
output and test corpora are stable.
"""

from functools import lru_cache
from itertools import combinations
from typing import Iterator, List, Tuple

from hilbert_errors import InvalidInputError
from .partition import Partition


def _descending(remaining: int, max_part: int, slots: int) -> Iterator[Tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    if slots == 0:
        return
    for first in range(min(remaining, max_part), 0, -1):
        for rest in _descending(remaining - first, first, slots - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions(size: int, max_length: int) -> Tuple[Partition, ...]:
    return tuple(Partition(parts) for parts in _descending(size, size, max_length))


def enumerate_partitions(size: int, max_length: int) -> List[Partition]:
    """
    All partitions of size with at most max_length parts.

    Args:
        size: Total number of boxes
        max_length: Maximal number of nonzero parts

    Returns:
        Partitions in decreasing lexicographic order, each exactly once
    """
    if size < 0:
        raise InvalidInputError(f"Partition size must be nonnegative, got {size}")
    if max_length < 0:
        raise InvalidInputError(f"Maximal length must be nonnegative, got {max_length}")
    return list(_partitions(size, max_length))


def enumerate_partitions_up_to(max_size: int, max_length: int) -> List[Partition]:
    """All partitions of size 0..max_size, grouped by size"""
    result = []
    for size in range(max_size + 1):
        result.extend(enumerate_partitions(size, max_length))
    return result


def enumerate_strict_partitions(max_part: int, num_parts: int,
                                positive: bool = False) -> List[Tuple[int, ...]]:
    """
    Strictly decreasing tuples a_1 > ... > a_p >= 0 with a_1 <= max_part.

    Tuples are returned as-is rather than as Partition values because a
    trailing zero entry is significant here.

    Args:
        max_part: Upper bound on the largest entry
        num_parts: Exact number of entries p
        positive: Require a_p > 0

    Returns:
        List of tuples ordered by the underlying ascending combinations
    """
    if max_part < 0 or num_parts < 0:
        raise InvalidInputError(f"Bounds must be nonnegative: max_part={max_part}, num_parts={num_parts}")
    low = 1 if positive else 0
    return [tuple(reversed(combo)) for combo in combinations(range(low, max_part + 1), num_parts)]
