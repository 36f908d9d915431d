#!/usr/bin/env python3
"""
Partition Core Module

Young-diagram combinatorics: partitions, Frobenius coordinates, conjugation,
parity predicates, boundary-hook removal and enumeration.
"""

from .partition import (
    Partition, FrobeniusCoords, HookRemoval, EMPTY_PARTITION,
    conjugate, frobenius_to_partition, partition_to_frobenius, rim_path,
    remove_boundary_hook, is_even_partition, is_odd_partition,
    has_even_columns, double
)
from .enumeration import (
    enumerate_partitions, enumerate_partitions_up_to, enumerate_strict_partitions
)

__version__ = '1.0.0'
__all__ = [
    'Partition',
    'FrobeniusCoords',
    'HookRemoval',
    'EMPTY_PARTITION',
    'conjugate',
    'frobenius_to_partition',
    'partition_to_frobenius',
    'rim_path',
    'remove_boundary_hook',
    'is_even_partition',
    'is_odd_partition',
    'has_even_columns',
    'double',
    'enumerate_partitions',
    'enumerate_partitions_up_to',
    'enumerate_strict_partitions'
]
