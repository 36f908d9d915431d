#!/usr/bin/env python3
"""
Littlewood-Richardson Coefficients

Counts LR skew tableaux of shape lambda/nu and content mu by backtracking over
the reverse reading word.
"""

from functools import lru_cache
from typing import List, Tuple

from partition_core import Partition


def _contains(outer: Tuple[int, ...], inner: Tuple[int, ...]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(outer[i] >= inner[i] for i in range(len(inner)))


@lru_cache(maxsize=None)
def _lr_count(outer: Tuple[int, ...], inner: Tuple[int, ...], content: Tuple[int, ...]) -> int:
    # cells of outer/inner in reading order: rows top to bottom, each row right to left
    cells: List[Tuple[int, int]] = []
    for row, length in enumerate(outer):
        start = inner[row] if row < len(inner) else 0
        for col in range(length - 1, start - 1, -1):
            cells.append((row, col))

    if not cells:
        return 1
    letters = len(content)
    filling = {}
    counts = [0] * (letters + 1)

    def in_skew(row: int, col: int) -> bool:
        if row < 0 or row >= len(outer) or col >= outer[row]:
            return False
        return col >= (inner[row] if row < len(inner) else 0)

    def place(index: int) -> int:
        if index == len(cells):
            return 1
        row, col = cells[index]
        # weakly increasing rows: bounded by the right neighbour
        upper = filling[(row, col + 1)] if in_skew(row, col + 1) else letters
        # strictly increasing columns: bounded below by the box above
        lower = filling[(row - 1, col)] + 1 if in_skew(row - 1, col) else 1
        upper = min(upper, row + 1)
        total = 0
        for value in range(lower, upper + 1):
            if counts[value] >= content[value - 1]:
                continue
            if value > 1 and counts[value] + 1 > counts[value - 1]:
                continue
            counts[value] += 1
            filling[(row, col)] = value
            total += place(index + 1)
            counts[value] -= 1
            del filling[(row, col)]
        return total

    return place(0)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """
    Littlewood-Richardson coefficient c^lambda_{mu nu}.

    Args:
        lam: Outer shape lambda
        mu: Content of the filling
        nu: Inner shape removed from lambda

    Returns:
        Multiplicity of s_lambda in s_mu * s_nu (0 unless sizes add up and
        both mu and nu fit inside lambda)
    """
    if lam.size() != mu.size() + nu.size():
        return 0
    if not _contains(lam.parts, mu.parts) or not _contains(lam.parts, nu.parts):
        return 0
    return _lr_count(lam.parts, nu.parts, mu.parts)
