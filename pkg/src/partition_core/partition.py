#!/usr/bin/env python3
"""
Partition

Young-diagram primitives: the Partition value type, Frobenius coordinates,
conjugation, parity predicates and removal of boundary hooks along the rim.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from hilbert_errors import InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    """
    Weakly decreasing tuple of nonnegative integers, stored without trailing zeros.

    Group-dependent predicates take the padding length n explicitly and call
    padded(n); the stored form never depends on n.
    """
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for i, p in enumerate(parts):
            if p < 0:
                raise InvalidInputError(f"Negative part {p} in partition {parts}")
            if i > 0 and parts[i - 1] < p:
                raise InvalidInputError(f"Parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, 'parts', parts)

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """0-based part access with implicit zero padding"""
        return self.parts[i] if i < len(self.parts) else 0

    def padded(self, n: int) -> Tuple[int, ...]:
        if len(self.parts) > n:
            raise InvalidInputError(f"Partition {self} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    def is_empty(self) -> bool:
        return not self.parts

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Orders by size, then decreasing lexicographic within a size"""
        return (self.size(), tuple(-p for p in self.parts))

    def to_list(self) -> List[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __repr__(self) -> str:
        return f"Partition({self})"

    @classmethod
    def parse(cls, text: str) -> 'Partition':
        """
        Parse the bracketed form "[3,1]"; "[]" is the empty partition.

        Trailing zeros such as "[2,0]" are accepted and normalized away.
        """
        stripped = text.strip()
        if not (stripped.startswith('[') and stripped.endswith(']')):
            raise InvalidInputError(f"Partition must be bracketed, got {text!r}")
        body = stripped[1:-1].strip()
        if not body:
            return cls(())
        try:
            parts = tuple(int(piece) for piece in body.split(','))
        except ValueError:
            raise InvalidInputError(f"Partition parts must be integers: {text!r}")
        return cls(parts)

    @classmethod
    def of(cls, *parts: int) -> 'Partition':
        return cls(tuple(parts))


EMPTY_PARTITION = Partition(())


@dataclass(frozen=True)
class FrobeniusCoords:
    """Arm and leg lengths along the main diagonal"""
    arms: Tuple[int, ...]
    legs: Tuple[int, ...]

    def __post_init__(self):
        arms = tuple(int(a) for a in self.arms)
        legs = tuple(int(b) for b in self.legs)
        if len(arms) != len(legs):
            raise InvalidInputError(f"Arms {arms} and legs {legs} differ in length")
        for name, seq in (('arms', arms), ('legs', legs)):
            if any(x < 0 for x in seq):
                raise InvalidInputError(f"Frobenius {name} must be nonnegative: {seq}")
            if any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
                raise InvalidInputError(f"Frobenius {name} must be strictly decreasing: {seq}")
        object.__setattr__(self, 'arms', arms)
        object.__setattr__(self, 'legs', legs)

    @property
    def rank(self) -> int:
        return len(self.arms)


@dataclass(frozen=True)
class HookRemoval:
    """Outcome of stripping a boundary hook from a diagram"""
    result: Partition
    columns_spanned: int
    rows_spanned: int
    removed: Tuple[Tuple[int, int], ...] = field(default=(), compare=False)

    @property
    def length(self) -> int:
        return len(self.removed)


def conjugate(partition: Partition) -> Partition:
    """Transpose the diagram: column lengths become row lengths"""
    if partition.is_empty():
        return partition
    parts = partition.parts
    return Partition(tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1)))


def frobenius_to_partition(coords: FrobeniusCoords) -> Partition:
    """
    Build the diagram with the given arms and legs.

    Args:
        coords: Frobenius coordinates (validated on construction)

    Returns:
        Partition whose i-th diagonal box has coords.arms[i] boxes to its right
        and coords.legs[i] boxes below it
    """
    p = coords.rank
    if p == 0:
        return EMPTY_PARTITION

    column_lengths = [coords.legs[j] + j + 1 for j in range(p)]
    num_rows = column_lengths[0]
    rows = []
    for i in range(num_rows):
        if i < p:
            rows.append(coords.arms[i] + i + 1)
        else:
            rows.append(sum(1 for c in column_lengths if c > i))
    return Partition(tuple(rows))


def partition_to_frobenius(partition: Partition) -> FrobeniusCoords:
    """Read off Frobenius coordinates; the rank is the Durfee square size"""
    parts = partition.parts
    transposed = conjugate(partition).parts
    p = sum(1 for i, part in enumerate(parts) if part > i)
    arms = tuple(parts[i] - i - 1 for i in range(p))
    legs = tuple(transposed[i] - i - 1 for i in range(p))
    return FrobeniusCoords(arms, legs)


def rim_path(partition: Partition) -> List[Tuple[int, int]]:
    """
    Boxes of the rim, 1-based (row, column), starting at the bottom box of the
    first column and moving toward the top-right corner.
    """
    parts = partition.parts
    if not parts:
        return []
    path = []
    row, col = len(parts), 1
    while row >= 1:
        path.append((row, col))
        if col < parts[row - 1]:
            col += 1
        else:
            row -= 1
    return path


def remove_boundary_hook(partition: Partition, hook_length: int) -> Optional[HookRemoval]:
    """
    Remove the first hook_length rim boxes, starting from the bottom of column one.

    Args:
        partition: Nonempty diagram
        hook_length: Number of boxes to strip (must be positive)

    Returns:
        HookRemoval, or None when the rim is too short or the remaining boxes
        do not form a Young diagram
    """
    if hook_length < 1:
        raise InvalidInputError(f"Hook length must be positive, got {hook_length}")
    if partition.is_empty():
        raise InvalidInputError("Cannot remove a hook from the empty partition")

    path = rim_path(partition)
    if hook_length > len(path):
        logger.debug(f"Hook of length {hook_length} exceeds rim of {partition}")
        return None

    removed = path[:hook_length]
    removed_by_row = {}
    for row, col in removed:
        removed_by_row.setdefault(row, set()).add(col)

    new_rows = []
    for row, length in enumerate(partition.parts, start=1):
        gone = removed_by_row.get(row, set())
        remaining = length - len(gone)
        # the removed boxes of a row must be its rightmost ones
        if gone and min(gone) != remaining + 1:
            logger.debug(f"Removing {hook_length} rim boxes from {partition} breaks row {row}")
            return None
        new_rows.append(remaining)

    if any(new_rows[i] < new_rows[i + 1] for i in range(len(new_rows) - 1)):
        logger.debug(f"Removing {hook_length} rim boxes from {partition} is not a diagram")
        return None

    return HookRemoval(
        result=Partition(tuple(new_rows)),
        columns_spanned=len({col for _, col in removed}),
        rows_spanned=len(removed_by_row),
        removed=tuple(removed),
    )


def is_even_partition(partition: Partition) -> bool:
    return all(p % 2 == 0 for p in partition.parts)


def is_odd_partition(partition: Partition, n: int) -> bool:
    """True when all n padded parts are odd"""
    return all(p % 2 == 1 for p in partition.padded(n))


def has_even_columns(partition: Partition, n: int) -> bool:
    """True when lambda_1 = lambda_2, lambda_3 = lambda_4, ... at length n"""
    if n % 2 != 0:
        raise InvalidInputError(f"Even-columns test needs even n, got {n}")
    padded = partition.padded(n)
    return all(padded[i] == padded[i + 1] for i in range(0, n, 2))


def double(partition: Partition) -> Partition:
    """2*delta, componentwise"""
    return Partition(tuple(2 * p for p in partition.parts))

