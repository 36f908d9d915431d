#!/usr/bin/env python3
"""
Classical Groups

Identifiers for the groups Sp(2k), O(n) and SO(n) acting on V = C^n.
"""

from dataclasses import dataclass
from enum import Enum

from hilbert_errors import InvalidInputError


class GroupKind(Enum):
    """Group families handled by the library"""
    SP = "sp"
    O = "o"
    SO = "so"


@dataclass(frozen=True)
class GroupId:
    """A classical group together with the dimension n of its standard module"""
    kind: GroupKind
    n: int

    def __post_init__(self):
        if not isinstance(self.kind, GroupKind):
            object.__setattr__(self, 'kind', GroupKind(str(self.kind).lower()))
        if self.n < 1:
            raise InvalidInputError(f"Group dimension must be positive, got {self.n}")
        if self.kind == GroupKind.SP and self.n % 2 != 0:
            raise InvalidInputError(f"Sp(n) needs even n, got {self.n}")

    @classmethod
    def parse(cls, kind: str, n: int) -> 'GroupId':
        try:
            group_kind = GroupKind(kind.strip().lower())
        except ValueError:
            raise InvalidInputError(f"Unknown group {kind!r}; expected one of sp, o, so")
        return cls(group_kind, int(n))

    @property
    def rank(self) -> int:
        """Rank k of the maximal torus"""
        return self.n // 2

    @property
    def is_connected(self) -> bool:
        return self.kind != GroupKind.O

    def __str__(self) -> str:
        return f"{self.kind.name}({self.n})"
