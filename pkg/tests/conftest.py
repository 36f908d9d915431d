"""Shared pytest fixtures; puts src/ on the import path."""

import os
import random
import sys

import pytest

sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from branching import GroupId, GroupKind  # noqa: E402


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def sp2():
    return GroupId(GroupKind.SP, 2)


@pytest.fixture
def sp4():
    return GroupId(GroupKind.SP, 4)


def group(kind: str, n: int) -> GroupId:
    return GroupId.parse(kind, n)


def random_spec(rng: random.Random, n: int):
    """A small random module: one or two weights of size <= 3, multiplicity <= 2"""
    from hilbert_engine import ModuleSpec

    pairs = []
    for _ in range(rng.randint(1, 2)):
        parts = []
        remaining = rng.randint(1, 3)
        while remaining and len(parts) < n:
            part = rng.randint(1, min(remaining, parts[-1] if parts else remaining))
            parts.append(part)
            remaining -= part
        if not remaining:
            pairs.append((tuple(parts), rng.randint(1, 2)))
    return ModuleSpec.from_pairs(n, pairs or [((1,), 1)])
