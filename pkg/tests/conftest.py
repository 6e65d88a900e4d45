"""Shared helpers for the test suite."""

from __future__ import annotations

from fractions import Fraction

import pytest

from shufflehopf.tensorhopf import generic_word, parse_tensor_word
from shufflehopf.wqsym import parse_packed_word


def F(*args):
    return Fraction(*args)


def tw(text: str):
    """Shorthand tensor-word literal."""
    return parse_tensor_word(text)


def pw(text: str):
    """Shorthand packed-word literal."""
    return parse_packed_word(text)


def segments(sizes):
    """Consecutive generic words of the given sizes (distinct generators)."""
    out = []
    start = 1
    for size in sizes:
        out.append(generic_word(size, start=start))
        start += size
    return out


def splits(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in splits(total - first, parts - 1):
            yield (first,) + rest


@pytest.fixture
def rng():
    import random
    return random.Random(987654321)
