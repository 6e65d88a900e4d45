"""Small combinatorial enumerations shared across modules: compositions,
packed words (surjections encoded as words), and descent statistics."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[tuple[int, ...], ...]:
    """All nonempty compositions of n (ordered tuples of positive parts),
    in order of the split-point bitmask."""
    if n < 1:
        return ()
    out = []
    for mask in range(1 << (n - 1)):
        parts = []
        prev = 0
        for pos in range(1, n):
            if mask & (1 << (pos - 1)):
                parts.append(pos - prev)
                prev = pos
        parts.append(n - prev)
        out.append(tuple(parts))
    return tuple(out)


def compositions_of_length(n: int, k: int) -> list[tuple[int, ...]]:
    return [c for c in compositions(n) if len(c) == k]


def partial_sums(parts: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    acc = 0
    for p in parts:
        acc += p
        out.append(acc)
    return tuple(out)


def is_packed(values: tuple[int, ...]) -> bool:
    """True when the set of values is exactly {1, ..., p}."""
    if not values:
        return True
    seen = set(values)
    return min(seen) == 1 and len(seen) == max(seen)


@lru_cache(maxsize=None)
def packed_sequences(n: int) -> tuple[tuple[int, ...], ...]:
    """All packed words of degree n, sorted by (number of values, word)."""
    if n == 0:
        return ((),)
    found = [w for w in product(range(1, n + 1), repeat=n) if is_packed(w)]
    found.sort(key=lambda w: (max(w), w))
    return tuple(found)


@lru_cache(maxsize=None)
def permutation_sequences(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(permutations(range(1, n + 1)))


def descent_set(values: tuple[int, ...]) -> frozenset[int]:
    """Positions i (1-based) with values[i] > values[i+1]."""
    return frozenset(i + 1 for i in range(len(values) - 1)
                     if values[i] > values[i + 1])


def descent_count(values: tuple[int, ...]) -> int:
    return sum(1 for i in range(len(values) - 1) if values[i] > values[i + 1])


def rise_count(values: tuple[int, ...]) -> int:
    """Number of strict rises values[i] < values[i+1]."""
    return sum(1 for i in range(len(values) - 1) if values[i] < values[i + 1])


def run_lengths(values: tuple[int, ...]) -> tuple[int, ...]:
    """Lengths of the maximal blocks of identical letters."""
    if not values:
        return ()
    out = []
    count = 1
    for prev, cur in zip(values, values[1:]):
        if cur == prev:
            count += 1
        else:
            out.append(count)
            count = 1
    out.append(count)
    return tuple(out)
