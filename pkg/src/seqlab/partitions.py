"""Integer partitions and Young-diagram combinatorics.

A partition is a plain tuple of weakly decreasing positive ints; the empty
tuple is the unique partition of 0. No trailing zeros are ever stored:
anything that conceptually pads with zeros does so at comparison time, so a
partition has exactly one representation (important for memo tables and
cache keys). All functions here are pure and safe to call concurrently.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable, Iterator

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Canonicalize an iterable of row lengths: drop trailing zeros, validate."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {parts!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")
    return p


def partitions_upto_length(total: int, max_parts: int) -> Iterator[Partition]:
    """Yield every partition of ``total`` with at most ``max_parts`` parts.

    The order is reverse-lexicographic -- (6), (5,1), (4,2), (4,1,1), (3,3),
    ... -- and is part of the contract: streams are reproducible run to run.
    ``total = 0`` yields only the empty partition.
    """
    if total < 0:
        raise ValueError("total must be nonnegative")
    if total == 0:
        yield ()
        return

    def rec(remaining: int, largest: int, slots: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for part in range(min(largest, remaining), 0, -1):
            if part * slots < remaining:
                break
            for rest in rec(remaining - part, part, slots - 1):
                yield (part,) + rest

    yield from rec(total, total, max_parts)


def conjugate(shape: Partition) -> Partition:
    """Transpose of the Young diagram: column lengths become row lengths."""
    if not shape:
        return ()
    cols = [0] * shape[0]
    for part in shape:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def syt_count(shape: Partition) -> int:
    """Number of standard fillings of ``shape``, by the hook-length formula.

    Exact for any size; ``syt_count(()) == 1``. The division of the factorial
    by the hook product is checked to be exact (it always is for a valid
    partition; a remainder means the input was corrupt).
    """
    size = sum(shape)
    if size == 0:
        return 1
    cols = conjugate(shape)
    hook_product = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hook_product *= row - j + cols[j] - i - 1
    count, remainder = divmod(factorial(size), hook_product)
    if remainder:
        raise ArithmeticError(
            f"hook product {hook_product} does not divide {size}! for {shape}"
        )
    return count


def is_horizontal_strip(inner: Partition, outer: Partition) -> bool:
    """True iff ``outer/inner`` is a horizontal strip.

    That is: ``inner`` fits inside ``outer`` componentwise and no two added
    cells share a column, i.e. ``outer[i+1] <= inner[i]`` for every row.
    """
    if len(inner) > len(outer):
        return False
    for i, part in enumerate(outer):
        below = inner[i] if i < len(inner) else 0
        if part < below:
            return False
        if i + 1 < len(outer) and outer[i + 1] > below:
            return False
    return True
