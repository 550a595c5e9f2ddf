"""Layered counting of column-strict tableaux and the avoider counts.

The central object is a layer table: a map from shapes with r*i cells to the
number of column-strict fillings that use each of the letters 1..i exactly r
times. Advancing a layer introduces the next letter, which occupies a
horizontal strip of r cells. The terminal table therefore holds Kostka
numbers with uniform content.

Counting words: a word over {1..n} with r copies of each letter has no
strictly increasing subsequence of length d exactly when the insertion shape
of its reversal (under the Robinson-Schensted-Knuth correspondence) has at
most d-1 rows. Pairing each such shape's Kostka number with its
standard-filling count and summing gives the avoider count, with the whole
dynamic program capped at d-1 rows from the start -- shapes only grow, so
taller shapes can be pruned the moment they appear.
"""

from __future__ import annotations

from typing import Iterator

from .partitions import Partition, syt_count

LayerTable = dict[Partition, int]


def initial_layer() -> LayerTable:
    """Layer 0: one empty filling of the empty shape."""
    return {(): 1}


def _grown_shapes(shape: Partition, strip: int, cap: int) -> Iterator[Partition]:
    """Shapes reachable from ``shape`` by adding a horizontal strip of
    ``strip`` cells without exceeding ``cap`` rows.

    Additions are enumerated row by row: row 0 is unbounded, row i may grow
    at most to the previous row's old length (the strip condition), and at
    most one fresh row can appear at the bottom. This visits each target
    once, never scanning unrelated partitions.
    """
    rows = len(shape)

    def rec(i: int, remaining: int) -> Iterator[Partition]:
        if i == rows:
            if remaining == 0:
                yield ()
            elif i < cap and (i == 0 or remaining <= shape[i - 1]):
                yield (remaining,)
            return
        top = remaining if i == 0 else min(remaining, shape[i - 1] - shape[i])
        for add in range(top, -1, -1):
            for rest in rec(i + 1, remaining - add):
                yield (shape[i] + add,) + rest

    return rec(0, strip)


def advance_layer(table: LayerTable, r: int, cap: int) -> LayerTable:
    """One more letter: redistribute every shape's count over its
    horizontal-strip extensions by ``r`` cells, pruning shapes taller than
    ``cap`` rows.

    Keys of the result are in reverse-lexicographic order, and the result is
    independent of iteration schedule (pure accumulation per target shape).
    """
    if r < 1 or cap < 1:
        raise ValueError("r and cap must be positive")
    grown: LayerTable = {}
    for shape, count in table.items():
        for target in _grown_shapes(shape, r, cap):
            grown[target] = grown.get(target, 0) + count
    return dict(sorted(grown.items(), reverse=True))


def kostka_uniform(shape: Partition, r: int, n: int) -> int:
    """Number of column-strict fillings of ``shape`` using each letter 1..n
    exactly ``r`` times (the Kostka number with uniform content).

    Requires ``sum(shape) == r * n``; zero when no filling exists.
    """
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    shape = tuple(shape)
    if sum(shape) != r * n:
        raise ValueError(
            f"shape size {sum(shape)} does not match r*n = {r}*{n} = {r * n}"
        )
    cap = max(len(shape), 1)
    table = initial_layer()
    for _ in range(n):
        table = advance_layer(table, r, cap)
    return table.get(shape, 0)


def _weighted_total(table: LayerTable) -> int:
    # pair each shape's column-strict count with its standard-filling count
    return sum(syt_count(shape) * count for shape, count in table.items())


def avoiders_count(d: int, r: int, n: int) -> int:
    """Number of words with exactly ``r`` copies of each of 1..n containing
    no strictly increasing subsequence of length ``d``."""
    if d < 2:
        raise ValueError("d must be at least 2")
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    table = initial_layer()
    for _ in range(n):
        table = advance_layer(table, r, d - 1)
    return _weighted_total(table)


def avoiders_sequence(d: int, r: int, n_max: int) -> list[int]:
    """Terms 0..n_max of the avoider counts, from one incremental run.

    Layer tables are reused across n, so the cost is a single pass rather
    than n_max independent computations.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    if r < 1 or n_max < 0:
        raise ValueError("need r >= 1 and n_max >= 0")
    table = initial_layer()
    out = [1]
    for _ in range(n_max):
        table = advance_layer(table, r, d - 1)
        out.append(_weighted_total(table))
    return out
