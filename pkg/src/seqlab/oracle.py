"""Brute-force ground truth: enumerate words directly and test increasing
subsequences, independently of the tableau machinery.

Intended for desk-size instances; the counting engine is validated against
this module, not the other way around.
"""

from __future__ import annotations

import warnings
from bisect import bisect_left
from math import factorial
from typing import Iterator, Sequence

Word = tuple[int, ...]

ENUMERATION_BUDGET = 10**6


def total_words(r: int, n: int) -> int:
    """Multiset permutations of {1^r, ..., n^r}: (rn)! / (r!)^n."""
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    return factorial(r * n) // factorial(r) ** n


def longest_strict_increase(word: Sequence[int]) -> int:
    """Length of the longest strictly increasing subsequence.

    Patience method: ``tails[k]`` is the smallest possible last element of an
    increasing subsequence of length k+1. O(len * log len); 0 for the empty
    word.
    """
    tails: list[int] = []
    for x in word:
        pos = bisect_left(tails, x)
        if pos == len(tails):
            tails.append(x)
        else:
            tails[pos] = x
    return len(tails)


def enumerate_words(r: int, n: int) -> Iterator[Word]:
    """Every word with exactly ``r`` copies of each of 1..n, in lexicographic
    order. The count is total_words(r, n)."""
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    remaining = [r] * (n + 1)
    prefix: list[int] = []

    def rec(cells: int) -> Iterator[Word]:
        if cells == 0:
            yield tuple(prefix)
            return
        for letter in range(1, n + 1):
            if remaining[letter]:
                remaining[letter] -= 1
                prefix.append(letter)
                yield from rec(cells - 1)
                prefix.pop()
                remaining[letter] += 1

    yield from rec(r * n)


def brute_count(
    d: int, r: int, n: int, budget: int | None = ENUMERATION_BUDGET
) -> int:
    """Count words on {1^r..n^r} with no strictly increasing subsequence of
    length ``d``, by depth-first multiset enumeration.

    The patience tails structure is maintained incrementally and undone on
    backtrack; a branch is pruned the moment its prefix reaches an increase
    of length d, which no extension can take back. Letters are tried in
    ascending order, so the traversal is deterministic. Emits a warning when
    the total word count exceeds ``budget`` (pass None to silence).
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    if budget is not None:
        total = total_words(r, n)
        if total > budget:
            warnings.warn(
                f"enumerating {total} words for (d={d}, r={r}, n={n}) exceeds "
                f"the budget of {budget}; expect a long run",
                stacklevel=2,
            )
    limit = d - 1
    remaining = [r] * (n + 1)
    tails: list[int] = []

    def walk(cells: int) -> int:
        if cells == 0:
            return 1
        found = 0
        for letter in range(1, n + 1):
            if not remaining[letter]:
                continue
            pos = bisect_left(tails, letter)
            if pos == len(tails):
                if pos == limit:
                    continue
                tails.append(letter)
                remaining[letter] -= 1
                found += walk(cells - 1)
                remaining[letter] += 1
                tails.pop()
            else:
                old = tails[pos]
                tails[pos] = letter
                remaining[letter] -= 1
                found += walk(cells - 1)
                remaining[letter] += 1
                tails[pos] = old
        return found

    return walk(r * n)
