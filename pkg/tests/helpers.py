"""Independent brute-force oracles for the test suite.

Everything here is deliberately dumb: different algorithms from the library
code they check, so agreement means something.
"""

from math import comb, factorial


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def multiset_total(r: int, n: int) -> int:
    return factorial(r * n) // factorial(r) ** n


def brute_partitions(total: int, max_parts: int) -> set[tuple[int, ...]]:
    """All partitions of `total` with at most `max_parts` parts, grown part
    by part in ascending order (no shared code with the library)."""
    if total == 0:
        return {()}
    out: set[tuple[int, ...]] = set()

    def grow(prefix: list[int], remaining: int) -> None:
        if remaining == 0:
            out.add(tuple(sorted(prefix, reverse=True)))
            return
        if len(prefix) == max_parts:
            return
        cap = prefix[-1] if prefix else remaining
        for part in range(1, min(cap, remaining) + 1):
            prefix.append(part)
            grow(prefix, remaining - part)
            prefix.pop()

    grow([], total)
    return out


def brute_syt_count(shape: tuple[int, ...]) -> int:
    """Standard fillings counted by placing 1..size at row ends."""
    size = sum(shape)
    fill = [0] * len(shape)  # cells filled so far in each row

    def place(done: int) -> int:
        if done == size:
            return 1
        total = 0
        for i, width in enumerate(shape):
            c = fill[i]
            if c < width and (i == 0 or fill[i - 1] > c):
                fill[i] += 1
                total += place(done + 1)
                fill[i] -= 1
        return total

    return place(0)


def brute_ssyt_count(shape: tuple[int, ...], r: int, n: int) -> int:
    """Column-strict fillings with each of 1..n used exactly r times,
    counted cell by cell in row-major order."""
    rows = [[0] * w for w in shape]
    remaining = [r] * (n + 1)
    cells = [(i, j) for i, w in enumerate(shape) for j in range(w)]

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo = rows[i][j - 1] if j else 1
        total = 0
        for v in range(lo, n + 1):
            if not remaining[v]:
                continue
            if i and rows[i - 1][j] >= v:
                continue
            rows[i][j] = v
            remaining[v] -= 1
            total += place(idx + 1)
            remaining[v] += 1
            rows[i][j] = 0
        return total

    return place(0)


def lis_quadratic(word) -> int:
    """Longest strictly increasing subsequence by the O(len^2) DP."""
    word = list(word)
    if not word:
        return 0
    best = [1] * len(word)
    for i in range(1, len(word)):
        for j in range(i):
            if word[j] < word[i] and best[j] + 1 > best[i]:
                best[i] = best[j] + 1
    return max(best)


def cells_of(shape: tuple[int, ...]) -> set[tuple[int, int]]:
    return {(i, j) for i, w in enumerate(shape) for j in range(w)}
