"""Exact truncated power series over rationals, modified-Bessel expansions,
and the determinant cross-check against the counting engine.

For permutations (one copy of each letter), the generating function of the
counts divided by n!^2 equals a k x k determinant of modified Bessel series
(Gessel's identity): sum_n u_k(n)/n!^2 * x^(2n) = det(I_(|i-j|)(2x)). The
series ring and determinant here are exact, so the check is an identity
test, not a numeric comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .tableaux import avoiders_count


class TruncSeries:
    """A power series truncated after degree ``trunc``, with exact rational
    coefficients.

    Arithmetic is exact modulo x^(trunc+1); coefficients beyond the
    truncation are undefined and never fabricated (asking for one raises).
    Operands must share the same truncation degree.
    """

    __slots__ = ("trunc", "coeffs")

    def __init__(self, trunc: int, coeffs: Sequence = ()) -> None:
        if trunc < 0:
            raise ValueError("truncation degree must be nonnegative")
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > trunc + 1:
            raise ValueError(
                f"{len(cs)} coefficients exceed truncation degree {trunc}"
            )
        cs += [Fraction(0)] * (trunc + 1 - len(cs))
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def zero(cls, trunc: int) -> "TruncSeries":
        return cls(trunc)

    @classmethod
    def one(cls, trunc: int) -> "TruncSeries":
        return cls(trunc, (1,))

    def coeff(self, power: int) -> Fraction:
        if not 0 <= power <= self.trunc:
            raise ValueError(
                f"coefficient of x^{power} is undefined at truncation {self.trunc}"
            )
        return self.coeffs[power]

    def _require_match(self, other: "TruncSeries") -> None:
        if self.trunc != other.trunc:
            raise ValueError(
                f"truncation mismatch: {self.trunc} vs {other.trunc}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.trunc, self.coeffs))

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.trunc, [-c for c in self.coeffs])

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._require_match(other)
        return TruncSeries(
            self.trunc, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._require_match(other)
        return TruncSeries(
            self.trunc, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            self._require_match(other)
            out = [Fraction(0)] * (self.trunc + 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j in range(self.trunc + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
            return TruncSeries(self.trunc, out)
        if isinstance(other, (int, Fraction)):
            return TruncSeries(self.trunc, [c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        parts = []
        for power, c in enumerate(self.coeffs):
            if not c:
                continue
            if power == 0:
                parts.append(str(c))
            elif power == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{power}" if c != 1 else f"x^{power}")
        body = " + ".join(parts) if parts else "0"
        return f"TruncSeries({body} mod x^{self.trunc + 1})"


def bessel_I_2x(nu: int, trunc: int) -> TruncSeries:
    """Series of the modified Bessel function I_nu at argument 2x: the
    coefficient of x^(2j+nu) is 1/(j! * (j+nu)!).

    Orders above the truncation give the zero series.
    """
    if nu < 0:
        raise ValueError("Bessel order must be nonnegative")
    coeffs = [Fraction(0)] * (trunc + 1)
    j = 0
    while 2 * j + nu <= trunc:
        coeffs[2 * j + nu] = Fraction(1, factorial(j) * factorial(j + nu))
        j += 1
    return TruncSeries(trunc, coeffs)


def series_det(matrix: Sequence[Sequence[TruncSeries]]) -> TruncSeries:
    """Determinant of a square matrix of TruncSeries sharing one truncation.

    Expansion by minors with memoization on column subsets: O(2^k) series
    products, fine for k up to ~8. Elimination-style algorithms would divide
    by series with zero constant term, which is why minors are used.
    """
    k = len(matrix)
    if k == 0 or any(len(row) != k for row in matrix):
        raise ValueError("matrix must be square and nonempty")
    trunc = matrix[0][0].trunc
    for row in matrix:
        for entry in row:
            if entry.trunc != trunc:
                raise ValueError("all entries must share one truncation")
    memo: dict[int, TruncSeries] = {0: TruncSeries.one(trunc)}

    def expand(mask: int) -> TruncSeries:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        row = k - bin(mask).count("1")
        acc = TruncSeries.zero(trunc)
        sign = 1
        for col in range(k):
            bit = 1 << col
            if mask & bit:
                term = matrix[row][col] * expand(mask & ~bit)
                acc = acc + term if sign > 0 else acc - term
                sign = -sign
        memo[mask] = acc
        return acc

    return expand((1 << k) - 1)


def bessel_determinant(k: int, trunc: int) -> TruncSeries:
    """det(I_(|i-j|)(2x)) for i, j = 1..k, truncated after degree ``trunc``."""
    if k < 1:
        raise ValueError("k must be positive")
    matrix = [[bessel_I_2x(abs(i - j), trunc) for j in range(k)] for i in range(k)]
    return series_det(matrix)


def gessel_coefficient(k: int, n: int) -> Fraction:
    """Coefficient of x^(2n) in the k x k Bessel determinant, exact."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    return bessel_determinant(k, 2 * n).coeff(2 * n)


@dataclass(frozen=True)
class GesselCheck:
    """Outcome of comparing n!^2 times the determinant coefficients against
    the counting engine, index by index."""

    k: int
    n_max: int
    failures: tuple[tuple[int, Fraction, int], ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def report(self) -> str:
        lines = [f"Bessel determinant identity: k={self.k}, n up to {self.n_max}"]
        for n, det_side, count_side in self.failures:
            lines.append(
                f"  n={n}: determinant gives {det_side}, count gives {count_side}"
            )
        if self.failures:
            lines.append(
                f"FAIL ({len(self.failures)} of {self.n_max + 1} indices disagree)"
            )
        else:
            lines.append(f"PASS (all {self.n_max + 1} indices agree)")
        return "\n".join(lines)


def gessel_check(k: int, n_max: int) -> GesselCheck:
    """True result iff n!^2 * [x^(2n)] det(I_(|i-j|)(2x)) equals the count of
    permutations of n with no increasing subsequence longer than k, i.e.
    avoiders_count(k+1, 1, n), for every n up to n_max."""
    if k < 1 or n_max < 0:
        raise ValueError("need k >= 1 and n_max >= 0")
    det = bessel_determinant(k, 2 * n_max)
    failures = []
    for n in range(n_max + 1):
        det_side = factorial(n) ** 2 * det.coeff(2 * n)
        count_side = avoiders_count(k + 1, 1, n)
        if det_side != count_side:
            failures.append((n, det_side, count_side))
    return GesselCheck(k=k, n_max=n_max, failures=tuple(failures))
