"""Growth diagnostics for fast-growing integer sequences.

Three pieces: the exact conjectured growth parameters for the avoider
counts, an empirical fit of those parameters from data, and Richardson
extrapolation of the limiting constant. Terms can have thousands of digits,
so every normalization goes through high-precision logarithms (mpmath) and
drops to machine floats only at the very end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

import mpmath
import numpy as np

from .recurrences import InsufficientTermsError


@dataclass(frozen=True)
class GrowthParams:
    """Growth model a(n) ~ C * mu^n / n^alpha with exact parameters."""

    mu: int
    alpha: Fraction


def conjectured_params(d: int, r: int) -> GrowthParams:
    """Exact conjectured growth parameters for the avoider counts:
    mu = binom(d+r-2, d-2) * (d-1)^r and alpha = ((d-1)^2 - 1) / 2.

    For r = 1 this reduces to mu = (d-1)^2, the classical permutation
    regime; for d = 2 it gives (1, 0), matching the constant sequence.
    """
    if d < 2 or r < 1:
        raise ValueError("need d >= 2 and r >= 1")
    mu = comb(d + r - 2, d - 2) * (d - 1) ** r
    alpha = Fraction((d - 1) ** 2 - 1, 2)
    return GrowthParams(mu=mu, alpha=alpha)


def _high_precision_logs(values: Mapping[int, int]) -> dict[int, float]:
    """Logs of arbitrarily large positive ints, computed at a precision that
    covers every digit of the inputs, returned as floats."""
    digits = max(len(str(v)) for v in values.values())
    with mpmath.workdps(digits + 25):
        return {n: float(mpmath.log(v)) for n, v in values.items()}


def empirical_growth(
    terms: Sequence[int], tail_fraction: float = 0.5
) -> tuple[float, float]:
    """Fit log a(n) ~ n*log(mu) - alpha*log(n) + const by least squares and
    return (mu_hat, alpha_hat).

    Only the trailing ``tail_fraction`` of the indices enters the fit, to
    suppress transients; index 0 never does (log 0). Needs at least 16
    positive terms.
    """
    terms = list(terms)
    if len(terms) < 16:
        raise InsufficientTermsError(f"need at least 16 terms, got {len(terms)}")
    if any(t <= 0 for t in terms):
        raise ValueError("terms must be positive")
    if not 0 < tail_fraction <= 1:
        raise ValueError("tail_fraction must be in (0, 1]")
    top = len(terms) - 1
    lo = max(1, int(round(top * (1 - tail_fraction))))
    logs = _high_precision_logs({n: terms[n] for n in range(lo, top + 1)})
    ns = np.arange(lo, top + 1, dtype=float)
    y = np.array([logs[n] for n in range(lo, top + 1)])
    design = np.column_stack([ns, -np.log(ns), np.ones_like(ns)])
    solution, *_ = np.linalg.lstsq(design, y, rcond=None)
    log_mu, alpha_hat, _ = solution
    return float(math.exp(log_mu)), float(alpha_hat)


def richardson_extrapolate(samples: Sequence[tuple[int, Fraction]]) -> Fraction:
    """Limit at infinity of a function C + a1/x + ... + ak/x^k, given exact
    samples at k+1 distinct positive points.

    This is Lagrange evaluation at 1/x = 0; with k+1 points it cancels the
    first k correction terms exactly.
    """
    total = Fraction(0)
    for j, (xj, value) in enumerate(samples):
        weight = Fraction(1)
        for l, (xl, _) in enumerate(samples):
            if l == j:
                continue
            if xl == xj:
                raise ValueError("sample points must be distinct")
            weight *= Fraction(xj, xj - xl)
        total += weight * Fraction(value)
    return total


@dataclass(frozen=True)
class ConstantEstimate:
    """Richardson ladder for the limit of c_n = a(n) * n^alpha / mu^n.

    ``rows`` holds (n, c_n, level-1 .. level-k) with None where a level
    would need indices beyond the data; ``estimates[k]`` is the level-k
    value at the last index that supports it (level 0 is the raw tail
    value). The ladder assumes the corrections to c_n expand in integer
    powers of 1/n; that is a working assumption of this tool, not an
    established property of the data, and the report says so.
    """

    stride: int
    levels: int
    rows: tuple[tuple, ...]
    estimates: tuple[float, ...]

    def report(self, max_rows: int | None = None) -> str:
        headers = ["n", "c_n"] + [f"level{k}" for k in range(1, self.levels + 1)]
        shown = self.rows if max_rows is None else self.rows[-max_rows:]
        body = []
        for row in shown:
            cells = [str(row[0])] + [
                "" if v is None else f"{v:.9g}" for v in row[1:]
            ]
            body.append(cells)
        widths = [
            max(len(h), *(len(line[i]) for line in body)) if body else len(h)
            for i, h in enumerate(headers)
        ]
        lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
        for cells in body:
            lines.append("  ".join(c.rjust(w) for c, w in zip(cells, widths)))
        lines.append(
            "estimates by level: "
            + ", ".join(f"{v:.9g}" for v in self.estimates)
        )
        lines.append(
            "note: extrapolation assumes corrections in integer powers of "
            "1/n (working assumption, not established)"
        )
        return "\n".join(lines)


def _normalized_tail(
    terms: Sequence[int], params: GrowthParams
) -> dict[int, float]:
    """c_n = a(n) * n^alpha / mu^n for n = 1..top, through high-precision
    logs so that thousand-digit terms neither overflow nor lose accuracy."""
    digits = len(str(max(terms)))
    out: dict[int, float] = {}
    with mpmath.workdps(digits + 25):
        log_mu = mpmath.log(params.mu)
        alpha = mpmath.mpf(params.alpha.numerator) / params.alpha.denominator
        for n in range(1, len(terms)):
            log_c = mpmath.log(terms[n]) + alpha * mpmath.log(n) - n * log_mu
            out[n] = float(mpmath.exp(log_c))
    return out


def estimate_constant(
    terms: Sequence[int],
    params: GrowthParams,
    levels: int = 3,
    stride: int = 8,
) -> ConstantEstimate:
    """Estimate C in a(n) ~ C * mu^n / n^alpha.

    The normalized sequence c_n is computed in log space; level k then
    combines c at indices n, n+stride, ..., n+k*stride to cancel the first k
    inverse-power corrections (consecutive-index elimination -- exact terms
    at every index are available, so there is no need for index doubling).
    The ladder arithmetic itself is exact over rationals on the float inputs.
    """
    terms = list(terms)
    if any(t <= 0 for t in terms):
        raise ValueError("terms must be positive")
    if levels < 1 or stride < 1:
        raise ValueError("levels and stride must be positive")
    top = len(terms) - 1
    if top - 1 < levels * stride:
        raise InsufficientTermsError(
            f"need terms up to index {levels * stride + 1} for {levels} "
            f"levels at stride {stride}; got up to {top}"
        )
    c = _normalized_tail(terms, params)
    rows = []
    for n in range(1, top + 1):
        row: list = [n, c[n]]
        for k in range(1, levels + 1):
            if n + k * stride <= top:
                pts = [
                    (n + j * stride, Fraction(c[n + j * stride]))
                    for j in range(k + 1)
                ]
                row.append(float(richardson_extrapolate(pts)))
            else:
                row.append(None)
        rows.append(tuple(row))
    estimates = [c[top]]
    for k in range(1, levels + 1):
        base = top - k * stride
        estimates.append(rows[base - 1][1 + k])
    if not all(math.isfinite(v) for v in estimates):
        raise ArithmeticError("normalization produced non-finite estimates")
    return ConstantEstimate(
        stride=stride, levels=levels, rows=tuple(rows), estimates=tuple(estimates)
    )
