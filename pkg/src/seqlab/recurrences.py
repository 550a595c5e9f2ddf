"""Linear recurrences with integer polynomial coefficients.

Guessing builds an exact homogeneous linear system from sequence windows and
extracts integer nullspace vectors; a candidate counts only if it also
annihilates a held-out tail it never saw. There is no floating point
anywhere in this module: elimination is fraction-free over the integers and
back-substitution runs over exact rationals, so an accepted recurrence is a
certificate for the supplied terms, not a fit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class SingularLeadingCoefficientError(ArithmeticError):
    """The leading coefficient vanished at an index the extension needs."""


class NonIntegerStepError(ArithmeticError):
    """An extension step required a non-exact division (wrong recurrence)."""


class InsufficientTermsError(ValueError):
    """Too few terms for the requested operation."""


# --- integer polynomials, as coefficient tuples in ascending powers -------


def poly_trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    """Canonical form: trailing zeros stripped; the zero polynomial is ()."""
    c = tuple(int(x) for x in coeffs)
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def poly_degree(coeffs: Iterable[int]) -> int:
    """Degree, with the zero polynomial at -1."""
    return len(poly_trim(coeffs)) - 1


def poly_eval(coeffs: Sequence[int], n: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * n + c
    return value


# --- the recurrence type ---------------------------------------------------


@dataclass(frozen=True)
class PRecurrence:
    """sum_i coeffs[i](n) * a(n+i) = 0 for all n >= offset.

    ``coeffs`` runs from the 0-shift polynomial up to the order-shift one.
    Construction canonicalizes: polynomials trimmed, overall integer content
    divided out, and the sign flipped so the leading coefficient of the
    highest-shift polynomial is positive. The highest-shift polynomial must
    be nonzero.
    """

    coeffs: tuple[tuple[int, ...], ...]
    offset: int = 0

    def __post_init__(self) -> None:
        polys = tuple(poly_trim(c) for c in self.coeffs)
        if len(polys) < 2:
            raise ValueError("a recurrence needs order at least 1")
        if not polys[-1]:
            raise ValueError("the highest-shift coefficient polynomial is zero")
        if self.offset < 0:
            raise ValueError("offset must be nonnegative")
        content = 0
        for poly in polys:
            for c in poly:
                content = gcd(content, c)
        if polys[-1][-1] < 0:
            content = -content
        if content != 1:
            polys = tuple(tuple(c // content for c in poly) for poly in polys)
        object.__setattr__(self, "coeffs", polys)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        return max(poly_degree(c) for c in self.coeffs)


def recurrence_residual(rec: PRecurrence, terms: Sequence[int], n: int) -> int:
    """sum_i c_i(n) * terms[n+i]; zero iff the window at n satisfies rec."""
    return sum(poly_eval(c, n) * terms[n + i] for i, c in enumerate(rec.coeffs))


def verify(rec: PRecurrence, terms: Sequence[int]) -> bool:
    """Exact check of every applicable window of ``terms``.

    Vacuously true when fewer than order+1 terms are given. Windows where
    the leading coefficient vanishes are excluded (they cannot pin down the
    next term and are treated as singular points).
    """
    terms = list(terms)
    for n in range(rec.offset, len(terms) - rec.order):
        if poly_eval(rec.coeffs[-1], n) == 0:
            continue
        if recurrence_residual(rec, terms, n) != 0:
            return False
    return True


def extend(rec: PRecurrence, seed: Sequence[int], n_max: int) -> list[int]:
    """Terms 0..n_max: the seed followed by the values the recurrence forces.

    Each step solves the window for its last entry; the division by the
    leading coefficient must be exact over the integers and is checked.
    Raises SingularLeadingCoefficientError when the leading coefficient is
    zero at a needed index and NonIntegerStepError when a division fails
    (which signals a wrong recurrence, not a numeric problem).
    """
    terms = [int(t) for t in seed]
    if len(terms) < rec.order + rec.offset:
        raise ValueError(
            f"seed must cover indices 0..{rec.order + rec.offset - 1}; "
            f"got {len(terms)} terms"
        )
    if not verify(rec, terms):
        raise ValueError("seed is inconsistent with the recurrence")
    lead = rec.coeffs[-1]
    for m in range(len(terms), n_max + 1):
        n = m - rec.order
        pivot = poly_eval(lead, n)
        if pivot == 0:
            raise SingularLeadingCoefficientError(
                f"leading coefficient vanishes at n={n}; "
                f"cannot extend past index {m - 1}"
            )
        acc = sum(
            poly_eval(c, n) * terms[n + i] for i, c in enumerate(rec.coeffs[:-1])
        )
        value, remainder = divmod(-acc, pivot)
        if remainder:
            raise NonIntegerStepError(
                f"step to index {m} is not an integer; the recurrence does "
                f"not generate these terms"
            )
        terms.append(value)
    return terms[: n_max + 1]


# --- exact nullspace -------------------------------------------------------


def _nullspace_basis(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Primitive integer basis of the right nullspace of an integer matrix,
    one vector per free column, in ascending free-column order.

    Forward elimination is fraction-free (cross-multiplication with exact
    division by the previous pivot); back-substitution runs over Fractions
    and each vector is scaled to coprime integers.
    """
    m = [row[:] for row in rows]
    pivot_cols: list[int] = []
    rank = 0
    prev_pivot = 1
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, len(m)):
            if m[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        top = m[rank]
        for i in range(rank + 1, len(m)):
            row = m[i]
            factor = row[col]
            for j in range(col, ncols):
                row[j] = (pivot * row[j] - factor * top[j]) // prev_pivot
        prev_pivot = pivot
        pivot_cols.append(col)
        rank += 1
        if rank == len(m):
            break

    taken = set(pivot_cols)
    basis: list[list[int]] = []
    for free in (c for c in range(ncols) if c not in taken):
        x = [Fraction(0)] * ncols
        x[free] = Fraction(1)
        for k in reversed(range(rank)):
            col = pivot_cols[k]
            row = m[k]
            s = Fraction(0)
            for j in range(col + 1, ncols):
                if x[j]:
                    s += row[j] * x[j]
            x[col] = -s / row[col]
        scale = 1
        for f in x:
            scale = scale * f.denominator // gcd(scale, f.denominator)
        vec = [int(f * scale) for f in x]
        content = 0
        for v in vec:
            content = gcd(content, v)
        basis.append([v // content for v in vec])
    return basis


# --- guessing --------------------------------------------------------------


def guess(
    terms: Sequence[int],
    max_order: int = 3,
    max_degree: int = 4,
    holdout: int | None = None,
) -> PRecurrence | None:
    """Search for a recurrence annihilating ``terms``.

    Candidate (order, degree) pairs are tried by increasing system size
    (order+1)*(degree+1), ties broken toward lower order. For each pair an
    exact homogeneous system is built from every window avoiding the last
    ``holdout`` terms; a nullspace vector is accepted only if it also
    annihilates every window touching the held-out terms. Pairs with fewer
    training windows than unknowns are skipped -- an underdetermined system
    always has solutions and proves nothing.

    The whole search box is available when ``len(terms)`` is at least
    (max_order+1)*(max_degree+1) + holdout + max_order. ``holdout`` defaults
    to a quarter of the terms, at least 4. Returns None when nothing within
    the bounds fits (which says nothing about larger bounds).
    """
    terms = [int(t) for t in terms]
    if max_order < 1 or max_degree < 0:
        raise ValueError("need max_order >= 1 and max_degree >= 0")
    if holdout is None:
        holdout = max(4, len(terms) // 4)
    if holdout < 1:
        raise ValueError("holdout must be positive")
    if len(terms) < holdout + 3:
        raise InsufficientTermsError(
            f"need at least {holdout + 3} terms (order 1, degree 0, "
            f"holdout {holdout}); got {len(terms)}"
        )
    train_len = len(terms) - holdout
    pairs = sorted(
        (
            (order, degree)
            for order in range(1, max_order + 1)
            for degree in range(max_degree + 1)
        ),
        key=lambda od: ((od[0] + 1) * (od[1] + 1), od[0]),
    )
    for order, degree in pairs:
        unknowns = (order + 1) * (degree + 1)
        windows = train_len - order
        if windows < unknowns:
            continue
        rows = []
        for n in range(windows):
            row: list[int] = []
            for i in range(order + 1):
                entry = terms[n + i]
                for _ in range(degree + 1):
                    row.append(entry)
                    entry *= n
            rows.append(row)
        for vec in _nullspace_basis(rows, unknowns):
            polys = tuple(
                poly_trim(vec[i * (degree + 1) : (i + 1) * (degree + 1)])
                for i in range(order + 1)
            )
            if not polys[-1]:
                continue
            candidate = PRecurrence(polys)
            if _annihilates_tail(candidate, terms, holdout):
                return candidate
    return None


def _annihilates_tail(rec: PRecurrence, terms: list[int], holdout: int) -> bool:
    # every window overlapping the held-out terms, checked unconditionally
    start = max(rec.offset, len(terms) - holdout - rec.order)
    for n in range(start, len(terms) - rec.order):
        if recurrence_residual(rec, terms, n) != 0:
            return False
    return True


# --- text format -----------------------------------------------------------


def format_recurrence(rec: PRecurrence) -> str:
    """Line-oriented exact text form.

    Line 1 is ``ORDER R DEGREE D OFFSET n0``; the next R+1 lines carry the
    D+1 integer coefficients of each polynomial in ascending powers,
    space-separated, from the 0-shift up. Round-trips bit-exactly through
    parse_recurrence.
    """
    degree = rec.degree
    lines = [f"ORDER {rec.order} DEGREE {degree} OFFSET {rec.offset}"]
    for poly in rec.coeffs:
        padded = list(poly) + [0] * (degree + 1 - len(poly))
        lines.append(" ".join(str(c) for c in padded))
    return "\n".join(lines) + "\n"


def parse_recurrence(text: str) -> PRecurrence:
    """Inverse of format_recurrence; raises ValueError on malformed input."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty recurrence text")
    head = lines[0].split()
    if (
        len(head) != 6
        or head[0] != "ORDER"
        or head[2] != "DEGREE"
        or head[4] != "OFFSET"
    ):
        raise ValueError(f"bad recurrence header: {lines[0]!r}")
    order, degree, offset = int(head[1]), int(head[3]), int(head[5])
    if len(lines) != order + 2:
        raise ValueError(
            f"expected {order + 1} coefficient lines, got {len(lines) - 1}"
        )
    polys = []
    for ln in lines[1:]:
        coeffs = tuple(int(tok) for tok in ln.split())
        if len(coeffs) != degree + 1:
            raise ValueError(f"expected {degree + 1} coefficients: {ln!r}")
        polys.append(coeffs)
    return PRecurrence(tuple(polys), offset)
