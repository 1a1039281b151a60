"""P-recursive recurrences: residual checking, unfolding, and guessing.

A :class:`PRecurrence` of order r states sum(p_i(n) * a(n-i) for i in 0..r)
= 0 for n >= valid_from, with polynomial coefficients p_i.  Instances are
kept canonical: polynomial content and scalar content divided out, leading
scalar of p0 positive, trailing identically-zero coefficients stripped.
Recurrences are only determined up to a rational-function multiple, so the
canonical representative is what equality compares.

All arithmetic is exact; a residual is an arbitrary-precision integer and a
sweep holds iff every residual in range is exactly zero.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import Polynomial, polygcd, rational_content
from .linalg import integer_nullspace
from .sequences import NonIntegralError, Provenance, SequenceRangeError, SequenceTable

__all__ = [
    "PRecurrence",
    "ResidualReport",
    "GuessError",
    "LeadingRootError",
    "residual",
    "sweep",
    "unfold",
    "guess",
]

GUARD_ROWS = 5


class GuessError(ValueError):
    """Recurrence guessing could not be attempted on the given input."""


class LeadingRootError(ArithmeticError):
    """Forward unfolding hit an integer root of the leading coefficient."""


class PRecurrence:
    __slots__ = ("_coeffs", "_valid_from")

    def __init__(self, coefficients: Iterable[Polynomial | int | Fraction], valid_from: int):
        polys = []
        for c in coefficients:
            p = Polynomial._coerce(c)
            if p is None:
                raise TypeError("recurrence coefficients must be polynomials or scalars")
            polys.append(p)
        while polys and polys[-1].is_zero:
            polys.pop()
        if len(polys) < 2:
            raise ValueError("a recurrence needs order >= 1 (at least p0 and p1)")
        if polys[0].is_zero:
            raise ValueError("leading coefficient p0 must not be identically zero")

        common = polys[0]
        for p in polys[1:]:
            if not p.is_zero:
                common = polygcd(common, p)
        if common.degree > 0:
            polys = [p.exact_div(common) for p in polys]
        scalars = [c for p in polys for c in p.coefficients]
        content = rational_content(scalars)
        if content != 1:
            polys = [p * (1 / content) for p in polys]
        if polys[0].leading < 0:
            polys = [-p for p in polys]

        self._coeffs = tuple(polys)
        self._valid_from = int(valid_from)

    @property
    def coefficients(self) -> tuple[Polynomial, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def valid_from(self) -> int:
        return self._valid_from

    def spec_string(self) -> str:
        """The recurrence in its text format, e.g. ``p0 = 1; p1 = 2*n - 7; from = 5``."""
        pieces = [f"p{i} = {p}" for i, p in enumerate(self._coeffs)]
        pieces.append(f"from = {self._valid_from}")
        return "; ".join(pieces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PRecurrence):
            return NotImplemented
        return self._coeffs == other._coeffs and self._valid_from == other._valid_from

    def __hash__(self):
        return hash(("PRecurrence", self._coeffs, self._valid_from))

    def __str__(self) -> str:
        return self.spec_string()

    def __repr__(self) -> str:
        return f"PRecurrence('{self.spec_string()}')"


@dataclass(frozen=True)
class ResidualReport:
    checked_range: tuple[int, int]
    failures: tuple[tuple[int, int], ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def count(self) -> int:
        lo, hi = self.checked_range
        return max(0, hi - lo + 1)


def _window(rec: PRecurrence, seq: SequenceTable, n: int) -> list[int]:
    missing = [m for m in range(n - rec.order, n + 1) if not seq.covers(m, m)]
    if missing:
        raise SequenceRangeError(
            f"sequence does not cover indices {missing} needed for the residual at n = {n}",
            tuple(missing),
        )
    return [seq[n - i] for i in range(rec.order + 1)]


def residual(rec: PRecurrence, seq: SequenceTable, n: int) -> int:
    """Exact value of sum(p_i(n) * a(n-i)); zero iff the recurrence holds at n."""
    window = _window(rec, seq, n)
    total = Fraction(0)
    for p, value in zip(rec.coefficients, window):
        total += p(n) * value
    if total.denominator != 1:
        raise NonIntegralError(f"residual at n = {n} is the non-integer {total}")
    return total.numerator


def sweep(rec: PRecurrence, seq: SequenceTable, n_lo: int, n_hi: int) -> ResidualReport:
    """Residuals for every n in [n_lo, n_hi]; failures listed in index order.

    An empty range yields an empty, failure-free report.
    """
    started = time.perf_counter()
    failures = []
    for n in range(n_lo, n_hi + 1):
        value = residual(rec, seq, n)
        if value != 0:
            failures.append((n, value))
    return ResidualReport(
        checked_range=(n_lo, n_hi),
        failures=tuple(failures),
        elapsed=time.perf_counter() - started,
    )


def unfold(rec: PRecurrence, initial: SequenceTable, upto: int) -> SequenceTable:
    """Extend seed values forward with a(n) = -sum(p_i(n)*a(n-i), i>=1) / p0(n).

    Requires p0 to have no integer root in the generation range and every
    division to be exact.  When ``upto`` does not go beyond the seeds they
    are returned unchanged.
    """
    if upto <= initial.last_index:
        return initial
    values = list(initial.values)
    offset = initial.offset
    p0 = rec.coefficients[0]
    for n in range(initial.last_index + 1, upto + 1):
        lead = p0(n)
        if lead == 0:
            raise LeadingRootError(f"leading coefficient p0 vanishes at n = {n}")
        acc = Fraction(0)
        for i in range(1, rec.order + 1):
            m = n - i
            if not offset <= m <= offset + len(values) - 1:
                raise SequenceRangeError(
                    f"seed values do not cover index {m} needed to unfold n = {n}",
                    (m,),
                )
            acc += rec.coefficients[i](n) * values[m - offset]
        step = -acc / lead
        if step.denominator != 1:
            raise NonIntegralError(f"unfolding at n = {n} gives the non-integer {step}")
        values.append(step.numerator)
    return SequenceTable(offset=offset, values=tuple(values), provenance=Provenance.RECURRENCE)


def _assemble(vector: Sequence[int], order: int, degree: int, valid_from: int) -> PRecurrence | None:
    """Kernel vector -> canonical recurrence.

    The vector lists coefficients c[i][j] of n^j * a(n-i), i-major.  Leading
    identically-zero p_i mean the relation never touches a(n); rewriting the
    index by that many steps turns it into a lower-order recurrence.
    """
    polys = [
        Polynomial(vector[i * (degree + 1): (i + 1) * (degree + 1)])
        for i in range(order + 1)
    ]
    while polys and polys[-1].is_zero:
        polys.pop()
    lead_zeros = 0
    while lead_zeros < len(polys) and polys[lead_zeros].is_zero:
        lead_zeros += 1
    if lead_zeros:
        polys = [p.shifted(lead_zeros) for p in polys[lead_zeros:]]
        valid_from -= lead_zeros
    if len(polys) < 2:
        return None
    return PRecurrence(polys, valid_from)


def _holds_everywhere(rec: PRecurrence, seq: SequenceTable) -> bool:
    start = max(rec.valid_from, seq.offset + rec.order)
    return all(residual(rec, seq, n) == 0 for n in range(start, seq.last_index + 1))


def guess(seq: SequenceTable, order: int, degree: int) -> list[PRecurrence]:
    """Candidate recurrences of the given order with degree-bounded coefficients.

    Solves the exact nullspace of sum(c[i][j] * n^j * a(n-i)) = 0 over a
    window of (unknowns + guard) consecutive index rows, then keeps only
    candidates whose residual vanishes at every remaining available index.
    If nothing survives, the window is moved one index later and the search
    repeats: sequences often satisfy their recurrence only from some n0 on,
    and the first window that admits survivors pins valid_from down to that
    smallest usable row.  An empty result means no recurrence of this shape
    fits the data, which is information rather than an error.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if degree < 0:
        raise ValueError("degree must be >= 0")
    unknowns = (order + 1) * (degree + 1)
    min_terms = unknowns + order + GUARD_ROWS
    if len(seq) < min_terms:
        raise GuessError(
            f"guessing at order {order}, degree {degree} needs at least {min_terms} "
            f"consecutive terms; got {len(seq)}"
        )
    if all(v == 0 for v in seq.values):
        raise GuessError("all supplied terms are zero; any recurrence fits trivially")

    first_row = seq.offset + order
    last_row = seq.last_index
    start = first_row
    while last_row - start + 1 > unknowns:
        # full guard on the first window (the precondition guarantees it);
        # later windows may shrink but stay overdetermined
        window_rows = min(unknowns + GUARD_ROWS, last_row - start + 1)
        rows = []
        for n in range(start, start + window_rows):
            row = []
            for i in range(order + 1):
                value = seq[n - i]
                for j in range(degree + 1):
                    row.append(n ** j * value)
            rows.append(row)
        candidates = []
        for vector in integer_nullspace(rows):
            rec = _assemble(vector, order, degree, valid_from=start)
            if rec is not None and _holds_everywhere(rec, seq):
                candidates.append(rec)
        if candidates:
            return candidates
        start += 1
    return []
