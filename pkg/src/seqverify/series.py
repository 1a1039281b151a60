"""Dense truncated formal power series over exact rationals.

A :class:`TruncatedSeries` holds the coefficients of x^0 .. x^order.  Sums
and Cauchy products truncate to the shorter operand, so every stored
coefficient of a result is exact.  Orders here stay in the low hundreds and
the rational arithmetic dominates, which is why the product is the plain
schoolbook convolution.

The module also builds the one exponential generating function shipped with
the toolkit, ``((1+x)*log(1+x))^2 / 2`` for A045406, and converts e.g.f.
coefficients into integer sequence values via a(n) = n! * [x^n].
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Union

from .sequences import NonIntegralError, Provenance, SequenceTable

Scalar = Union[int, Fraction]


class TruncatedSeries:
    """Formal power series known exactly up to and including x^order."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Scalar]):
        coeffs = tuple(Fraction(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a truncated series needs at least the x^0 coefficient")
        self._coeffs = coeffs

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([Fraction(0)] * (order + 1))

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coefficient(self, power: int) -> Fraction:
        if not 0 <= power <= self.order:
            raise IndexError(f"coefficient of x^{power} not stored (order {self.order})")
        return self._coeffs[power]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        k = min(self.order, other.order) + 1
        return TruncatedSeries([a + b for a, b in zip(self._coeffs[:k], other._coeffs[:k])])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        k = min(self.order, other.order) + 1
        return TruncatedSeries([a - b for a, b in zip(self._coeffs[:k], other._coeffs[:k])])

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            scale = Fraction(other)
            return TruncatedSeries([c * scale for c in self._coeffs])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self._coeffs[: order + 1]):
            if a == 0:
                continue
            for j in range(order + 1 - i):
                b = other._coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def derivative(self) -> "TruncatedSeries":
        """Termwise d/dx; the result is one order shorter."""
        if self.order < 1:
            raise ValueError("derivative of an order-0 truncation retains no terms")
        return TruncatedSeries([k * c for k, c in enumerate(self._coeffs)][1:])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(("TruncatedSeries", self._coeffs))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if len(self._coeffs) > 8 else ""
        return f"TruncatedSeries([{head}{tail}], order={self.order})"


def log1p_series(order: int) -> TruncatedSeries:
    """log(1+x) truncated: coefficient of x^k is (-1)^(k+1)/k, constant 0."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = [Fraction(0)]
    for k in range(1, order + 1):
        coeffs.append(Fraction(1 if k % 2 else -1, k))
    return TruncatedSeries(coeffs)


def one_plus_x(order: int) -> TruncatedSeries:
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    if order >= 1:
        coeffs[1] = Fraction(1)
    return TruncatedSeries(coeffs)


def egf_a045406(order: int) -> TruncatedSeries:
    """The e.g.f. of A045406, ((1+x)*log(1+x))^2 / 2, truncated.

    The x^0 and x^1 coefficients are 0; the first nonzero term is x^2.
    """
    if order < 2:
        raise ValueError("order must be at least 2 (the sequence starts at n = 2)")
    log = log1p_series(order)
    factor = one_plus_x(order)
    return log * log * factor * factor * Fraction(1, 2)


EGF_BUILDERS: dict[str, Callable[[int], TruncatedSeries]] = {
    "A045406": egf_a045406,
}


def egf_coefficients(series: TruncatedSeries, offset: int | None = None) -> SequenceTable:
    """Integer sequence values a(n) = n! * [x^n] read off an e.g.f.

    With ``offset=None`` leading zero coefficients are skipped, matching the
    OEIS convention that the offset points at the first nonzero term.  Every
    n! * coefficient must be an exact integer; a proper fraction means the
    series is not the e.g.f. of an integer sequence (or was built to the
    wrong order) and raises :class:`NonIntegralError`.
    """
    start = offset
    if start is None:
        start = 0
        while start <= series.order and series.coefficient(start) == 0:
            start += 1
        if start > series.order:
            start = 0
    elif not 0 <= start <= series.order:
        raise ValueError(f"offset {start} outside the truncation range 0..{series.order}")

    values = []
    for k in range(start, series.order + 1):
        scaled = series.coefficient(k) * factorial(k)
        if scaled.denominator != 1:
            raise NonIntegralError(
                f"{k}! * [x^{k}] = {scaled} is not an integer; "
                "not an integer-sequence e.g.f. at this order"
            )
        values.append(scaled.numerator)
    return SequenceTable(offset=start, values=tuple(values), provenance=Provenance.EGF)
