"""Harmonic numbers, factorials, Stirling cycle numbers, and the two
built-in harmonic-number closed forms.

Harmonic numbers are memoized in a shared prefix table because the long
recurrence sweeps query them densely; growth is lock-guarded and reads of
already-filled prefixes are safe without the lock.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .sequences import NonIntegralError, Provenance, SequenceTable

__all__ = [
    "factorial",
    "harmonic",
    "stirling_cycle",
    "HarmonicFactorialForm",
    "CLOSED_FORM_A045406",
    "CLOSED_FORM_A001711",
    "CLOSED_FORMS",
    "closed_form_a045406",
    "closed_form_a001711",
]

_harmonic_values: list[Fraction] = [Fraction(0)]
_harmonic_lock = threading.Lock()


def harmonic(m: int) -> Fraction:
    """Exact harmonic number H_m = 1 + 1/2 + ... + 1/m, with H_0 = 0."""
    if m < 0:
        raise ValueError(f"harmonic number undefined for negative index {m}")
    if m >= len(_harmonic_values):
        with _harmonic_lock:
            while len(_harmonic_values) <= m:
                k = len(_harmonic_values)
                _harmonic_values.append(_harmonic_values[-1] + Fraction(1, k))
    return _harmonic_values[m]


_stirling_rows: list[list[int]] = [[1]]
_stirling_lock = threading.Lock()


def stirling_cycle(n: int, m: int) -> int:
    """Unsigned Stirling number of the first kind c(n, m).

    Computed by the triangle recurrence c(n, m) = c(n-1, m-1) + (n-1)*c(n-1, m)
    with c(0, 0) = 1.  Out-of-triangle requests (m > n) return 0.
    """
    if n < 0 or m < 0:
        raise ValueError("stirling_cycle requires nonnegative arguments")
    if m > n:
        return 0
    if n >= len(_stirling_rows):
        with _stirling_lock:
            while len(_stirling_rows) <= n:
                k = len(_stirling_rows)
                prev = _stirling_rows[-1]
                row = [0] * (k + 1)
                for j in range(1, k + 1):
                    above = prev[j] if j < k else 0
                    row[j] = prev[j - 1] + (k - 1) * above
                _stirling_rows.append(row)
    return _stirling_rows[n][m]


@dataclass(frozen=True)
class HarmonicFactorialForm:
    """Closed form sign(n) * (2*H(n+shift) - 3) * (n+shift)! / divisor.

    ``sign(n)`` is (-1)^n when ``alternating`` else 1.  Both built-in cases
    fit this shape; the result must always be an exact integer.
    """

    shift: int
    divisor: int
    alternating: bool
    min_index: int

    def _signed(self, n: int, magnitude: Fraction) -> int:
        if magnitude.denominator != 1:
            raise NonIntegralError(
                f"closed form at n = {n} is the non-integer {magnitude}"
            )
        value = magnitude.numerator
        if self.alternating and n % 2:
            value = -value
        return value

    def value(self, n: int) -> int:
        if n < self.min_index:
            raise ValueError(f"closed form defined only for n >= {self.min_index}, got {n}")
        m = n + self.shift
        magnitude = (2 * harmonic(m) - 3) * factorial(m) / self.divisor
        return self._signed(n, magnitude)

    def table(self, lo: int, hi: int) -> SequenceTable:
        """Values for n = lo..hi with an incrementally maintained factorial."""
        if lo < self.min_index:
            raise ValueError(f"closed form defined only for n >= {self.min_index}, got {lo}")
        if hi < lo:
            raise ValueError(f"empty table range [{lo}, {hi}]")
        values = []
        fact = factorial(lo + self.shift)
        for n in range(lo, hi + 1):
            magnitude = (2 * harmonic(n + self.shift) - 3) * fact / self.divisor
            values.append(self._signed(n, magnitude))
            fact *= n + 1 + self.shift
        return SequenceTable(offset=lo, values=tuple(values), provenance=Provenance.CLOSED_FORM)


CLOSED_FORM_A045406 = HarmonicFactorialForm(shift=-3, divisor=1, alternating=True, min_index=3)
CLOSED_FORM_A001711 = HarmonicFactorialForm(shift=3, divisor=4, alternating=False, min_index=0)

CLOSED_FORMS: dict[str, HarmonicFactorialForm] = {
    "A045406": CLOSED_FORM_A045406,
    "A001711": CLOSED_FORM_A001711,
}


def closed_form_a045406(n: int) -> int:
    """(-1)^n * (2*H(n-3) - 3) * (n-3)! for n >= 3.

    The sequence itself starts at n = 2, but the closed form needs H(n-3)
    and (n-3)!, so a(2) must come from the e.g.f. or a b-file instead.
    """
    return CLOSED_FORM_A045406.value(n)


def closed_form_a001711(n: int) -> int:
    """(n+3)! * (2*H(n+3) - 3) / 4 for n >= 0."""
    return CLOSED_FORM_A001711.value(n)
