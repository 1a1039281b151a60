"""Affine combinations of shifted harmonic numbers.

A :class:`HarmonicAffineExpr` is a finite sum

    sum over shifts s of  coeff_s(n) * H(n+s)   +   remainder(n)

where every ``coeff_s`` and the remainder are rational functions of ``n``.
The ring is closed under the telescoping rewrite H(m+1) - H(m) = 1/(m+1),
which :meth:`HarmonicAffineExpr.normalize` applies one step at a time to move
every term onto a single anchor shift.  After normalization the expression
reads ``alpha(n) * H(n+anchor) + beta(n)``; :meth:`reduce` returns that
(alpha, beta) pair.  An identity in this ring holds iff its reduction is
(0, 0), which is a purely structural test on canonical rational functions.

Rendering format (stable): terms are printed in decreasing shift order as
``(<coefficient>) * H[n<+/-><offset>]`` joined by `` + ``, followed by the
remainder as ``(<remainder>)`` when it is nonzero; the zero expression
prints as ``(0)``.  Example: ``(2) * H[n-4] + (-3)``.

Expressions are immutable and all operations are pure.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from .exact import PoleError, Polynomial, RationalFunction
from .special import harmonic

Coefficient = Union[int, Fraction, Polynomial, RationalFunction]

__all__ = ["HarmonicAffineExpr", "HarmonicEvalError", "harmonic_term", "shift_index_str"]


class HarmonicEvalError(ArithmeticError):
    """Evaluation hit a pole or a negative harmonic index; names the term."""


def shift_index_str(shift: int) -> str:
    """'n', 'n+2', 'n-4': the index notation used in renderings."""
    if shift == 0:
        return "n"
    return f"n+{shift}" if shift > 0 else f"n-{-shift}"


def _coerce(value: Coefficient) -> RationalFunction:
    result = RationalFunction._coerce(value)
    if result is None:
        raise TypeError(f"cannot use {type(value).__name__} as a coefficient")
    return result


class HarmonicAffineExpr:
    __slots__ = ("_terms", "_remainder")

    def __init__(self, terms: Mapping[int, Coefficient] | None = None,
                 remainder: Coefficient = 0):
        pruned: dict[int, RationalFunction] = {}
        for shift, coeff in (terms or {}).items():
            rf = _coerce(coeff)
            if not rf.is_zero:
                pruned[int(shift)] = rf
        self._terms = pruned
        self._remainder = _coerce(remainder)

    @classmethod
    def zero(cls) -> "HarmonicAffineExpr":
        return cls()

    @property
    def terms(self) -> dict[int, RationalFunction]:
        return dict(self._terms)

    @property
    def remainder(self) -> RationalFunction:
        return self._remainder

    @property
    def shifts(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    @property
    def is_zero(self) -> bool:
        return not self._terms and self._remainder.is_zero

    def __add__(self, other) -> "HarmonicAffineExpr":
        if not isinstance(other, HarmonicAffineExpr):
            return NotImplemented
        merged = dict(self._terms)
        for shift, coeff in other._terms.items():
            merged[shift] = merged.get(shift, RationalFunction(0)) + coeff
        return HarmonicAffineExpr(merged, self._remainder + other._remainder)

    def __neg__(self) -> "HarmonicAffineExpr":
        return HarmonicAffineExpr(
            {s: -c for s, c in self._terms.items()}, -self._remainder
        )

    def __sub__(self, other) -> "HarmonicAffineExpr":
        if not isinstance(other, HarmonicAffineExpr):
            return NotImplemented
        return self + (-other)

    def scaled(self, factor: Coefficient) -> "HarmonicAffineExpr":
        """Multiply every coefficient and the remainder by a rational function."""
        rf = _coerce(factor)
        return HarmonicAffineExpr(
            {s: c * rf for s, c in self._terms.items()}, self._remainder * rf
        )

    def __mul__(self, factor) -> "HarmonicAffineExpr":
        try:
            return self.scaled(factor)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def plus_remainder(self, value: Coefficient) -> "HarmonicAffineExpr":
        return HarmonicAffineExpr(self._terms, self._remainder + _coerce(value))

    def normalize(self, anchor: int | None = None) -> "HarmonicAffineExpr":
        """Rewrite every term onto one anchor shift.

        Each step is a single application of H(n+s) = H(n+s-1) + 1/(n+s)
        (or its upward mirror), folding the 1/(n+k) correction into the
        remainder.  The default anchor is the smallest shift present.  The
        result carries at most one term and evaluates identically to the
        input at every pole-free integer.
        """
        if not self._terms:
            return self
        if anchor is None:
            anchor = min(self._terms)
        var = Polynomial.variable()
        total = RationalFunction(0)
        remainder = self._remainder
        for shift in sorted(self._terms):
            coeff = self._terms[shift]
            s = shift
            while s > anchor:
                remainder = remainder + coeff * RationalFunction(1, var + s)
                s -= 1
            while s < anchor:
                remainder = remainder - coeff * RationalFunction(1, var + (s + 1))
                s += 1
            total = total + coeff
        return HarmonicAffineExpr({anchor: total}, remainder)

    def reduce(self, anchor: int | None = None) -> tuple[RationalFunction, RationalFunction]:
        """Normalize, then read off (alpha, beta) with the expression equal to
        alpha(n) * H(n+anchor) + beta(n)."""
        normalized = self.normalize(anchor)
        if not normalized._terms:
            return RationalFunction(0), normalized._remainder
        (coeff,) = normalized._terms.values()
        return coeff, normalized._remainder

    def evaluate(self, n: int) -> Fraction:
        """Exact value at integer n; every H index must be >= 0 and every
        coefficient pole-free at n."""
        try:
            value = self._remainder(n)
        except PoleError as exc:
            raise HarmonicEvalError(
                f"remainder ({self._remainder}) has a pole at n = {n}"
            ) from exc
        for shift in sorted(self._terms, reverse=True):
            coeff = self._terms[shift]
            index = n + shift
            label = f"({coeff}) * H[{shift_index_str(shift)}]"
            if index < 0:
                raise HarmonicEvalError(
                    f"term {label} needs H({index}) at n = {n}; harmonic numbers "
                    "with negative index are undefined here"
                )
            try:
                value += coeff(n) * harmonic(index)
            except PoleError as exc:
                raise HarmonicEvalError(f"term {label} has a pole at n = {n}") from exc
        return value

    def __eq__(self, other) -> bool:
        if not isinstance(other, HarmonicAffineExpr):
            return NotImplemented
        return self._terms == other._terms and self._remainder == other._remainder

    def __hash__(self):
        return hash(("HarmonicAffineExpr", tuple(sorted(self._terms.items())), self._remainder))

    def __str__(self) -> str:
        parts = [
            f"({self._terms[shift]}) * H[{shift_index_str(shift)}]"
            for shift in sorted(self._terms, reverse=True)
        ]
        if not self._remainder.is_zero or not parts:
            parts.append(f"({self._remainder})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"HarmonicAffineExpr('{self}')"


def harmonic_term(shift: int, coefficient: Coefficient = 1) -> HarmonicAffineExpr:
    """The expression coefficient * H[n+shift]."""
    return HarmonicAffineExpr({shift: coefficient})
