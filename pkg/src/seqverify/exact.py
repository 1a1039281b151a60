"""Exact arithmetic kernel: rationals, dense polynomials, rational functions.

The scalar type everywhere is :class:`fractions.Fraction`, re-exported as
``Rational``: arbitrary precision and always canonical (positive denominator,
lowest terms, zero stored as 0/1).

:class:`Polynomial` is a dense univariate polynomial over the rationals in
the formal variable ``n``.  :class:`RationalFunction` is a quotient of two
polynomials kept reduced with a monic denominator, so equal values are
structurally identical and ``==`` is a sound equality test.

Every value in this module is immutable and every operation is a pure
function; instances can be shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Union

__all__ = [
    "Rational",
    "Polynomial",
    "RationalFunction",
    "PoleError",
    "polygcd",
    "rational_content",
]

Rational = Fraction

Scalar = Union[int, Fraction]


class PoleError(ArithmeticError):
    """Evaluation of a rational function at a root of its denominator."""

    def __init__(self, point: Scalar):
        super().__init__(f"pole at n = {point}")
        self.point = point


def _scalar(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def rational_content(values: Iterable[Fraction]) -> Fraction:
    """Positive rational c such that dividing the values by c leaves coprime
    integers; 0 when every value is zero."""
    nonzero = [v for v in values if v != 0]
    if not nonzero:
        return Fraction(0)
    common_den = lcm(*(v.denominator for v in nonzero))
    nums = [v.numerator * (common_den // v.denominator) for v in nonzero]
    return Fraction(gcd(*nums), common_den)


class Polynomial:
    """Dense univariate polynomial over ``Fraction`` in the variable ``n``.

    Coefficients are stored lowest degree first with no trailing zeros; the
    zero polynomial has an empty coefficient tuple and degree -1.  Degrees of
    products add exactly (no coefficient ever cancels silently).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        coeffs = [_scalar(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls((value,))

    @classmethod
    def variable(cls) -> "Polynomial":
        """The polynomial ``n``."""
        return cls((0, 1))

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading(self) -> Fraction:
        """Leading coefficient; 0 for the zero polynomial."""
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    @staticmethod
    def _coerce(value) -> "Polynomial | None":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return Polynomial((value,))
        return None

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return Polynomial(merged)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self._coeffs))

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Polynomial((1,))
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, point: Scalar) -> Fraction:
        """Exact Horner evaluation."""
        x = _scalar(point)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other) -> tuple["Polynomial", "Polynomial"]:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        quotient = Polynomial()
        remainder = self
        d = other.degree
        lc = other.leading
        while not remainder.is_zero and remainder.degree >= d:
            shift = remainder.degree - d
            factor = remainder.leading / lc
            term = Polynomial([0] * shift + [factor])
            quotient = quotient + term
            remainder = remainder - term * other
        return quotient, remainder

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Polynomial":
        """Quotient when the division is exact; raises otherwise."""
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero:
            raise ValueError(f"{other} does not divide {self} exactly")
        return quotient

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise ValueError("the zero polynomial has no monic form")
        return self * (1 / self.leading)

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer
        coefficients; 0 for the zero polynomial."""
        return rational_content(self._coeffs)

    def shifted(self, k: int) -> "Polynomial":
        """The composition p(n + k)."""
        base = Polynomial((k, 1))
        result = Polynomial()
        for c in reversed(self._coeffs):
            result = result * base + c
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(("Polynomial", self._coeffs))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self._coeffs[power]
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                var = "n" if power == 1 else f"n^{power}"
                body = var if magnitude == 1 else f"{magnitude}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial('{self}')"


def polygcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor by the Euclidean algorithm.

    Degrees in this toolkit stay tiny, so the plain remainder sequence over
    exact rationals is the clearest correct choice.
    """
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


class RationalFunction:
    """Reduced quotient of two polynomials with a monic denominator.

    The canonical form (coprime numerator/denominator, monic denominator)
    makes structural equality coincide with mathematical equality.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, numerator=0, denominator=1):
        num = Polynomial._coerce(numerator)
        den = Polynomial._coerce(denominator)
        if num is None or den is None:
            raise TypeError("numerator/denominator must be Polynomial, int, or Fraction")
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = Polynomial(), Polynomial((1,))
        else:
            common = polygcd(num, den)
            num = num.exact_div(common)
            den = den.exact_div(common)
            scale = 1 / den.leading
            num = num * scale
            den = den * scale
        self._num = num
        self._den = den

    @property
    def numerator(self) -> Polynomial:
        return self._num

    @property
    def denominator(self) -> Polynomial:
        return self._den

    @property
    def is_zero(self) -> bool:
        return self._num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self._den.degree == 0

    @staticmethod
    def _coerce(value) -> "RationalFunction | None":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, (Polynomial, int, Fraction)):
            return RationalFunction(value)
        return None

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self._num * other._den + other._num * self._den,
            self._den * other._den,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self._num, self._den)

    def __sub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __call__(self, point: Scalar) -> Fraction:
        """Exact evaluation; raises :class:`PoleError` at denominator roots."""
        if self._den(point) == 0:
            raise PoleError(point)
        return self._num(point) / self._den(point)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash(("RationalFunction", self._num, self._den))

    def __str__(self) -> str:
        if self._den == Polynomial((1,)):
            return str(self._num)
        return f"({self._num})/({self._den})"

    def __repr__(self) -> str:
        return f"RationalFunction('{self}')"
