"""Text formats used by the command-line front end.

This module keeps all parsing out of the math modules.  Three little
languages live here:

* polynomial / rational-function expressions in ``n`` with ``+ - * / ^``
  and parentheses (recurrence coefficients allow no ``/``), e.g.
  ``(n-4)^2`` or ``(2*n - 1)/(n^2 - n)``;
* the recurrence spec format ``p0 = 1; p1 = 2*n - 7; p2 = (n-4)^2; from = 5``;
* harmonic-affine expressions in the rendering emitted by
  :mod:`seqverify.hexpr`, e.g. ``(2) * H[n-4] + (-3)``;
* case-registry files: one ``key = value`` per line with ``#`` comments,
  mirroring :class:`seqverify.cases.CaseDefinition` for user-supplied cases.

Registry keys: ``id`` and ``recurrence`` are required; ``closed_form`` and
``egf`` name built-in evaluators; ``reduction``, ``anchor``,
``expect_alpha``, ``expect_beta`` configure the symbolic pass; ``check_from``
and ``check_to`` bound the numeric sweep (defaulting to the recurrence's
``from`` and 995 indices beyond it).
"""

from __future__ import annotations

import re
from pathlib import Path

from .cases import CaseDefinition
from .exact import Polynomial, RationalFunction
from .hexpr import HarmonicAffineExpr
from .recurrence import PRecurrence
from .series import EGF_BUILDERS
from .special import CLOSED_FORMS

__all__ = [
    "SpecSyntaxError",
    "RegistryError",
    "parse_polynomial",
    "parse_rational_function",
    "parse_harmonic_expr",
    "parse_recurrence_spec",
    "load_case_text",
    "load_case_file",
]


class SpecSyntaxError(ValueError):
    """Malformed expression or recurrence-spec text."""


class RegistryError(ValueError):
    """Malformed case-registry file."""


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens: list[tuple[str, str]] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            break
        pos = match.end()
        number, name, symbol = match.groups()
        if number is not None:
            tokens.append(("int", number))
        elif name is not None:
            tokens.append(("name", name))
        elif symbol.strip():
            if symbol not in "+-*/^()[]":
                raise SpecSyntaxError(f"unexpected character {symbol!r}")
            tokens.append(("sym", symbol))
    return tokens


class _ExprParser:
    """Recursive descent over harmonic-affine expressions.

    Scalar sub-languages are the same grammar with H terms (and optionally
    division) disallowed; every intermediate value is a
    :class:`HarmonicAffineExpr` so that one routine serves all three.
    """

    def __init__(self, text: str, *, allow_div: bool, allow_h: bool):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.allow_div = allow_div
        self.allow_h = allow_h

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        token = self.peek()
        if token is None:
            raise SpecSyntaxError("unexpected end of expression")
        self.pos += 1
        return token

    def expect(self, symbol: str) -> None:
        token = self.peek()
        if token != ("sym", symbol):
            got = token[1] if token else "end of expression"
            raise SpecSyntaxError(f"expected {symbol!r}, got {got!r}")
        self.pos += 1

    def parse(self) -> HarmonicAffineExpr:
        value = self.sum()
        if self.peek() is not None:
            raise SpecSyntaxError(f"trailing input starting at {self.peek()[1]!r}")
        return value

    def sum(self) -> HarmonicAffineExpr:
        value = self.product()
        while (token := self.peek()) in (("sym", "+"), ("sym", "-")):
            self.pos += 1
            rhs = self.product()
            value = value + rhs if token[1] == "+" else value - rhs

        return value

    def product(self) -> HarmonicAffineExpr:
        value = self.unary()
        while (token := self.peek()) in (("sym", "*"), ("sym", "/")):
            self.pos += 1
            rhs = self.unary()
            if token[1] == "*":
                value = self._multiply(value, rhs)
            else:
                if not self.allow_div:
                    raise SpecSyntaxError("division is not allowed in this context")
                value = self._divide(value, rhs)
        return value

    def unary(self) -> HarmonicAffineExpr:
        if self.peek() == ("sym", "-"):
            self.pos += 1
            return -self.unary()
        return self.power()

    def power(self) -> HarmonicAffineExpr:
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.pos += 1
            kind, text = self.take()
            if kind != "int":
                raise SpecSyntaxError(f"exponent must be a nonnegative integer, got {text!r}")
            exponent = int(text)
            coeff = self._scalar_of(base, "exponentiation")
            result = HarmonicAffineExpr(remainder=1)
            for _ in range(exponent):
                result = HarmonicAffineExpr(remainder=result.remainder * coeff)
            return result
        return base

    def atom(self) -> HarmonicAffineExpr:
        kind, text = self.take()
        if kind == "int":
            return HarmonicAffineExpr(remainder=int(text))
        if kind == "name":
            if text == "n":
                return HarmonicAffineExpr(remainder=RationalFunction(Polynomial.variable()))
            if text == "H" and self.allow_h:
                return self.h_term()
            raise SpecSyntaxError(f"unknown name {text!r}")
        if (kind, text) == ("sym", "("):
            value = self.sum()
            self.expect(")")
            return value
        raise SpecSyntaxError(f"unexpected token {text!r}")

    def h_term(self) -> HarmonicAffineExpr:
        self.expect("[")
        kind, text = self.take()
        if (kind, text) != ("name", "n"):
            raise SpecSyntaxError(f"harmonic index must start with 'n', got {text!r}")
        shift = 0
        token = self.peek()
        if token in (("sym", "+"), ("sym", "-")):
            self.pos += 1
            kind, text = self.take()
            if kind != "int":
                raise SpecSyntaxError(f"harmonic shift must be an integer, got {text!r}")
            shift = int(text) if token[1] == "+" else -int(text)
        self.expect("]")
        return HarmonicAffineExpr({shift: 1})

    @staticmethod
    def _scalar_of(value: HarmonicAffineExpr, operation: str) -> RationalFunction:
        if value.terms:
            raise SpecSyntaxError(f"{operation} of a harmonic term is not supported")
        return value.remainder

    @staticmethod
    def _multiply(a: HarmonicAffineExpr, b: HarmonicAffineExpr) -> HarmonicAffineExpr:
        if a.terms and b.terms:
            raise SpecSyntaxError("products of two harmonic terms are outside this ring")
        if b.terms:
            a, b = b, a
        return a.scaled(b.remainder)

    @staticmethod
    def _divide(a: HarmonicAffineExpr, b: HarmonicAffineExpr) -> HarmonicAffineExpr:
        if b.terms:
            raise SpecSyntaxError("division by a harmonic term is not supported")
        if b.remainder.is_zero:
            raise SpecSyntaxError("division by zero in expression")
        return a.scaled(RationalFunction(1) / b.remainder)


def parse_rational_function(text: str) -> RationalFunction:
    expr = _ExprParser(text, allow_div=True, allow_h=False).parse()
    return expr.remainder


def parse_polynomial(text: str) -> Polynomial:
    """Integer/rational-coefficient polynomial in ``n``; no division allowed."""
    expr = _ExprParser(text, allow_div=False, allow_h=False).parse()
    value = expr.remainder
    if value.denominator != Polynomial((1,)):
        raise SpecSyntaxError(f"{text!r} is not a polynomial")
    return value.numerator


def parse_harmonic_expr(text: str) -> HarmonicAffineExpr:
    return _ExprParser(text, allow_div=True, allow_h=True).parse()


def parse_recurrence_spec(text: str) -> PRecurrence:
    """Parse ``p0 = ...; p1 = ...; ...; from = ...`` into a canonical recurrence."""
    coeffs: dict[int, Polynomial] = {}
    valid_from: int | None = None
    for segment in text.split(";"):
        segment = segment.strip()
        if not segment:
            continue
        key, eq, value = segment.partition("=")
        if not eq:
            raise SpecSyntaxError(f"expected 'key = value' in segment {segment!r}")
        key = key.strip()
        value = value.strip()
        if key == "from":
            try:
                valid_from = int(value)
            except ValueError:
                raise SpecSyntaxError(f"'from' must be an integer, got {value!r}") from None
        elif re.fullmatch(r"p\d+", key):
            index = int(key[1:])
            if index in coeffs:
                raise SpecSyntaxError(f"coefficient {key} given twice")
            coeffs[index] = parse_polynomial(value)
        else:
            raise SpecSyntaxError(f"unknown key {key!r} in recurrence spec")
    if not coeffs:
        raise SpecSyntaxError("recurrence spec has no coefficients")
    order = max(coeffs)
    missing = [f"p{i}" for i in range(order + 1) if i not in coeffs]
    if missing:
        raise SpecSyntaxError(f"recurrence spec missing {', '.join(missing)}")
    if valid_from is None:
        raise SpecSyntaxError("recurrence spec missing 'from = <n0>'")
    try:
        return PRecurrence([coeffs[i] for i in range(order + 1)], valid_from=valid_from)
    except ValueError as exc:
        raise SpecSyntaxError(f"not a usable recurrence: {exc}") from exc


_ID_RE = re.compile(r"A\d{6}\Z")


def load_case_text(text: str, source: str = "<registry>") -> CaseDefinition:
    pairs: dict[str, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, eq, value = line.partition("=")
        if not eq:
            raise RegistryError(f"{source}:{line_no}: expected 'key = value', got {raw!r}")
        key = key.strip()
        value = value.strip()
        if key in pairs:
            raise RegistryError(f"{source}:{line_no}: key {key!r} given twice")
        pairs[key] = value

    known = {
        "id", "recurrence", "closed_form", "egf", "reduction", "anchor",
        "expect_alpha", "expect_beta", "check_from", "check_to",
    }
    unknown = set(pairs) - known
    if unknown:
        raise RegistryError(f"{source}: unknown keys {sorted(unknown)}")
    for required in ("id", "recurrence"):
        if required not in pairs:
            raise RegistryError(f"{source}: missing required key {required!r}")

    sequence_id = pairs["id"]
    if not _ID_RE.match(sequence_id):
        raise RegistryError(f"{source}: id {sequence_id!r} must be 'A' + 6 digits")

    try:
        recurrence = parse_recurrence_spec(pairs["recurrence"])
    except SpecSyntaxError as exc:
        raise RegistryError(f"{source}: bad recurrence: {exc}") from exc

    closed_form = None
    if "closed_form" in pairs:
        name = pairs["closed_form"]
        if name not in CLOSED_FORMS:
            raise RegistryError(
                f"{source}: unknown closed form {name!r}; built-ins: {sorted(CLOSED_FORMS)}"
            )
        closed_form = CLOSED_FORMS[name]

    egf = None
    if "egf" in pairs:
        name = pairs["egf"]
        if name not in EGF_BUILDERS:
            raise RegistryError(
                f"{source}: unknown e.g.f. {name!r}; built-ins: {sorted(EGF_BUILDERS)}"
            )
        egf = EGF_BUILDERS[name]

    reduction_expr = None
    if "reduction" in pairs:
        try:
            reduction_expr = parse_harmonic_expr(pairs["reduction"])
        except SpecSyntaxError as exc:
            raise RegistryError(f"{source}: bad reduction expression: {exc}") from exc

    def _int_key(key: str, default: int) -> int:
        if key not in pairs:
            return default
        try:
            return int(pairs[key])
        except ValueError:
            raise RegistryError(f"{source}: {key} must be an integer") from None

    def _rf_key(key: str) -> RationalFunction:
        if key not in pairs:
            return RationalFunction(0)
        try:
            return parse_rational_function(pairs[key])
        except SpecSyntaxError as exc:
            raise RegistryError(f"{source}: bad {key}: {exc}") from exc

    anchor = _int_key("anchor", 0) if "anchor" in pairs else None
    check_from = _int_key("check_from", recurrence.valid_from)
    check_to = _int_key("check_to", check_from + 995)

    return CaseDefinition(
        sequence_id=sequence_id,
        recurrence=recurrence,
        closed_form=closed_form,
        egf=egf,
        reduction_expr=reduction_expr,
        reduction_anchor=anchor,
        expected_alpha=_rf_key("expect_alpha"),
        expected_beta=_rf_key("expect_beta"),
        check_range=(check_from, check_to),
    )


def load_case_file(path: str | Path) -> CaseDefinition:
    path = Path(path)
    return load_case_text(path.read_text(encoding="utf-8"), source=str(path))
