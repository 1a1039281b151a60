"""Built-in verification cases and the case-definition record.

A :class:`CaseDefinition` ties together everything the verifier needs for
one sequence: the closed form, the optional e.g.f. builder, the recurrence,
the harmonic-affine expression whose reduction certifies the recurrence,
the expected (alpha, beta) pair, and the numeric check range.

The reduction expression is the recurrence's left-hand side after
substituting the closed form and dividing out the common sign and factorial
prefactor.  That prefactor step is ordinary factorial-quotient algebra, done
once by hand per case and recorded here; the expression ring then reduces
the rest mechanically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .exact import Polynomial, RationalFunction
from .hexpr import HarmonicAffineExpr, harmonic_term
from .recurrence import PRecurrence
from .series import TruncatedSeries, EGF_BUILDERS
from .special import CLOSED_FORMS, HarmonicFactorialForm

__all__ = ["CaseDefinition", "builtin_cases", "builtin_case", "h_affine"]


def h_affine(shift: int) -> HarmonicAffineExpr:
    """The combination 2*H[n+shift] - 3 that both built-in closed forms carry."""
    return harmonic_term(shift, 2).plus_remainder(-3)


@dataclass(frozen=True)
class CaseDefinition:
    sequence_id: str
    recurrence: PRecurrence
    closed_form: HarmonicFactorialForm | None = None
    egf: Callable[[int], TruncatedSeries] | None = None
    reduction_expr: HarmonicAffineExpr | None = None
    reduction_anchor: int | None = None
    expected_alpha: RationalFunction = RationalFunction(0)
    expected_beta: RationalFunction = RationalFunction(0)
    check_range: tuple[int, int] = (0, 0)


def _case_a045406() -> CaseDefinition:
    n = Polynomial.variable()
    recurrence = PRecurrence((1, 2 * n - 7, (n - 4) ** 2), valid_from=5)
    # LHS with the closed form substituted, after the common factor
    # (-1)^n * (n-5)! * (n-4) is divided out.
    expr = (
        h_affine(-3).scaled(n - 3)
        + h_affine(-4).scaled(-(2 * n - 7))
        + h_affine(-5).scaled(n - 4)
    )
    return CaseDefinition(
        sequence_id="A045406",
        recurrence=recurrence,
        closed_form=CLOSED_FORMS["A045406"],
        egf=EGF_BUILDERS["A045406"],
        reduction_expr=expr,
        reduction_anchor=-4,
        check_range=(5, 5000),
    )


def _case_a001711() -> CaseDefinition:
    n = Polynomial.variable()
    recurrence = PRecurrence((1, -(2 * n + 5), (n + 2) ** 2), valid_from=2)
    # Same construction; here the common factor is (n+1)! * (n+2) / 4 and
    # every sign is positive.
    expr = (
        h_affine(3).scaled(n + 3)
        + h_affine(2).scaled(-(2 * n + 5))
        + h_affine(1).scaled(n + 2)
    )
    return CaseDefinition(
        sequence_id="A001711",
        recurrence=recurrence,
        closed_form=CLOSED_FORMS["A001711"],
        egf=None,
        reduction_expr=expr,
        reduction_anchor=2,
        check_range=(2, 2000),
    )


def builtin_cases() -> list[CaseDefinition]:
    """The two fully populated built-in cases."""
    return [_case_a045406(), _case_a001711()]


def builtin_case(sequence_id: str) -> CaseDefinition:
    for case in builtin_cases():
        if case.sequence_id == sequence_id:
            return case
    raise KeyError(f"no built-in case for {sequence_id}")
