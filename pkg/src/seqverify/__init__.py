"""Exact-arithmetic verification toolkit for integer sequences.

Expands exponential generating functions over exact rationals, evaluates
harmonic-number closed forms, reduces recurrence left-hand sides in a
harmonic-affine expression ring, checks recurrence residuals over large
index ranges, and guesses P-recursive recurrences from terms.  Two fully
populated reference cases, OEIS A045406 and A001711, are built in.
"""

from .exact import PoleError, Polynomial, Rational, RationalFunction, polygcd
from .sequences import NonIntegralError, Provenance, SequenceRangeError, SequenceTable
from .series import TruncatedSeries, EGF_BUILDERS, egf_a045406, egf_coefficients, log1p_series
from .special import (
    CLOSED_FORMS,
    HarmonicFactorialForm,
    closed_form_a001711,
    closed_form_a045406,
    factorial,
    harmonic,
    stirling_cycle,
)
from .hexpr import HarmonicAffineExpr, HarmonicEvalError, harmonic_term
from .recurrence import (
    GuessError,
    LeadingRootError,
    PRecurrence,
    ResidualReport,
    guess,
    residual,
    sweep,
    unfold,
)
from .bfile import BFile, BFileParseError, FetchError, bundled_bfile, fetch_bfile, parse_bfile, render_bfile
from .cases import CaseDefinition, builtin_case, builtin_cases

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "Polynomial",
    "RationalFunction",
    "PoleError",
    "polygcd",
    "Provenance",
    "SequenceTable",
    "SequenceRangeError",
    "NonIntegralError",
    "TruncatedSeries",
    "log1p_series",
    "egf_a045406",
    "egf_coefficients",
    "EGF_BUILDERS",
    "harmonic",
    "factorial",
    "stirling_cycle",
    "HarmonicFactorialForm",
    "CLOSED_FORMS",
    "closed_form_a045406",
    "closed_form_a001711",
    "HarmonicAffineExpr",
    "HarmonicEvalError",
    "harmonic_term",
    "PRecurrence",
    "ResidualReport",
    "residual",
    "sweep",
    "unfold",
    "guess",
    "GuessError",
    "LeadingRootError",
    "BFile",
    "BFileParseError",
    "FetchError",
    "parse_bfile",
    "render_bfile",
    "bundled_bfile",
    "fetch_bfile",
    "CaseDefinition",
    "builtin_cases",
    "builtin_case",
]
