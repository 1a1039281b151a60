"""Command-line front end.

Subcommands::

    verify <case>   run the four verification passes: closed form vs b-file,
                    e.g.f. expansion vs closed form, symbolic reduction, and
                    the numeric residual sweep
    expand <egf>    print n, a(n) rows from a built-in e.g.f. expansion
    reduce <case>   run just the symbolic reduction pass
    guess           search for recurrences from sequence terms

A case is either a built-in sequence id (A045406, A001711) or the path of a
case-registry file.  Human-readable reports go to stdout and diagnostics to
stderr; ``--json`` replaces the human report with one JSON document.  Exit
codes: 0 success, 1 verification failure, 2 usage or data error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .bfile import (
    BFile,
    BFileParseError,
    FetchError,
    SEQUENCE_ID_PATTERN,
    bundled_bfile,
    fetch_bfile,
    parse_bfile,
    render_bfile,
)
from .cases import CaseDefinition, builtin_case
from .recspec import RegistryError, load_case_file
from .recurrence import GuessError, residual, sweep
from .recurrence import guess as guess_recurrences
from .sequences import NonIntegralError, SequenceTable
from .series import EGF_BUILDERS, egf_coefficients

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

PASS_NAMES = ("closed-form", "egf", "reduce", "sweep")
EGF_CHECK_LIMIT = 200


class DataError(Exception):
    """Unusable input: unresolvable case, malformed file, missing data."""


@dataclass
class PassResult:
    name: str
    status: str  # pass | fail | skipped
    detail: str


@dataclass
class RunReport:
    command: str
    case: str
    passes: list[PassResult] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        bad = any(p.status == "fail" for p in self.passes)
        return EXIT_FAIL if bad else EXIT_OK

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "case": self.case,
            "passes": [
                {"name": p.name, "status": p.status, "detail": p.detail}
                for p in self.passes
            ],
            **self.extra,
            "exit_code": self.exit_code,
        }
        return json.dumps(payload, indent=2)

    def human_lines(self) -> list[str]:
        lines = [f"{p.name:<12} {p.status:<8} {p.detail}" for p in self.passes]
        done = sum(1 for p in self.passes if p.status == "pass")
        skipped = sum(1 for p in self.passes if p.status == "skipped")
        summary = f"{self.command} {self.case}: {done}/{len(self.passes) - skipped} passes ok"
        if skipped:
            summary += f" ({skipped} skipped)"
        lines.append(summary)
        return lines


def _emit(report: RunReport, as_json: bool) -> int:
    if as_json:
        print(report.to_json())
    else:
        for line in report.human_lines():
            print(line)
    return report.exit_code


def _resolve_case(spec: str) -> CaseDefinition:
    if SEQUENCE_ID_PATTERN.match(spec):
        try:
            return builtin_case(spec)
        except KeyError:
            raise DataError(
                f"no built-in case named {spec}; built-ins: A045406, A001711"
            ) from None
    path = Path(spec)
    if path.exists():
        try:
            return load_case_file(path)
        except RegistryError as exc:
            raise DataError(str(exc)) from exc
    raise DataError(f"case {spec!r} is neither a built-in id nor an existing registry file")


def parse_path_bfile(path: Path) -> BFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc
    sequence_id = None
    match = re.fullmatch(r"b(\d{6})\.txt", Path(path).name)
    if match:
        sequence_id = f"A{match.group(1)}"
    return parse_bfile(text, sequence_id=sequence_id)


def _load_data(case: CaseDefinition, args) -> BFile | None:
    if args.bfile is not None:
        try:
            return parse_path_bfile(args.bfile)
        except BFileParseError as exc:
            raise DataError(f"{args.bfile}: {exc}") from exc
    if args.fetch:
        print(f"fetching b-file for {case.sequence_id} ...", file=sys.stderr)
        try:
            return fetch_bfile(case.sequence_id)
        except (FetchError, BFileParseError, ValueError) as exc:
            raise DataError(f"fetch failed: {exc}") from exc
    try:
        return bundled_bfile(case.sequence_id)
    except KeyError:
        return None


# ----------------------------------------------------------------- passes


def _pass_closed_form(case: CaseDefinition, data: BFile | None) -> PassResult:
    name = "closed-form"
    if case.closed_form is None:
        return PassResult(name, "skipped", "case defines no closed form")
    if data is None:
        return PassResult(name, "skipped", "no sequence data (use --bfile or --fetch)")
    lo = max(case.closed_form.min_index, data.start)
    hi = data.end
    if hi < lo:
        return PassResult(
            name, "skipped",
            f"b-file range [{data.start}, {data.end}] is below n = {case.closed_form.min_index}",
        )
    table = case.closed_form.table(lo, hi)
    mismatches = [
        (n, value, table[n]) for n, value in data.entries if n >= lo and value != table[n]
    ]
    if mismatches:
        n, filed, computed = mismatches[0]
        more = f" (and {len(mismatches) - 1} more)" if len(mismatches) > 1 else ""
        return PassResult(
            name, "fail",
            f"mismatch at n = {n}: closed form gives {computed}, b-file has {filed}{more}",
        )
    return PassResult(
        name, "pass", f"closed form matches b-file for n = {lo}..{hi} ({hi - lo + 1} values)"
    )


def _pass_egf(case: CaseDefinition, data: BFile | None, sweep_hi: int) -> PassResult:
    name = "egf"
    if case.egf is None:
        return PassResult(name, "skipped", "no e.g.f. available for this case")
    order = max(2, min(EGF_CHECK_LIMIT, sweep_hi))
    try:
        table = egf_coefficients(case.egf(order))
    except (ValueError, NonIntegralError) as exc:
        return PassResult(name, "fail", f"e.g.f. expansion failed: {exc}")

    closed = case.closed_form
    data_table = data.to_table() if data is not None else None
    checked_closed: list[int] = []
    checked_data: list[int] = []
    for n in table.indices():
        expanded = table[n]
        if closed is not None and n >= closed.min_index:
            if expanded != closed.value(n):
                return PassResult(
                    name, "fail",
                    f"mismatch at n = {n}: e.g.f. gives {expanded}, closed form {closed.value(n)}",
                )
            checked_closed.append(n)
        elif data_table is not None and data_table.covers(n, n):
            if expanded != data_table[n]:
                return PassResult(
                    name, "fail",
                    f"mismatch at n = {n}: e.g.f. gives {expanded}, b-file has {data_table[n]}",
                )
            checked_data.append(n)
    if not checked_closed and not checked_data:
        return PassResult(name, "skipped", "nothing to compare the e.g.f. against")
    detail = []
    if checked_closed:
        detail.append(
            f"matches closed form for n = {checked_closed[0]}..{checked_closed[-1]}"
        )
    if checked_data:
        detail.append(
            "a(" + ", ".join(str(n) for n in checked_data) + ") checked against b-file"
        )
    return PassResult(name, "pass", "; ".join(detail))


def _pass_reduce(case: CaseDefinition) -> PassResult:
    name = "reduce"
    if case.reduction_expr is None:
        return PassResult(name, "skipped", "case defines no reduction expression")
    alpha, beta = case.reduction_expr.reduce(case.reduction_anchor)
    expected = f"expected alpha = {case.expected_alpha}, beta = {case.expected_beta}"
    computed = f"alpha = {alpha}, beta = {beta}"
    if alpha == case.expected_alpha and beta == case.expected_beta:
        return PassResult(name, "pass", f"{computed} ({expected})")
    return PassResult(name, "fail", f"{computed} ({expected})")


def _sweep_table(case: CaseDefinition, data: BFile | None, lo: int, hi: int) -> SequenceTable:
    rec = case.recurrence
    needed_lo = lo - rec.order
    closed = case.closed_form
    if closed is not None and needed_lo >= closed.min_index:
        return closed.table(needed_lo, hi)
    if data is not None:
        table = data.to_table()
        if table.covers(needed_lo, hi):
            return table
    raise DataError(
        f"no value source covers indices {needed_lo}..{hi} needed for the sweep "
        "(supply --bfile data or adjust --from/--to)"
    )


def _pass_sweep(case: CaseDefinition, data: BFile | None, lo: int, hi: int) -> PassResult:
    name = "sweep"
    rec = case.recurrence
    if lo > hi:
        return PassResult(name, "pass", f"empty range [{lo}, {hi}]: nothing to check")
    table = _sweep_table(case, data, lo, hi)
    report = sweep(rec, table, lo, hi)
    info = ""
    if lo == rec.valid_from and data is not None:
        before = data.to_table()
        if before.covers(lo - 1 - rec.order, lo - 1):
            value = residual(rec, before, lo - 1)
            info = (
                f"; residual at n = {lo - 1} is {value} "
                f"(informational, below from = {rec.valid_from})"
            )
    if report.ok:
        return PassResult(
            name, "pass",
            f"residual = 0 for all n in [{lo}, {hi}] "
            f"({report.count} values, {report.elapsed:.2f} s){info}",
        )
    n, value = report.failures[0]
    more = f" (and {len(report.failures) - 1} more)" if len(report.failures) > 1 else ""
    return PassResult(name, "fail", f"residual at n = {n} is {value}{more}{info}")


# ------------------------------------------------------------- subcommands


def cmd_verify(args) -> int:
    case = _resolve_case(args.case)
    data = _load_data(case, args)
    lo = args.sweep_from if args.sweep_from is not None else case.check_range[0]
    hi = args.sweep_to if args.sweep_to is not None else case.check_range[1]
    if lo < case.recurrence.valid_from:
        raise DataError(
            f"--from {lo} is below the recurrence's validity threshold "
            f"(from = {case.recurrence.valid_from})"
        )
    report = RunReport(command="verify", case=case.sequence_id)
    report.passes.append(_pass_closed_form(case, data))
    report.passes.append(_pass_egf(case, data, hi))
    report.passes.append(_pass_reduce(case))
    report.passes.append(_pass_sweep(case, data, lo, hi))
    return _emit(report, args.as_json)


def cmd_expand(args) -> int:
    builder = EGF_BUILDERS.get(args.egf)
    if builder is None:
        raise DataError(f"unknown e.g.f. {args.egf!r}; built-ins: {sorted(EGF_BUILDERS)}")
    try:
        series = builder(args.terms)
    except ValueError as exc:
        raise DataError(f"--terms {args.terms}: {exc}") from exc
    try:
        table = egf_coefficients(series)
    except NonIntegralError as exc:
        raise DataError(str(exc)) from exc
    for n, value in table.items():
        print(f"{n} {value}")
    if args.bfile_out is not None:
        sequence_id = args.egf if SEQUENCE_ID_PATTERN.match(args.egf) else None
        rendered = render_bfile(BFile(sequence_id=sequence_id, entries=tuple(table.items())))
        Path(args.bfile_out).write_text(rendered, encoding="utf-8")
        print(f"wrote {args.bfile_out}", file=sys.stderr)
    return EXIT_OK


def cmd_reduce(args) -> int:
    case = _resolve_case(args.case)
    if case.reduction_expr is None:
        raise DataError(f"case {case.sequence_id} defines no reduction expectation")
    normalized = case.reduction_expr.normalize(case.reduction_anchor)
    result = _pass_reduce(case)
    report = RunReport(command="reduce", case=case.sequence_id, passes=[result])
    alpha, beta = case.reduction_expr.reduce(case.reduction_anchor)
    report.extra = {
        "expression": str(case.reduction_expr),
        "normalized": str(normalized),
        "alpha": str(alpha),
        "beta": str(beta),
        "expected_alpha": str(case.expected_alpha),
        "expected_beta": str(case.expected_beta),
    }
    if args.as_json:
        print(report.to_json())
    else:
        print(f"expression: {case.reduction_expr}")
        print(f"normalized: {normalized}")
        for line in report.human_lines():
            print(line)
    return report.exit_code


def _guess_source(args) -> tuple[str, SequenceTable, CaseDefinition | None]:
    if args.bfile is not None:
        data = parse_path_bfile(args.bfile)
        label = data.sequence_id or str(args.bfile)
        return label, data.to_table(), None
    case = _resolve_case(args.case)
    try:
        data = bundled_bfile(case.sequence_id)
    except KeyError:
        raise DataError(
            f"case {case.sequence_id} has no bundled terms; supply --bfile"
        ) from None
    return case.sequence_id, data.to_table(), case


def cmd_guess(args) -> int:
    label, table, case = _guess_source(args)
    if args.terms is not None:
        if args.terms < 1:
            raise DataError("--terms must be positive")
        values = table.values[: args.terms]
        table = SequenceTable(offset=table.offset, values=values, provenance=table.provenance)
    try:
        found = guess_recurrences(table, order=args.order, degree=args.degree)
    except (GuessError, ValueError) as exc:
        raise DataError(str(exc)) from exc

    details: list[str] = []
    status = "pass"
    for rec in found:
        line = rec.spec_string()
        if args.verify_range is not None:
            if case is None or case.closed_form is None:
                raise DataError("--verify-range needs a case with a closed form")
            closed = case.closed_form
            lo = max(rec.valid_from, closed.min_index + rec.order)
            extended = closed.table(lo - rec.order, args.verify_range)
            result = sweep(rec, extended, lo, args.verify_range)
            if result.ok:
                line += f"  [residual = 0 for n = {lo}..{args.verify_range}]"
            else:
                bad_n, bad_value = result.failures[0]
                line += f"  [extended check FAILED at n = {bad_n}: residual {bad_value}]"
                status = "fail"
        details.append(line)

    report = RunReport(command="guess", case=label)
    if found:
        detail = f"{len(found)} recurrence(s) found, re-verified on all supplied terms"
    else:
        detail = (
            f"no recurrence of order {args.order}, degree {args.degree} fits the "
            f"{len(table)} supplied terms"
        )
    report.passes.append(PassResult("guess", status, detail))
    report.extra = {"recurrences": [rec.spec_string() for rec in found]}
    if args.as_json:
        print(report.to_json())
    else:
        for line in details:
            print(line)
        for line in report.human_lines():
            print(line)
    return report.exit_code


# ------------------------------------------------------------------ main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqverify",
        description="Exact-arithmetic verification of integer-sequence closed forms, "
        "e.g.f.s, and P-recursive recurrences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the four verification passes for a case")
    verify.add_argument("case", help="built-in id (A045406, A001711) or registry file path")
    verify.add_argument("--from", dest="sweep_from", type=int, metavar="N",
                        help="override the sweep lower bound")
    verify.add_argument("--to", dest="sweep_to", type=int, metavar="N",
                        help="override the sweep upper bound")
    verify.add_argument("--bfile", type=Path, metavar="PATH", help="local b-file to verify against")
    verify.add_argument("--fetch", action="store_true",
                        help="fetch the b-file over the network (cached; see OEIS_BASE_URL)")
    verify.add_argument("--json", dest="as_json", action="store_true",
                        help="emit the report as a single JSON document")

    expand = sub.add_parser("expand", help="expand a built-in e.g.f. into sequence values")
    expand.add_argument("egf", help=f"e.g.f. name, one of {sorted(EGF_BUILDERS)}")
    expand.add_argument("--terms", type=int, required=True, metavar="N",
                        help="expand up to index N (inclusive)")
    expand.add_argument("--bfile-out", dest="bfile_out", type=Path, metavar="PATH",
                        help="also write the values as a b-file")

    reduce_cmd = sub.add_parser("reduce", help="run the symbolic reduction for a case")
    reduce_cmd.add_argument("case")
    reduce_cmd.add_argument("--json", dest="as_json", action="store_true")

    guess_cmd = sub.add_parser("guess", help="guess recurrences from sequence terms")
    source = guess_cmd.add_mutually_exclusive_group(required=True)
    source.add_argument("--case", help="use the bundled terms of a built-in case")
    source.add_argument("--bfile", type=Path, metavar="PATH", help="read terms from a b-file")
    guess_cmd.add_argument("--order", type=int, required=True)
    guess_cmd.add_argument("--degree", type=int, required=True)
    guess_cmd.add_argument("--terms", type=int, default=None, metavar="N",
                           help="use only the first N supplied terms")
    guess_cmd.add_argument("--verify-range", dest="verify_range", type=int, metavar="N",
                           help="re-check candidates against the closed form up to N")
    guess_cmd.add_argument("--json", dest="as_json", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    commands = {
        "verify": cmd_verify,
        "expand": cmd_expand,
        "reduce": cmd_reduce,
        "guess": cmd_guess,
    }
    try:
        return commands[args.command](args)
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
