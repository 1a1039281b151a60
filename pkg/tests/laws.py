"""Seeded randomized law checks shared by the module tests and the
acceptance gate.  Each function raises AssertionError on the first violated
instance; callers choose the case count (the acceptance gate runs 500)."""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd
from pathlib import Path

from seqverify.bfile import BFile, parse_bfile, render_bfile
from seqverify.exact import Polynomial, RationalFunction
from seqverify.hexpr import HarmonicAffineExpr


def random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-99, 99), rng.randint(1, 99))


def random_polynomial(rng: random.Random, max_degree: int = 4) -> Polynomial:
    return Polynomial([random_fraction(rng) for _ in range(rng.randint(0, max_degree + 1))])


def random_rational_function(rng: random.Random) -> RationalFunction:
    numerator = Polynomial([rng.randint(-6, 6) for _ in range(rng.randint(1, 3))])
    denominator = Polynomial((1,))
    for _ in range(rng.randint(0, 2)):
        denominator = denominator * Polynomial((rng.randint(-6, 6), 1))
    return RationalFunction(numerator, denominator)


def random_harmonic_expr(rng: random.Random) -> HarmonicAffineExpr:
    terms = {}
    for _ in range(rng.randint(0, 3)):
        shift = rng.randint(-6, 3)
        coeff = random_rational_function(rng)
        if shift in terms:
            coeff = coeff + terms[shift]
        terms[shift] = coeff
    return HarmonicAffineExpr(terms, random_rational_function(rng))


def rational_field_laws(cases: int = 500, seed: int = 20260809) -> None:
    """Associativity, commutativity, distributivity, inverses, canonical form."""
    rng = random.Random(seed)
    for _ in range(cases):
        a, b, c = (random_fraction(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == Fraction(0, 1)
        if a != 0:
            assert a * (1 / a) == 1
        for value in (a + b, a * b, a - c):
            assert value.denominator > 0
            assert gcd(abs(value.numerator), value.denominator) == 1


def polynomial_ring_laws(cases: int = 500, seed: int = 20260810) -> None:
    """Ring axioms plus deg(p*q) = deg p + deg q for nonzero p, q."""
    rng = random.Random(seed)
    for _ in range(cases):
        p, q, r = (random_polynomial(rng) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r
        assert p + (-p) == Polynomial()
        if not p.is_zero and not q.is_zero:
            assert (p * q).degree == p.degree + q.degree


def normalize_idempotence_law(cases: int = 500, seed: int = 20260811) -> None:
    rng = random.Random(seed)
    for _ in range(cases):
        expr = random_harmonic_expr(rng)
        anchor = rng.randint(-6, 3)
        once = expr.normalize(anchor)
        assert once.normalize(anchor) == once
        default = expr.normalize()
        assert default.normalize() == default


def normalize_evaluate_homomorphism_law(cases: int = 500, seed: int = 20260812) -> None:
    """Shift normalization preserves the value at every pole-free integer.

    Coefficients built by random_rational_function only have integer roots in
    [-6, 6] and shifts lie in [-6, 3], so every n >= 30 is pole-free with
    nonnegative harmonic indices.
    """
    rng = random.Random(seed)
    for _ in range(cases):
        expr = random_harmonic_expr(rng)
        anchor = rng.randint(-6, 3)
        n = rng.randint(30, 60)
        assert expr.normalize(anchor).evaluate(n) == expr.evaluate(n)
        assert expr.normalize().evaluate(n) == expr.evaluate(n)


def bfile_round_trip_law(cases: int = 500, seed: int = 20260813) -> None:
    rng = random.Random(seed)
    for _ in range(cases):
        offset = rng.randint(-3, 10)
        length = rng.randint(1, 40)
        entries = tuple(
            (offset + i, rng.randint(-10**12, 10**12)) for i in range(length)
        )
        original = BFile(sequence_id=None, entries=entries)
        text = render_bfile(original)
        parsed = parse_bfile(text)
        assert parsed.entries == entries
        assert render_bfile(parsed) == text


def cli_exit_code_law(workdir: Path, cases: int = 500, seed: int = 20260814) -> None:
    """Exit 0 iff clean data, 1 on value corruption, 2 on malformed files.

    Only the exit codes are under test, so the commands run with their
    output redirected to a sink.
    """
    import contextlib
    import io

    from seqverify.bfile import bundled_bfile
    from seqverify.cli import main

    rng = random.Random(seed)
    clean = [(n, value) for n, value in bundled_bfile("A045406").entries if n <= 21]
    scenarios = ("clean", "corrupt-value", "gap", "malformed", "duplicate")
    for index in range(cases):
        scenario = rng.choice(scenarios)
        lines = [f"{n} {value}" for n, value in clean]
        if scenario == "corrupt-value":
            target = rng.randrange(len(clean))
            n, value = clean[target]
            lines[target] = f"{n} {value + rng.choice((-3, -1, 1, 2, 7))}"
            expected = 1
        elif scenario == "gap":
            del lines[rng.randrange(1, len(lines) - 1)]
            expected = 2
        elif scenario == "malformed":
            lines.insert(rng.randrange(len(lines)), "not a data line")
            expected = 2
        elif scenario == "duplicate":
            position = rng.randrange(1, len(lines))
            lines.insert(position, lines[position - 1])
            expected = 2
        else:
            expected = 0
        path = workdir / f"case_{index}.txt"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        sink = io.StringIO()
        with contextlib.redirect_stdout(sink), contextlib.redirect_stderr(sink):
            code = main(["verify", "A045406", "--bfile", str(path), "--to", "18"])
        assert code == expected, (
            f"scenario {scenario} (case {index}): expected exit {expected}, got {code}"
        )
