from fractions import Fraction

import pytest

from seqverify.cases import builtin_case
from seqverify.exact import Polynomial
from seqverify.recurrence import GuessError, PRecurrence, guess, residual, unfold
from seqverify.sequences import Provenance, SequenceTable
from seqverify.series import egf_a045406, egf_coefficients

n = Polynomial.variable()


def a045406_terms(count):
    table = egf_coefficients(egf_a045406(count + 1))
    return SequenceTable(offset=2, values=table.values[:count], provenance=Provenance.EGF)


def a001711_terms(count):
    return builtin_case("A001711").closed_form.table(0, count - 1)


def fraction_kernel_is_trivial(rows):
    """Independent oracle: full-system Gaussian elimination over Fraction."""
    m = [[Fraction(x) for x in row] for row in rows]
    width = len(m[0])
    rank = 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            return False  # free column: nontrivial kernel
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank == width


class TestRecovery:
    def test_a045406_from_first_25_terms(self):
        found = guess(a045406_terms(25), order=2, degree=2)
        expected = builtin_case("A045406").recurrence
        assert expected in found
        assert found[0].valid_from == 5

    def test_a001711_from_first_25_terms(self):
        found = guess(a001711_terms(25), order=2, degree=2)
        expected = builtin_case("A001711").recurrence
        assert expected in found
        assert found[0].valid_from == 2

    def test_candidates_verify_on_all_supplied_terms(self):
        terms = a045406_terms(40)
        for rec in guess(terms, order=2, degree=2):
            start = max(rec.valid_from, terms.offset + rec.order)
            for k in range(start, terms.last_index + 1):
                assert residual(rec, terms, k) == 0

    def test_canonical_form_stable_across_term_counts(self):
        short = guess(a045406_terms(24), order=2, degree=2)
        long = guess(a045406_terms(59), order=2, degree=2)
        assert short == long

    def test_round_trip_through_unfold(self):
        terms = a045406_terms(30)
        rec = guess(terms, order=2, degree=2)[0]
        seeds = SequenceTable(offset=3, values=(terms[3], terms[4]),
                              provenance=Provenance.CLOSED_FORM)
        regenerated = unfold(rec, seeds, terms.last_index)
        for k in range(3, terms.last_index + 1):
            assert regenerated[k] == terms[k]

    def test_round_trip_through_unfold_twin(self):
        terms = a001711_terms(30)
        rec = guess(terms, order=2, degree=2)[0]
        seeds = SequenceTable(offset=0, values=(terms[0], terms[1]),
                              provenance=Provenance.CLOSED_FORM)
        regenerated = unfold(rec, seeds, terms.last_index)
        assert regenerated.values == terms.values

    def test_higher_order_window_also_finds_the_recurrence(self):
        # a degree-2 order-3 ansatz admits the order-2 recurrence as well
        found = guess(a045406_terms(40), order=3, degree=2)
        expected = builtin_case("A045406").recurrence
        assert any(
            rec == expected or all(residual(rec, a045406_terms(40), k) == 0
                                   for k in range(rec.valid_from + 1, 30))
            for rec in found
        )


class TestNoFit:
    def test_no_order_one_degree_one_recurrence(self):
        terms = a045406_terms(30)
        assert guess(terms, order=1, degree=1) == []

    def test_no_fit_confirmed_by_exhaustive_nullspace_oracle(self):
        # every full-window system over all 30 terms has only the trivial kernel
        terms = a045406_terms(30)
        rows = []
        for k in range(terms.offset + 1, terms.last_index + 1):
            rows.append([
                k ** j * terms[k - i] for i in range(2) for j in range(2)
            ])
        assert fraction_kernel_is_trivial(rows)


class TestInputPolicy:
    def test_insufficient_terms_error_states_minimum(self):
        # (2+1)*(2+1) + 2 + 5 = 16 terms minimum for order 2, degree 2
        terms = a045406_terms(15)
        with pytest.raises(GuessError) as err:
            guess(terms, order=2, degree=2)
        assert "16" in str(err.value)

    def test_sixteen_terms_accepted(self):
        found = guess(a045406_terms(16), order=2, degree=2)
        assert builtin_case("A045406").recurrence in found

    def test_all_zero_sequence_rejected(self):
        zeros = SequenceTable(offset=0, values=(0,) * 30, provenance=Provenance.BFILE)
        with pytest.raises(GuessError) as err:
            guess(zeros, order=2, degree=2)
        assert "zero" in str(err.value)

    def test_bad_shape_arguments(self):
        terms = a045406_terms(30)
        with pytest.raises(ValueError):
            guess(terms, order=0, degree=2)
        with pytest.raises(ValueError):
            guess(terms, order=2, degree=-1)


class TestAssembly:
    def test_factorials_guessed_as_order_one(self):
        import math

        facts = SequenceTable(offset=0, values=tuple(math.factorial(k) for k in range(20)),
                              provenance=Provenance.CLOSED_FORM)
        found = guess(facts, order=1, degree=1)
        assert PRecurrence((1, -n), valid_from=1) in found

    def test_shifted_relation_reduces_order(self):
        # rows satisfy a(n-1) = (n-1) a(n-2) wherever sampled; the assembled
        # candidate must come back shifted to the plain factorial recurrence
        import math

        facts = SequenceTable(offset=0, values=tuple(math.factorial(k) for k in range(24)),
                              provenance=Provenance.CLOSED_FORM)
        found = guess(facts, order=2, degree=1)
        plain = PRecurrence((1, -n), valid_from=1)
        assert any(rec == plain for rec in found) or all(
            all(residual(rec, facts, k) == 0 for k in range(rec.valid_from + 2, 20))
            for rec in found
        )
