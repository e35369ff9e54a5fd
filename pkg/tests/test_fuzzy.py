import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from soritic import (
    InputError,
    implication,
    luk_eval,
    mismatch_report,
    negation,
    strong_conjunction,
    weak_conjunction,
)

unit = st.floats(0.0, 1.0, allow_nan=False)


class TestConnectives:
    def test_weak_and_strong_at_point_six(self):
        assert weak_conjunction(0.6, 0.6) == 0.6
        assert strong_conjunction(0.6, 0.6) == pytest.approx(0.2, abs=1e-15)

    def test_implication_with_true_consequent(self):
        for p in (0.0, 0.3, 0.99, 1.0):
            assert implication(p, 1.0) == 1.0

    def test_implication_pinned_value(self):
        assert implication(0.8, 0.3) == 0.5

    def test_double_negation_at_dyadics(self):
        for p in (0.0, 0.25, 0.5, 0.875, 1.0):
            assert negation(negation(p)) == p

    def test_luk_eval_dispatch(self):
        assert luk_eval("weak_conj", 0.2, 0.7) == 0.2
        assert luk_eval("strong_conj", 0.9, 0.9) == pytest.approx(0.8, abs=1e-15)
        assert luk_eval("implication", 0.8, 0.3) == 0.5
        assert luk_eval("negation", 0.2) == 0.8

    def test_luk_eval_missing_argument(self):
        with pytest.raises(InputError):
            luk_eval("weak_conj", 0.5)

    def test_luk_eval_unknown_connective(self):
        with pytest.raises(InputError):
            luk_eval("xor", 0.5, 0.5)

    def test_out_of_range_rejected(self):
        with pytest.raises(InputError):
            weak_conjunction(1.2, 0.5)
        with pytest.raises(InputError):
            negation(-0.1)


class TestMismatchReport:
    def test_boolean_endpoint_collapses_to_classical(self):
        report = mismatch_report(1.0, 1.0)
        assert not report.diverges
        assert report.strong == 1.0
        assert report.implication_value == 1.0

    def test_interior_point_diverges_on_conjunction(self):
        report = mismatch_report(0.6, 0.6)
        assert report.strong == pytest.approx(0.2, abs=1e-15)
        assert report.weak == 0.6
        assert report.conjunction_diverges
        assert not report.implication_diverges
        assert report.diverges

    def test_implication_divergence(self):
        report = mismatch_report(0.8, 0.3)
        assert report.implication_value == 0.5
        assert report.implication_diverges
        assert report.classical_implication

    def test_classical_side_is_always_definite(self):
        for p, q in [(0.0, 0.0), (0.37, 0.91), (1.0, 0.5)]:
            report = mismatch_report(p, q)
            assert report.classical_conjunction
            assert report.classical_implication


class TestProperties:
    def test_strong_conjunction_not_idempotent_in_the_interior(self):
        for i in range(1, 100):
            p = i / 100
            value = strong_conjunction(p, p)
            assert value == max(0.0, 2 * p - 1.0)
            assert value != p

    def test_weak_conjunction_idempotent(self):
        for i in range(0, 101):
            p = i / 100
            assert weak_conjunction(p, p) == p

    def test_negation_pairing(self):
        for i in range(0, 101):
            p = i / 100
            assert negation(p) == 1.0 - p

    @given(unit, unit)
    @settings(max_examples=200, deadline=None)
    def test_conjunctions_commutative(self, p, q):
        assert weak_conjunction(p, q) == weak_conjunction(q, p)
        assert strong_conjunction(p, q) == strong_conjunction(q, p)

    @given(unit, unit, unit)
    @settings(max_examples=200, deadline=None)
    def test_conjunctions_monotone(self, p, q, r):
        lo, hi = min(q, r), max(q, r)
        assert weak_conjunction(p, lo) <= weak_conjunction(p, hi)
        assert strong_conjunction(p, lo) <= strong_conjunction(p, hi)

    @given(unit, unit)
    @settings(max_examples=200, deadline=None)
    def test_implication_is_one_when_ordered(self, p, q):
        value = implication(p, q)
        assert 0.0 <= value <= 1.0
        if p <= q:
            assert value == 1.0
        else:
            assert value == pytest.approx(1.0 - p + q, abs=1e-15)
