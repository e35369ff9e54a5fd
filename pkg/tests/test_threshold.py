import random
from fractions import Fraction

import pytest

from soritic import (
    FiniteRuleDistribution,
    InputError,
    R0,
    R1,
    ReplayOracle,
    ResponseSystem,
    RuleOracle,
    ThresholdRule,
    UniformRuleDistribution,
    assert_no_sorites,
    check_monotone_consistency,
    classify,
    estimate_boundary,
    line_space,
    sample_rule,
    stay_below_sequence,
)


class FractionOracle:
    """Exact-arithmetic oracle for rational boundaries; test-side ground truth."""

    def __init__(self, v: Fraction, closed: bool):
        self.v = v
        self.closed = closed
        self.calls = 0

    def query(self, x: float) -> str:
        self.calls += 1
        fx = Fraction(x)
        hit = fx >= self.v if self.closed else fx > self.v
        return R1 if hit else R0


class RecordingOracle:
    def __init__(self, inner):
        self.inner = inner
        self.probes = []
        self.calls = 0

    def query(self, x):
        self.calls += 1
        self.probes.append(x)
        return self.inner.query(x)


class TestClassify:
    def test_boundary_zero_is_pinned_to_r0(self):
        with pytest.raises(InputError):
            ThresholdRule(0.0, R1)
        rule = ThresholdRule(0.0, R0)
        assert classify(rule, 0.0) == R0
        assert classify(rule, 1e-9) == R1

    def test_boundary_one_is_pinned_to_r1(self):
        with pytest.raises(InputError):
            ThresholdRule(1.0, R0)
        rule = ThresholdRule(1.0, R1)
        assert classify(rule, 1.0) == R1
        assert classify(rule, 0.999999) == R0

    def test_closed_convention(self):
        rule = ThresholdRule(0.5, R1)
        assert classify(rule, 0.5) == R1
        assert classify(rule, 0.49) == R0

    def test_open_convention(self):
        rule = ThresholdRule(0.5, R0)
        assert classify(rule, 0.5) == R0
        assert classify(rule, 0.51) == R1

    def test_random_rules_never_break_monotonicity(self):
        rng = random.Random(31)
        for _ in range(100):
            rule = ThresholdRule(rng.random(), rng.choice((R0, R1)))
            samples = [(x, classify(rule, x)) for x in (rng.random() for _ in range(40))]
            assert check_monotone_consistency(samples) is None


class TestCheckMonotoneConsistency:
    def test_endpoints_are_consistent(self):
        assert check_monotone_consistency([(0.0, R0), (1.0, R1)]) is None

    def test_inverted_pair_reported(self):
        violation = check_monotone_consistency([(0.3, R1), (0.6, R0)])
        assert violation is not None
        assert (violation.r1_stimulus, violation.r0_stimulus) == (0.3, 0.6)

    def test_empty_sample_is_vacuously_consistent(self):
        assert check_monotone_consistency([]) is None


class TestEstimateBoundary:
    def test_boundary_zero_never_advances(self):
        oracle = RuleOracle(ThresholdRule(0.0, R0))
        trace = estimate_boundary(oracle, 10)
        assert trace.q == (0.0,) * 11
        assert trace.oracle_calls == 10

    def test_one_third_closed_hand_trace(self):
        oracle = RecordingOracle(RuleOracle(ThresholdRule(1 / 3, R1)))
        trace = estimate_boundary(oracle, 3)
        assert oracle.probes == [0.5, 0.25, 0.375]
        assert trace.q == (0.0, 0.0, 0.25, 0.25)
        assert abs(trace.estimate - 1 / 3) <= 2**-3

    def test_boundary_one_advances_every_step(self):
        oracle = RuleOracle(ThresholdRule(1.0, R1))
        trace = estimate_boundary(oracle, 8)
        assert trace.estimate == 1 - 2**-8
        assert abs(trace.estimate - 1.0) == 2**-8

    def test_trace_invariants_on_random_rules(self):
        rng = random.Random(32)
        for _ in range(50):
            v = rng.randrange(2**20) / 2**20
            rule = ThresholdRule(v, rng.choice((R0, R1)) if 0 < v < 1 else (R0 if v == 0 else R1))
            trace = estimate_boundary(RuleOracle(rule), 30)
            assert trace.q[0] == 0.0
            for k in range(30):
                assert trace.q[k + 1] - trace.q[k] in (0.0, 2.0 ** -(k + 1))
            assert trace.oracle_calls == 30

    def test_exact_bound_for_rational_boundaries_both_conventions(self):
        rng = random.Random(33)
        for _ in range(40):
            v = Fraction(rng.randrange(1, 999), 1000)
            for closed in (True, False):
                oracle = FractionOracle(v, closed)
                trace = estimate_boundary(oracle, 40)
                assert oracle.calls == 40
                assert abs(Fraction(trace.estimate) - v) <= Fraction(1, 2**40)

    def test_negative_precision_rejected(self):
        with pytest.raises(InputError):
            estimate_boundary(RuleOracle(ThresholdRule(0.5, R1)), -1)


class TestReplayOracle:
    def test_replays_recorded_probes(self):
        probes = [(0.5, R1), (0.25, R1), (0.125, R0), (0.1875, R0), (0.21875, R0)]
        trace = estimate_boundary(ReplayOracle(probes), 5)
        assert trace.estimate == 0.21875

    def test_conflicting_duplicates_rejected(self):
        with pytest.raises(InputError):
            ReplayOracle([(0.5, R1), (0.5, R0)])

    def test_unknown_probe_rejected(self):
        oracle = ReplayOracle([(0.5, R1)])
        with pytest.raises(InputError):
            estimate_boundary(oracle, 2)


class TestStayBelowSequence:
    def test_halving_from_zero(self):
        assert stay_below_sequence(1.0, 0.0, 4) == [0.0, 0.5, 0.75, 0.875]

    def test_single_element(self):
        assert stay_below_sequence(0.7, 0.2, 1) == [0.2]

    def test_never_reaches_boundary_even_close(self):
        seq = stay_below_sequence(0.5, 0.4999, 50)
        assert all(x < 0.5 for x in seq)
        assert all(a < b for a, b in zip(seq, seq[1:]))

    def test_strictly_increasing_below_v_property(self):
        rng = random.Random(34)
        for _ in range(50):
            v = rng.uniform(0.1, 1.0)
            x0 = rng.uniform(0, v * 0.99)
            seq = stay_below_sequence(v, x0, 20)
            assert all(a < b for a, b in zip(seq, seq[1:]))
            assert all(x < v for x in seq)

    def test_start_at_or_above_boundary_rejected(self):
        with pytest.raises(InputError):
            stay_below_sequence(0.5, 0.5, 3)


class TestSampleRule:
    def test_point_mass(self):
        dist = FiniteRuleDistribution(((0.5, R1, 1.0),))
        for seed in range(5):
            assert sample_rule(dist, seed) == ThresholdRule(0.5, R1)

    def test_seed_reproducibility(self):
        dist = UniformRuleDistribution()
        assert sample_rule(dist, 99) == sample_rule(dist, 99)
        assert sample_rule(dist, 99) != sample_rule(dist, 100)

    def test_stipulation_violating_atoms_rejected(self):
        with pytest.raises(InputError):
            FiniteRuleDistribution(((0.0, R1, 1.0),))
        with pytest.raises(InputError):
            FiniteRuleDistribution(((1.0, R0, 1.0),))

    def test_weights_must_sum_to_one(self):
        with pytest.raises(InputError):
            FiniteRuleDistribution(((0.5, R1, 0.4), (0.25, R0, 0.4)))

    def test_uniform_sampling_mean(self):
        dist = UniformRuleDistribution()
        vs = [sample_rule(dist, seed).v for seed in range(10000)]
        assert abs(sum(vs) / len(vs) - 0.5) < 0.02


class TestGridBridge:
    def test_discretized_rules_fail_tolerance_at_the_straddle(self):
        rng = random.Random(35)
        grid_points = [i / 10 for i in range(11)]
        for _ in range(20):
            v = rng.uniform(0.01, 0.99)
            rule = ThresholdRule(v, rng.choice((R0, R1)))
            labels = {x: classify(rule, x) for x in grid_points}
            space = line_space(grid_points)
            sys_ = ResponseSystem(space, [R0, R1], labels)
            verdict = assert_no_sorites(sys_, 100)
            assert verdict.kind == "tolerance_fails"
            flip = max(i for i, x in enumerate(grid_points) if labels[x] == R0)
            expected = {grid_points[flip], grid_points[flip + 1]}
            assert set(verdict.tolerance_failures) == expected
