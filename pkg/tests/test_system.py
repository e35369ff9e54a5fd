import random

import pytest

from soritic import (
    FrechetSpace,
    InputError,
    NoChainError,
    ResponseSystem,
    StaleReportError,
    assert_no_sorites,
    assert_tolerant_cover,
    check_tolerance,
    derive_soritical_contradiction,
    enumerate_minimal_covers,
    find_con_witness,
    line_space,
)
from helpers import random_system


def threshold_grid_system():
    space = line_space([0, 1, 2, 3, 4])
    pi = {p: ("r0" if p < 3 else "r1") for p in space.points}
    return ResponseSystem(space, ["r0", "r1"], pi)


def singleton_system(pi):
    points = sorted(pi)
    space = FrechetSpace(points, {p: [[p]] for p in points})
    return ResponseSystem(space, sorted(set(pi.values())), pi)


class TestResponseSystem:
    def test_pi_must_be_total(self):
        space = line_space([0, 1])
        with pytest.raises(InputError):
            ResponseSystem(space, ["r0"], {0: "r0"})

    def test_pi_values_must_be_declared(self):
        space = line_space([0, 1])
        with pytest.raises(InputError):
            ResponseSystem(space, ["r0"], {0: "r0", 1: "weird"})


class TestCheckTolerance:
    def test_constant_pi_holds_everywhere(self):
        space = line_space([0, 1, 2])
        sys_ = ResponseSystem(space, ["r0"], {p: "r0" for p in space.points})
        report = check_tolerance(sys_)
        assert report.holds
        for p in space.points:
            assert report.constant_indices[p] == tuple(
                range(len(space.vicinities_of(p)))
            )

    def test_threshold_grid_fails_at_straddling_points(self):
        report = check_tolerance(threshold_grid_system())
        assert not report.holds
        assert report.failing_points() == (2, 3)
        assert report.tolerant_cover is None

    def test_extra_singletons_restore_tolerance(self):
        points = [0, 1, 2, 3, 4]
        vicinities = {}
        for i, p in enumerate(points):
            lo, hi = max(0, i - 1), min(len(points), i + 2)
            vicinities[p] = [list(points[lo:hi]), [p]]
        space = FrechetSpace(points, vicinities)
        pi = {p: ("r0" if p < 3 else "r1") for p in points}
        report = check_tolerance(ResponseSystem(space, ["r0", "r1"], pi))
        assert report.holds
        cover = report.tolerant_cover.as_mapping()
        assert cover[2] == 1 and cover[3] == 1
        assert cover[0] == 0


class TestFindConWitness:
    def test_constant_pi_has_no_witness(self):
        space = line_space([0, 1, 2])
        sys_ = ResponseSystem(space, ["r0"], {p: "r0" for p in space.points})
        assert find_con_witness(sys_, 100) is None

    def test_disconnected_space_has_no_witness(self):
        sys_ = singleton_system({0: "r0", 1: "r1"})
        assert find_con_witness(sys_, 100) is None

    def test_threshold_grid_first_pair(self):
        assert find_con_witness(threshold_grid_system(), 100) == (0, 3)


class TestDeriveSoriticalContradiction:
    def test_forced_neighbor_cover_exposes_violation(self):
        sys_ = threshold_grid_system()
        cover = next(enumerate_minimal_covers(sys_.space, 100))
        report = assert_tolerant_cover(sys_, cover)
        chain = derive_soritical_contradiction(sys_, report, 0, 4)
        assert chain.points == (0, 2, 4)
        assert chain.responses == ("r0", "r0", "r1")
        assert chain.violating_link == 1
        assert chain.violated_vicinity == frozenset({2, 3, 4})
        values = {sys_.pi[p] for p in chain.violated_vicinity}
        assert len(values) > 1

    def test_singleton_cover_yields_no_chain(self):
        sys_ = singleton_system({0: "r0", 1: "r1"})
        cover = next(enumerate_minimal_covers(sys_.space, 100))
        report = assert_tolerant_cover(sys_, cover)
        with pytest.raises(NoChainError) as exc:
            derive_soritical_contradiction(sys_, report, 0, 1, cap=100)
        assert exc.value.globally_connected is False

    def test_equal_responses_violate_precondition(self):
        sys_ = threshold_grid_system()
        cover = next(enumerate_minimal_covers(sys_.space, 100))
        report = assert_tolerant_cover(sys_, cover)
        with pytest.raises(InputError):
            derive_soritical_contradiction(sys_, report, 0, 1)

    def test_stale_report_rejected(self):
        sys_ = threshold_grid_system()
        cover = next(enumerate_minimal_covers(sys_.space, 100))
        report = assert_tolerant_cover(sys_, cover)
        other = ResponseSystem(
            sys_.space, ["r0", "r1"], {p: "r1" for p in sys_.space.points}
        )
        with pytest.raises(StaleReportError):
            derive_soritical_contradiction(other, report, 0, 4)

    def test_report_without_cover_rejected(self):
        sys_ = threshold_grid_system()
        report = check_tolerance(sys_)
        assert report.tolerant_cover is None
        with pytest.raises(InputError):
            derive_soritical_contradiction(sys_, report, 0, 4)


class TestAssertNoSorites:
    def test_threshold_grid(self):
        verdict = assert_no_sorites(threshold_grid_system(), 100)
        assert verdict.kind == "tolerance_fails"
        assert verdict.tolerance_failures == (2, 3)
        assert verdict.con_witness == (0, 3)

    def test_constant_pi(self):
        space = line_space([0, 1, 2])
        sys_ = ResponseSystem(space, ["r0"], {p: "r0" for p in space.points})
        assert assert_no_sorites(sys_, 100).kind == "con_fails"

    def test_nonconstant_on_singletons(self):
        verdict = assert_no_sorites(singleton_system({0: "r0", 1: "r1"}), 100)
        assert verdict.kind == "con_fails"

    def test_both_fail(self):
        # every vicinity of `a` mixes responses, yet each differing pair is
        # defeated by the cover picking a's other vicinity
        space = FrechetSpace(
            ["a", "b", "c"],
            {"a": [["a", "b"], ["a", "c"]], "b": [["b"]], "c": [["c"]]},
        )
        sys_ = ResponseSystem(
            space, ["r0", "r1"], {"a": "r0", "b": "r1", "c": "r1"}
        )
        verdict = assert_no_sorites(sys_, 100)
        assert verdict.kind == "both_fail"
        assert verdict.con_witness is None
        assert verdict.tolerance_failures == ("a",)


class TestImpossibility:
    def test_tolerance_and_connectedness_never_coincide(self):
        rng = random.Random(2001)
        for _ in range(200):
            sys_ = random_system(rng)
            report = check_tolerance(sys_)
            witness = find_con_witness(sys_, 10000)
            assert not (report.holds and witness is not None)

    def test_forced_contradictions_always_flag_a_mixed_vicinity(self):
        rng = random.Random(2002)
        flagged = 0
        for _ in range(200):
            sys_ = random_system(rng)
            witness = find_con_witness(sys_, 10000)
            if witness is None:
                continue
            cover = next(enumerate_minimal_covers(sys_.space, 10000))
            report = assert_tolerant_cover(sys_, cover)
            chain = derive_soritical_contradiction(sys_, report, *witness)
            assert chain.violating_link is not None
            assert len({sys_.pi[p] for p in chain.violated_vicinity}) > 1
            flagged += 1
        assert flagged > 10

    def test_verdicts_are_exhaustive_and_exclusive(self):
        rng = random.Random(2003)
        kinds = set()
        for _ in range(150):
            verdict = assert_no_sorites(random_system(rng, max_points=6), 10000)
            assert verdict.kind in ("tolerance_fails", "con_fails", "both_fail")
            if verdict.kind == "tolerance_fails":
                assert verdict.tolerance_failures and verdict.con_witness
            elif verdict.kind == "con_fails":
                assert verdict.con_witness is None
            else:
                assert verdict.tolerance_failures and verdict.con_witness is None
            kinds.add(verdict.kind)
        assert len(kinds) >= 2
