"""Two-response threshold rules on [0,1] and boundary estimation by probing.

A rule splits the unit interval at a boundary v, answering r0 below and r1
above; the boundary point itself goes to whichever side the rule declares.
Degenerate boundaries are pinned: v = 0 must answer r0 at 0, v = 1 must
answer r1 at 1, so both responses always occur.  The boundary of any oracle
realizing such a rule can be located to within 2^-n using exactly n probes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Protocol

from .errors import InputError

R0 = "r0"
R1 = "r1"


def _check_unit(x: float, what: str = "stimulus") -> float:
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise InputError(f"{what} {x!r} is outside [0, 1]")
    return x


@dataclass(frozen=True)
class ThresholdRule:
    """Boundary position plus the response assigned at the boundary itself.

    ``boundary_response == R1`` means the r1 region is the closed [v, 1];
    otherwise it is the open (v, 1].
    """

    v: float
    boundary_response: str

    def __post_init__(self):
        _check_unit(self.v, "boundary")
        if self.boundary_response not in (R0, R1):
            raise InputError(f"boundary response must be r0 or r1, got {self.boundary_response!r}")
        if self.v == 0.0 and self.boundary_response != R0:
            raise InputError("a boundary at 0 must answer r0 there")
        if self.v == 1.0 and self.boundary_response != R1:
            raise InputError("a boundary at 1 must answer r1 there")


def classify(rule: ThresholdRule, x: float) -> str:
    """Response of the rule at x."""
    x = _check_unit(x)
    if x > rule.v or (x == rule.v and rule.boundary_response == R1):
        return R1
    return R0


@dataclass(frozen=True)
class MonotoneViolation:
    """An r1-labeled stimulus sitting strictly below an r0-labeled one."""

    r1_stimulus: float
    r0_stimulus: float


def check_monotone_consistency(
    samples: Iterable[tuple[float, str]]
) -> MonotoneViolation | None:
    """None iff the labeled sample is consistent with some threshold rule.

    Returns the extremal witness (lowest r1 stimulus, highest r0 stimulus)
    when an r1 point lies strictly below an r0 point.
    """
    lowest_r1 = None
    highest_r0 = None
    for x, r in samples:
        if r == R1 and (lowest_r1 is None or x < lowest_r1):
            lowest_r1 = x
        elif r == R0 and (highest_r0 is None or x > highest_r0):
            highest_r0 = x
        elif r not in (R0, R1):
            raise InputError(f"unknown response label {r!r}")
    if lowest_r1 is not None and highest_r0 is not None and lowest_r1 < highest_r0:
        return MonotoneViolation(lowest_r1, highest_r0)
    return None


class ResponseOracle(Protocol):
    """Anything that answers r0/r1 queries deterministically per stimulus."""

    calls: int

    def query(self, x: float) -> str: ...


class RuleOracle:
    """Oracle backed by an in-process threshold rule, with call accounting."""

    def __init__(self, rule: ThresholdRule):
        self.rule = rule
        self.calls = 0

    def query(self, x: float) -> str:
        self.calls += 1
        return classify(self.rule, x)


class ReplayOracle:
    """Oracle that replays a recorded probe log.

    The log must cover every stimulus that will be queried; conflicting
    duplicate entries are rejected up front since a consistent responder
    cannot produce them.
    """

    def __init__(self, probes: Iterable[tuple[float, str]]):
        self.table: dict[float, str] = {}
        for x, r in probes:
            x = _check_unit(x, "probe")
            if r not in (R0, R1):
                raise InputError(f"unknown response label {r!r}")
            if x in self.table and self.table[x] != r:
                raise InputError(f"conflicting recorded responses for probe {x!r}")
            self.table[x] = r
        self.calls = 0

    def query(self, x: float) -> str:
        self.calls += 1
        try:
            return self.table[x]
        except KeyError:
            raise InputError(f"probe log has no entry for stimulus {x!r}") from None


@dataclass(frozen=True)
class BisectionTrace:
    """The approximation sequence q_0 .. q_n and its probe accounting.

    Every entry is a dyadic rational with denominator 2^k, so for n up to
    52 the arithmetic below is exact in double precision.
    """

    q: tuple[float, ...]
    oracle_calls: int
    n: int

    @property
    def estimate(self) -> float:
        return self.q[-1]


def estimate_boundary(oracle: ResponseOracle, n: int) -> BisectionTrace:
    """Approach the oracle's boundary from below, halving the gap each step.

    Starting from q_0 = 0, step k probes q_k + 2^-(k+1): an r1 answer keeps
    q where it is, an r0 answer advances it to the probe.  After n steps
    |q_n - v| <= 2^-n for either boundary convention, using exactly n
    probes.
    """
    if n < 0:
        raise InputError("precision exponent must be nonnegative")
    q = 0.0
    trace = [q]
    calls_before = getattr(oracle, "calls", 0)
    for k in range(n):
        probe = q + 2.0 ** -(k + 1)
        if oracle.query(probe) != R1:
            q = probe
        trace.append(q)
    calls = getattr(oracle, "calls", calls_before + n) - calls_before
    return BisectionTrace(tuple(trace), calls, n)


def stay_below_sequence(v: float, x0: float, k: int) -> list[Fraction]:
    """Strictly increasing points below v, each halving the remaining gap.

    The step from x is (v - x) / 2, a positive amount smaller than the gap,
    so no element of the sequence ever reaches v no matter how many terms
    are taken.  Elements are exact rationals: the gap shrinks below double
    resolution within a few dozen steps, and rounding would collapse the
    tail onto v itself, destroying the property the construction exists
    to exhibit.
    """
    v = _check_unit(v, "boundary")
    x0 = _check_unit(x0)
    if x0 >= v:
        raise InputError(f"starting point {x0!r} is not below the boundary {v!r}")
    if k < 1:
        raise InputError("at least one element must be requested")
    bound = Fraction(v)
    x = Fraction(x0)
    out = [x]
    for _ in range(k - 1):
        x = x + (bound - x) / 2
        out.append(x)
    return out


@dataclass(frozen=True)
class FiniteRuleDistribution:
    """Finitely many (v, boundary_response) atoms with sampling weights."""

    atoms: tuple[tuple[float, str, float], ...]

    def __post_init__(self):
        if not self.atoms:
            raise InputError("distribution has no atoms")
        total = 0.0
        for v, r, w in self.atoms:
            ThresholdRule(v, r)
            if w < 0:
                raise InputError("atom weights must be nonnegative")
            total += w
        if abs(total - 1.0) > 1e-12:
            raise InputError(f"atom weights sum to {total!r}, not 1")


@dataclass(frozen=True)
class UniformRuleDistribution:
    """v uniform on [0, 1] crossed with a Bernoulli boundary response.

    The degenerate boundaries carry no mass under the uniform draw; if the
    generator does land on 0, the boundary response is pinned to r0 as the
    rule type requires.
    """

    p_boundary_r1: float = 0.5

    def __post_init__(self):
        if not 0.0 <= self.p_boundary_r1 <= 1.0:
            raise InputError("boundary response probability must lie in [0, 1]")


RuleDistribution = FiniteRuleDistribution | UniformRuleDistribution


def sample_rule(dist: RuleDistribution, seed: int) -> ThresholdRule:
    """Draw one rule; the same seed always yields the same rule."""
    rng = random.Random(seed)
    if isinstance(dist, FiniteRuleDistribution):
        weights = [w for _, _, w in dist.atoms]
        v, r, _ = rng.choices(dist.atoms, weights=weights, k=1)[0]
        return ThresholdRule(v, r)
    if isinstance(dist, UniformRuleDistribution):
        v = rng.random()
        r = R1 if rng.random() < dist.p_boundary_r1 else R0
        if v == 0.0:
            r = R0
        return ThresholdRule(v, r)
    raise InputError(f"unknown rule distribution {dist!r}")
