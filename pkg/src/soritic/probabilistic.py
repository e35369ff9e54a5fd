"""Probabilistic response behavior: grids, simulation, estimation, mixtures.

When a responder is inconsistent, the thing that supervenes on the stimulus
is the probability of each response rather than the response itself.  This
module carries the finite machinery for that view: monotone probability
grids over [0,1], seeded Bernoulli simulation, frequency estimation with
Wilson intervals, the collapse of second-order response distributions into
first-order ones, and time-tagged probability tables folded into enlarged
stimulus sets.
"""

from __future__ import annotations

import bisect
import csv
import io
import math
import random
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import InputError
from .pretopology import FrechetSpace, MinimalCover, Point, Violation, require_valid
from .system import ResponseSystem, ToleranceReport, check_tolerance
from .threshold import R0, R1

# Two-sided 95% normal quantile used by the Wilson score interval.
_Z95 = 1.959963984540054


@dataclass(frozen=True)
class Distribution:
    """Probability weights over a finite set of response labels."""

    weights: dict[Hashable, float]

    def __post_init__(self):
        total = 0.0
        for label, w in self.weights.items():
            if w < 0:
                raise InputError(f"negative weight for {label!r}")
            total += w
        if abs(total - 1.0) > 1e-12:
            raise InputError(f"weights sum to {total!r}, not 1")

    def prob(self, event: Iterable[Hashable]) -> float:
        """Total weight of an event, i.e. a set of labels."""
        return sum(self.weights.get(label, 0.0) for label in set(event))

    def labels(self) -> tuple:
        return tuple(self.weights)


@dataclass(frozen=True)
class Mixture:
    """A finite second-order distribution: weighted first-order components."""

    components: tuple[Distribution, ...]
    mix_weights: tuple[float, ...]

    def __post_init__(self):
        if len(self.components) != len(self.mix_weights):
            raise InputError("component and weight counts differ")
        if not self.components:
            raise InputError("mixture has no components")
        total = 0.0
        for w in self.mix_weights:
            if w < 0:
                raise InputError("mixture weights must be nonnegative")
            total += w
        if abs(total - 1.0) > 1e-12:
            raise InputError(f"mixture weights sum to {total!r}, not 1")


def reduce_mixture(m: Mixture) -> Distribution:
    """Collapse a distribution over distributions into a single one.

    The reduced weight of each label is the mix-weighted sum of the
    component weights, so for every event E the reduced probability equals
    the mix-weighted sum of the component probabilities of E.  Drawing a
    component first and a response second is indistinguishable from drawing
    once from the result.
    """
    out: dict[Hashable, float] = {}
    for label in _union_labels(m.components):
        out[label] = sum(
            w * c.weights.get(label, 0.0)
            for c, w in zip(m.components, m.mix_weights)
        )
    return Distribution(out)


def _union_labels(components: Sequence[Distribution]) -> list:
    seen: dict[Hashable, None] = {}
    for c in components:
        for label in c.weights:
            seen.setdefault(label)
    return list(seen)


def verify_reduction_by_simulation(m: Mixture, seed: int, trials: int) -> float:
    """Max gap between two-stage sampling frequencies and the reduced weights."""
    if trials < 1:
        raise InputError("at least one trial is required")
    rng = random.Random(seed)
    reduced = reduce_mixture(m)
    labels = list(reduced.weights)
    counts = {label: 0 for label in labels}
    comp_cdf = _cumulative(m.mix_weights)
    label_cdfs = [
        _cumulative([c.weights.get(label, 0.0) for label in labels])
        for c in m.components
    ]
    for _ in range(trials):
        i = _pick(comp_cdf, rng.random())
        j = _pick(label_cdfs[i], rng.random())
        counts[labels[j]] += 1
    return max(
        abs(counts[label] / trials - reduced.weights[label]) for label in labels
    )


def _cumulative(weights: Sequence[float]) -> list[float]:
    acc = 0.0
    out = []
    for w in weights:
        acc += w
        out.append(acc)
    return out


def _pick(cdf: Sequence[float], u: float) -> int:
    for i, edge in enumerate(cdf):
        if u < edge:
            return i
    return len(cdf) - 1


class ZoraGrid:
    """Response probabilities sampled on a strictly increasing grid in [0,1].

    Construction enforces only structure (aligned lengths, ordered grid,
    probabilities in [0,1]).  The behavioral conditions, monotone p with
    both 0 and 1 attained, are reported by :func:`validate_zora` so that
    defective grids can still be examined.
    """

    def __init__(self, grid: Sequence[float], p: Sequence[float]):
        self.grid: tuple[float, ...] = tuple(float(x) for x in grid)
        self.p: tuple[float, ...] = tuple(float(x) for x in p)
        if not self.grid:
            raise InputError("grid is empty")
        if len(self.grid) != len(self.p):
            raise InputError("grid and probability lists have different lengths")
        for x in self.grid:
            if not 0.0 <= x <= 1.0:
                raise InputError(f"grid point {x!r} is outside [0, 1]")
        for i in range(1, len(self.grid)):
            if self.grid[i] <= self.grid[i - 1]:
                raise InputError(f"grid is not strictly increasing at index {i}")
        for q in self.p:
            if not 0.0 <= q <= 1.0:
                raise InputError(f"probability {q!r} is outside [0, 1]")
        self._index = {x: i for i, x in enumerate(self.grid)}

    def p_of(self, x: float) -> float:
        try:
            return self.p[self._index[x]]
        except KeyError:
            raise InputError(f"stimulus {x!r} is not on the grid") from None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ZoraGrid)
            and self.grid == other.grid
            and self.p == other.p
        )


def validate_zora(zg: ZoraGrid) -> list[Violation]:
    """Check that p is nondecreasing and attains both 0 and 1."""
    out: list[Violation] = []
    for i in range(1, len(zg.p)):
        if zg.p[i] < zg.p[i - 1]:
            out.append(
                Violation(zg.grid[i], i, f"p decreases at index {i}: {zg.p[i - 1]!r} -> {zg.p[i]!r}")
            )
    if min(zg.p) != 0.0:
        out.append(Violation(None, None, "p never attains 0"))
    if max(zg.p) != 1.0:
        out.append(Violation(None, None, "p never attains 1"))
    return out


class BernoulliSource:
    """Seeded stream of r0/r1 answers with per-stimulus response probability."""

    def __init__(self, p_of, seed: int):
        self._p_of = p_of
        self._rng = random.Random(seed)
        self.draws = 0

    def query(self, x: float) -> str:
        p = self._p_of(x)
        self.draws += 1
        return R1 if self._rng.random() < p else R0


def bernoulli_oracle(zg: ZoraGrid, seed: int) -> BernoulliSource:
    """Simulated responder for on-grid stimuli; off-grid queries are errors."""
    return BernoulliSource(zg.p_of, seed)


def interpolating_bernoulli_oracle(zg: ZoraGrid, seed: int) -> BernoulliSource:
    """Convenience extension: off-grid stimuli get linearly interpolated p.

    The grid itself never defines these values; use only when a continuous
    stand-in is explicitly wanted.
    """

    def p_of(x: float) -> float:
        if x in zg._index:
            return zg.p_of(x)
        if not zg.grid[0] <= x <= zg.grid[-1]:
            raise InputError(f"stimulus {x!r} is outside the grid range")
        i = bisect.bisect_left(zg.grid, x)
        x0, x1 = zg.grid[i - 1], zg.grid[i]
        p0, p1 = zg.p[i - 1], zg.p[i]
        return p0 + (p1 - p0) * (x - x0) / (x1 - x0)

    return BernoulliSource(p_of, seed)


def wilson_interval(successes: int, trials: int) -> tuple[float, float]:
    """95% Wilson score interval; exact 0/1 endpoints at unanimous samples."""
    if trials < 1:
        raise InputError("at least one trial is required")
    if not 0 <= successes <= trials:
        raise InputError("success count outside [0, trials]")
    n = float(trials)
    p_hat = successes / n
    z2 = _Z95 * _Z95
    denom = 1.0 + z2 / n
    center = (p_hat + z2 / (2.0 * n)) / denom
    half = (_Z95 / denom) * math.sqrt(
        p_hat * (1.0 - p_hat) / n + z2 / (4.0 * n * n)
    )
    lo = 0.0 if successes == 0 else max(0.0, center - half)
    hi = 1.0 if successes == trials else min(1.0, center + half)
    return (lo, hi)


@dataclass(frozen=True)
class PEstimate:
    """Frequency estimate of an r1 probability with its Wilson interval."""

    p_hat: float
    interval: tuple[float, float]
    trials: int


def estimate_p(source, x: float, trials: int) -> PEstimate:
    """Query the source `trials` times at x and estimate its r1 probability."""
    if trials < 1:
        raise InputError("at least one trial is required")
    successes = sum(1 for _ in range(trials) if source.query(x) == R1)
    return PEstimate(successes / trials, wilson_interval(successes, trials), trials)


def discretize(zg: ZoraGrid) -> list[tuple[float, str]]:
    """Round the grid probabilities to a two-response classification.

    Stimuli with p >= 1/2 go to r1, the rest to r0.  On a grid whose p is
    nondecreasing the result is monotone, i.e. consistent with a single
    threshold rule.
    """
    return [(x, R1 if q >= 0.5 else R0) for x, q in zip(zg.grid, zg.p)]


def check_probabilistic_tolerance(
    zg: ZoraGrid, space: FrechetSpace, value_tolerance: float = 0.0
) -> ToleranceReport:
    """Tolerance of the real-valued probability map over a vicinity structure.

    The space's points must be grid stimuli.  Constancy on a vicinity means
    the spread of p over it does not exceed ``value_tolerance`` (exact
    equality by default, matching the deterministic notion).
    """
    require_valid(space)
    for pt in space.points:
        zg.p_of(pt)
    sys = ResponseSystem(space, set(zg.p), {x: zg.p_of(x) for x in space.points})
    if value_tolerance == 0.0:
        return check_tolerance(sys)
    constant: dict[Point, tuple[int, ...]] = {}
    for pt in space.points:
        good = []
        for i, v in enumerate(space.vicinities_of(pt)):
            values = [zg.p_of(q) for q in v]
            if max(values) - min(values) <= value_tolerance:
                good.append(i)
        constant[pt] = tuple(good)
    holds = all(constant[pt] for pt in space.points)
    cover = None
    if holds:
        cover = MinimalCover(space, tuple(constant[pt][0] for pt in space.points))
    return ToleranceReport(sys, constant, holds, cover)


@dataclass(frozen=True)
class ObservationRecord:
    stimulus: str
    response: str
    time: str | None = None


@dataclass(frozen=True)
class ObservationLog:
    """Raw (stimulus, response[, time]) records from repeated presentations."""

    records: tuple[ObservationRecord, ...]


def parse_observation_log(text: str) -> ObservationLog:
    """Parse delimited text: `stimulus,response[,time]`, one record per line.

    A first line starting with the literal fields `stimulus,response` is
    treated as a header and skipped.  Blank lines are ignored.
    """
    records: list[ObservationRecord] = []
    rows = list(csv.reader(io.StringIO(text)))
    for lineno, row in enumerate(rows, start=1):
        fields = [f.strip() for f in row]
        if not fields or not any(fields):
            continue
        if (
            lineno == 1
            and len(fields) >= 2
            and fields[0].lower() == "stimulus"
            and fields[1].lower() == "response"
        ):
            continue
        if len(fields) == 2:
            records.append(ObservationRecord(fields[0], fields[1]))
        elif len(fields) == 3:
            records.append(ObservationRecord(fields[0], fields[1], fields[2]))
        else:
            raise InputError(f"line {lineno}: expected 2 or 3 fields, got {len(fields)}")
    return ObservationLog(tuple(records))


def load_observation_log(path) -> ObservationLog:
    with open(path, encoding="utf-8") as fh:
        return parse_observation_log(fh.read())


@dataclass(frozen=True)
class SupervenienceVerdict:
    """Per-stimulus classification of observed response behavior.

    ``kind`` is `deterministic` (unanimous responses over at least the
    determinism threshold), `probabilistic` (anything else with two or more
    records, with per-label frequency estimates), or `single-observation`.
    """

    kind: str
    count: int
    response: str | None = None
    estimates: dict[str, PEstimate] | None = None


def assess_supervenience(
    log: ObservationLog, determinism_threshold: int = 20
) -> dict[str, SupervenienceVerdict]:
    """Judge, stimulus by stimulus, whether the log looks consistent.

    Unanimity over fewer than ``determinism_threshold`` records is not
    taken as evidence of consistency; such stimuli are reported as
    probabilistic with a degenerate estimate, since repeated observation
    can corroborate but never prove a deterministic assignment.
    """
    if determinism_threshold < 1:
        raise InputError("determinism threshold must be positive")
    by_stimulus: dict[str, list[str]] = {}
    for rec in log.records:
        by_stimulus.setdefault(rec.stimulus, []).append(rec.response)
    out: dict[str, SupervenienceVerdict] = {}
    for stimulus, responses in by_stimulus.items():
        count = len(responses)
        distinct = set(responses)
        if count == 1:
            out[stimulus] = SupervenienceVerdict("single-observation", 1)
        elif len(distinct) == 1 and count >= determinism_threshold:
            out[stimulus] = SupervenienceVerdict(
                "deterministic", count, response=responses[0]
            )
        else:
            estimates = {}
            for label in sorted(distinct, key=repr):
                successes = sum(1 for r in responses if r == label)
                estimates[label] = PEstimate(
                    successes / count,
                    wilson_interval(successes, count),
                    count,
                )
            out[stimulus] = SupervenienceVerdict(
                "probabilistic", count, estimates=estimates
            )
    return out


@dataclass(frozen=True)
class FoldedSystem:
    """A probability map whose stimuli are (original stimulus, time) pairs.

    Time-varying response probabilities are not probabilities of
    probabilities; tagging each occurrence folds the variation into an
    enlarged stimulus set, and no monotonicity is imposed on the result.
    """

    stimuli: tuple[tuple[Hashable, Hashable], ...]
    p: dict[tuple[Hashable, Hashable], float]

    def time_slice(self, tag: Hashable) -> dict[Hashable, float]:
        return {x: q for (x, t), q in self.p.items() if t == tag}

    def tags(self) -> tuple:
        seen: dict[Hashable, None] = {}
        for _, t in self.stimuli:
            seen.setdefault(t)
        return tuple(seen)


def temporal_fold(
    table: Iterable[tuple[Hashable, Hashable, float]] | Mapping[tuple, float]
) -> FoldedSystem:
    """Turn a (stimulus, time) -> probability table into one flat system."""
    if isinstance(table, Mapping):
        entries = [(x, t, q) for (x, t), q in table.items()]
    else:
        entries = [(x, t, q) for x, t, q in table]
    if not entries:
        raise InputError("table is empty")
    p: dict[tuple[Hashable, Hashable], float] = {}
    order: list[tuple[Hashable, Hashable]] = []
    for x, t, q in entries:
        if not 0.0 <= q <= 1.0:
            raise InputError(f"probability {q!r} is outside [0, 1]")
        key = (x, t)
        if key in p:
            raise InputError(f"duplicate entry for stimulus/time pair {key!r}")
        p[key] = float(q)
        order.append(key)
    return FoldedSystem(tuple(order), p)
