"""Same/different matchers over stimulus pairs and comparative sequences.

A comparative soritical sequence is a walk whose adjacent members are judged
`same` while its endpoints are judged `different`.  Nothing contradictory
there: such walks exist exactly when the matcher fails transitivity, and
never when it is an equivalence relation.
"""

from __future__ import annotations

import csv
import io
from collections import deque
from dataclasses import dataclass
from decimal import ROUND_FLOOR, Decimal
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import InputError

SAME = "same"
DIFFERENT = "different"

Stimulus = Hashable


class EpsilonMatcher:
    """Numbers are `same` when they differ by no more than epsilon."""

    def __init__(self, epsilon: float):
        if epsilon < 0:
            raise InputError("epsilon must be nonnegative")
        self.epsilon = float(epsilon)

    def judge(self, x, y) -> str:
        return SAME if abs(float(x) - float(y)) <= self.epsilon else DIFFERENT


class DigitsMatcher:
    """Numbers are `same` when their first k decimal digits agree.

    Comparison truncates the exact decimal expansion of each value after k
    fractional digits, using the terminating form of the expansion (0.5
    reads as 0.50000.., never 0.49999..), and requires equal integer parts.
    """

    def __init__(self, k: int):
        if k < 1:
            raise InputError("at least one digit must be compared")
        self.k = int(k)
        self._scale = Decimal(10) ** self.k

    def _truncate(self, x) -> int:
        d = Decimal(float(x))
        if d < 0:
            raise InputError(f"digit matching is defined for nonnegative values, got {x!r}")
        return int((d * self._scale).to_integral_value(rounding=ROUND_FLOOR))

    def judge(self, x, y) -> str:
        return SAME if self._truncate(x) == self._truncate(y) else DIFFERENT


class TableMatcher:
    """Explicit verdict table over a declared point set.

    Symmetry is auto-completed; conflicting entries (in either order) are
    rejected.  Missing diagonal entries default to `same`, but an explicit
    (x, x, different) entry is honored, allowing broken reflexivity to be
    represented.  Judging a pair the table does not determine is an error.
    """

    def __init__(
        self,
        pairs: Iterable[tuple[Stimulus, Stimulus, str]],
        points: Sequence[Stimulus] | None = None,
    ):
        self._table: dict[tuple[Stimulus, Stimulus], str] = {}
        declared: dict[Stimulus, None] = {}
        for x, y, verdict in pairs:
            if verdict not in (SAME, DIFFERENT):
                raise InputError(f"unknown verdict {verdict!r}")
            for key in ((x, y), (y, x)):
                if key in self._table and self._table[key] != verdict:
                    raise InputError(f"conflicting verdicts for pair {key!r}")
                self._table[key] = verdict
            declared.setdefault(x)
            declared.setdefault(y)
        self.points: tuple[Stimulus, ...] = (
            tuple(points) if points is not None else tuple(declared)
        )

    def judge(self, x, y) -> str:
        if x == y and (x, x) not in self._table:
            return SAME
        try:
            return self._table[(x, y)]
        except KeyError:
            raise InputError(f"table matcher has no verdict for pair ({x!r}, {y!r})") from None


Matcher = EpsilonMatcher | DigitsMatcher | TableMatcher


def make_matcher(spec: Mapping) -> Matcher:
    """Build a matcher from a declarative spec dict.

    Kinds: {"kind": "epsilon", "epsilon": e}, {"kind": "digits", "k": n},
    {"kind": "table", "pairs": [[x, y, verdict], ..], "points": [..]?}.
    """
    kind = spec.get("kind")
    if kind == "epsilon":
        if "epsilon" not in spec:
            raise InputError("epsilon matcher needs an `epsilon` field")
        return EpsilonMatcher(spec["epsilon"])
    if kind == "digits":
        if "k" not in spec:
            raise InputError("digits matcher needs a `k` field")
        return DigitsMatcher(spec["k"])
    if kind == "table":
        if "pairs" not in spec:
            raise InputError("table matcher needs a `pairs` field")
        pairs = [(x, y, verdict) for x, y, verdict in spec["pairs"]]
        return TableMatcher(pairs, spec.get("points"))
    raise InputError(f"unknown matcher kind {kind!r}")


def parse_matcher_table(text: str) -> TableMatcher:
    """Parse delimited text: `x,y,same|different`, one pair per line.

    When every stimulus token parses as a float, all of them are read as
    floats so they compare equal to numeric point lists; otherwise they are
    kept as strings.
    """
    rows = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        fields = [f.strip() for f in row]
        if not fields or not any(fields):
            continue
        if len(fields) != 3:
            raise InputError(f"line {lineno}: expected 3 fields, got {len(fields)}")
        rows.append(fields)
    tokens = [f for x, y, _ in rows for f in (x, y)]

    def _all_float() -> bool:
        try:
            for t in tokens:
                float(t)
            return True
        except ValueError:
            return False

    convert = float if _all_float() else str
    return TableMatcher([(convert(x), convert(y), verdict) for x, y, verdict in rows])


def load_matcher_table(path) -> TableMatcher:
    with open(path, encoding="utf-8") as fh:
        return parse_matcher_table(fh.read())


@dataclass(frozen=True)
class ComparativeSequence:
    """Points judged `same` adjacently but `different` end to end."""

    points: tuple[Stimulus, ...]

    def violations(self, matcher: Matcher) -> list[str]:
        """Replay the matcher to confirm the sequence's defining property."""
        out = []
        if len(self.points) < 3:
            out.append("sequence has fewer than three points")
            return out
        for i in range(len(self.points) - 1):
            if matcher.judge(self.points[i], self.points[i + 1]) != SAME:
                out.append(f"adjacent pair {i} is not judged same")
        if matcher.judge(self.points[0], self.points[-1]) != DIFFERENT:
            out.append("endpoints are not judged different")
        return out


def find_comparative_sequence(
    points: Sequence[Stimulus], m: Matcher
) -> ComparativeSequence | None:
    """Shortest walk that is `same` stepwise yet `different` end to end.

    Breadth-first search in the same-graph from every start, with ties
    broken by position in the given point list.  Returns None when no
    differing pair is joined by a same-chain, in particular whenever the
    matcher is an equivalence relation.
    """
    if not points:
        raise InputError("point list is empty")
    n = len(points)
    verdict = [[m.judge(points[i], points[j]) for j in range(n)] for i in range(n)]
    best: tuple[int, tuple[int, ...]] | None = None
    for s in range(n):
        parent: dict[int, int | None] = {s: None}
        queue = deque([s])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j != i and j not in parent and verdict[i][j] == SAME:
                    parent[j] = i
                    queue.append(j)
        for t in range(n):
            if t == s or t not in parent or verdict[s][t] != DIFFERENT:
                continue
            path = [t]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            path.reverse()
            key = (len(path), tuple(path))
            if best is None or key < best:
                best = key
    if best is None:
        return None
    return ComparativeSequence(tuple(points[i] for i in best[1]))


@dataclass(frozen=True)
class EquivalenceViolation:
    """The first reflexivity, symmetry, or transitivity breach found."""

    kind: str
    points: tuple[Stimulus, ...]


@dataclass(frozen=True)
class EquivalenceReport:
    holds: bool
    violation: EquivalenceViolation | None = None


def is_equivalence(points: Sequence[Stimulus], m: Matcher) -> EquivalenceReport:
    """Check reflexivity, symmetry, and transitivity of `same` on the points."""
    n = len(points)
    for i in range(n):
        if m.judge(points[i], points[i]) != SAME:
            return EquivalenceReport(
                False, EquivalenceViolation("reflexive", (points[i],))
            )
    for i in range(n):
        for j in range(i + 1, n):
            if m.judge(points[i], points[j]) != m.judge(points[j], points[i]):
                return EquivalenceReport(
                    False, EquivalenceViolation("symmetric", (points[i], points[j]))
                )
    for i in range(n):
        for j in range(n):
            if i == j or m.judge(points[i], points[j]) != SAME:
                continue
            for k in range(n):
                if k in (i, j):
                    continue
                if (
                    m.judge(points[j], points[k]) == SAME
                    and m.judge(points[i], points[k]) != SAME
                ):
                    return EquivalenceReport(
                        False,
                        EquivalenceViolation(
                            "transitive", (points[i], points[j], points[k])
                        ),
                    )
    return EquivalenceReport(True)
