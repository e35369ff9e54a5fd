"""Response systems over vicinity spaces and the tolerance/connectedness clash.

A response system is a total assignment of response labels to points; the
totality of that assignment is what makes tolerance and connectedness
expressible at all.  The two can never hold together: from any claimed
tolerant cover and any connected pair with differing responses, a chain can
be extracted on which some vicinity's claimed constancy visibly fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Mapping

from .errors import (
    InputError,
    InternalInconsistencyError,
    NoChainError,
    StaleReportError,
)
from .pretopology import (
    FrechetSpace,
    MinimalCover,
    Point,
    chain_in_cover,
    filter_v_connected,
    require_valid,
    v_connected,
)

Response = Hashable


class ResponseSystem:
    """A vicinity space with a total point-to-response assignment."""

    def __init__(
        self,
        space: FrechetSpace,
        responses: set | frozenset | tuple | list,
        pi: Mapping[Point, Response],
    ):
        self.space = space
        self.responses: frozenset = frozenset(responses)
        self.pi: dict[Point, Response] = dict(pi)
        if not self.responses:
            raise InputError("response set is empty")
        missing = [p for p in space.points if p not in self.pi]
        if missing:
            raise InputError(f"pi is not total: no response for {missing[0]!r}")
        for p, r in self.pi.items():
            if p not in space:
                raise InputError(f"pi assigns a response to unknown point {p!r}")
            if r not in self.responses:
                raise InputError(f"pi({p!r}) = {r!r} is not a declared response")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ResponseSystem)
            and self.space == other.space
            and self.responses == other.responses
            and self.pi == other.pi
        )

    def __repr__(self) -> str:
        return f"ResponseSystem({len(self.space.points)} points, {len(self.responses)} responses)"


@dataclass(frozen=True)
class ToleranceReport:
    """Per-point record of which vicinities the response map is constant on.

    ``holds`` means every point has at least one constant vicinity; the
    tolerant cover then picks the first such vicinity per point.  Reports
    produced by :func:`assert_tolerant_cover` carry ``asserted=True``: the
    cover is a claim supplied by the caller, not a verified fact, though
    ``constant_indices`` always reflects the true scan.
    """

    system: ResponseSystem
    constant_indices: dict[Point, tuple[int, ...]]
    holds: bool
    tolerant_cover: MinimalCover | None
    asserted: bool = False

    def failing_points(self) -> tuple[Point, ...]:
        return tuple(
            p for p in self.system.space.points if not self.constant_indices[p]
        )


def _constant_indices(sys: ResponseSystem) -> dict[Point, tuple[int, ...]]:
    out: dict[Point, tuple[int, ...]] = {}
    for p in sys.space.points:
        constant = []
        for i, v in enumerate(sys.space.vicinities_of(p)):
            values = {sys.pi[q] for q in v}
            if len(values) == 1:
                constant.append(i)
        out[p] = tuple(constant)
    return out


def check_tolerance(sys: ResponseSystem) -> ToleranceReport:
    """Scan every vicinity of every point for response constancy."""
    require_valid(sys.space)
    constant = _constant_indices(sys)
    holds = all(constant[p] for p in sys.space.points)
    cover = None
    if holds:
        cover = MinimalCover(
            sys.space, tuple(constant[p][0] for p in sys.space.points)
        )
    return ToleranceReport(sys, constant, holds, cover)


def assert_tolerant_cover(sys: ResponseSystem, cover: MinimalCover) -> ToleranceReport:
    """Adopt a caller-supplied cover as if it witnessed tolerance.

    This is the entry point for playing devil's advocate: the cover need
    not actually be response-constant, and feeding the resulting report to
    :func:`derive_soritical_contradiction` exposes exactly where the claim
    breaks.
    """
    if cover.space != sys.space:
        raise StaleReportError("cover belongs to a different space")
    for i, p in enumerate(sys.space.points):
        if not 0 <= cover.indices[i] < len(sys.space.vicinities_of(p)):
            raise InputError(f"cover index out of range for point {p!r}")
    return ToleranceReport(sys, _constant_indices(sys), True, cover, asserted=True)


def find_con_witness(sys: ResponseSystem, cap: int) -> tuple[Point, Point] | None:
    """First pair (in point order) with differing responses that is connected
    in every cover; None when no such pair exists."""
    require_valid(sys.space)
    pts = sys.space.points
    differing = [
        (pts[i], pts[j])
        for i in range(len(pts))
        for j in range(i + 1, len(pts))
        if sys.pi[pts[i]] != sys.pi[pts[j]]
    ]
    if not differing:
        return None
    survivors = filter_v_connected(sys.space, differing, cap)
    return survivors[0] if survivors else None


@dataclass(frozen=True)
class SoriticalChain:
    """A point walk with its responses and the adjacency where they differ.

    ``violating_link`` indexes the first adjacent pair with unequal
    responses; both points of that pair lie in ``violated_vicinity``, so a
    constancy claim for that vicinity is refuted by inspection.
    """

    points: tuple[Point, ...]
    responses: tuple[Response, ...]
    violating_link: int | None
    violated_vicinity_owner: Point | None = None
    violated_vicinity: frozenset | None = None


def derive_soritical_contradiction(
    sys: ResponseSystem,
    report: ToleranceReport,
    x: Point,
    y: Point,
    cap: int | None = None,
) -> SoriticalChain:
    """Extract the walk showing tolerance and connectedness cannot coexist.

    The chain V_1 .. V_n is drawn from the report's cover; the emitted walk
    is x, z_1, .., z_{n-1}, y with each adjacent pair inside one V_i.  Were
    every V_i response-constant, the walk would force pi(x) = pi(y); since
    the endpoints differ, some adjacency must differ, and the vicinity
    hosting it is flagged.  If the cover itself disconnects x from y the
    connectedness claim is refuted instead (NoChainError); when ``cap`` is
    given, the error additionally records whether the pair is connected
    once all covers are considered.
    """
    if report.system != sys:
        raise StaleReportError("tolerance report was computed for a different system")
    if report.tolerant_cover is None:
        raise InputError("report carries no tolerant cover")
    if sys.pi[x] == sys.pi[y]:
        raise InputError(
            f"precondition violated: pi({x!r}) = pi({y!r}) = {sys.pi[x]!r}"
        )
    chain = chain_in_cover(report.tolerant_cover, x, y)
    if chain is None:
        globally = None
        if cap is not None:
            globally = v_connected(sys.space, x, y, cap).connected
        raise NoChainError(x, y, globally)
    walk = (x, *chain.links, y)
    responses = tuple(sys.pi[p] for p in walk)
    for i in range(len(walk) - 1):
        if responses[i] != responses[i + 1]:
            return SoriticalChain(
                walk,
                responses,
                i,
                chain.owners[i],
                chain.vicinities[i],
            )
    raise InternalInconsistencyError(
        "differing endpoints joined by a response-constant walk"
    )


@dataclass(frozen=True)
class NoSoritesVerdict:
    """Which of the two soritical premises fails for a given system.

    ``kind`` is one of ``tolerance_fails``, ``con_fails``, ``both_fail``.
    The fourth combination (both premises holding) is impossible and raises
    instead of being represented.
    """

    kind: str
    tolerance_failures: tuple[Point, ...] = field(default=())
    con_witness: tuple[Point, Point] | None = None


def assert_no_sorites(sys: ResponseSystem, cap: int) -> NoSoritesVerdict:
    """Classify the system by which premise blocks a soritical sequence."""
    report = check_tolerance(sys)
    witness = find_con_witness(sys, cap)
    if report.holds and witness is not None:
        raise InternalInconsistencyError(
            "tolerance and connectedness verified simultaneously"
        )
    if report.holds:
        return NoSoritesVerdict("con_fails")
    if witness is None:
        return NoSoritesVerdict("both_fail", report.failing_points())
    return NoSoritesVerdict("tolerance_fails", report.failing_points(), witness)
