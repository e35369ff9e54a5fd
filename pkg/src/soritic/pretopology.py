"""Finite vicinity spaces: closeness, cover enumeration, and connectivity.

A space attaches to every point a nonempty collection of vicinities, each of
which must contain its owner.  Covers select one vicinity per point; two
points are connected when every such selection links them through a chain of
pairwise-overlapping vicinities.  All values are immutable after construction
and safe to share between threads.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import BudgetError, InputError

Point = Hashable


@dataclass(frozen=True)
class Violation:
    """A single well-formedness breach, reported as data rather than raised."""

    point: Point | None
    vicinity_index: int | None
    message: str

    def __str__(self) -> str:
        return self.message


class FrechetSpace:
    """A finite point set with an ordered vicinity collection per point.

    The constructor is permissive: structural invariants (each point owns at
    least one vicinity, each vicinity contains its owner and stays inside the
    point set) are reported by :func:`validate_space`, not enforced here, so
    that defective spaces can be inspected.
    """

    def __init__(
        self,
        points: Sequence[Point],
        vicinities: Mapping[Point, Iterable[Iterable[Point]]],
    ):
        self.points: tuple[Point, ...] = tuple(points)
        self._index: dict[Point, int] = {p: i for i, p in enumerate(self.points)}
        normalized: dict[Point, tuple[frozenset, ...]] = {}
        for owner, sets in vicinities.items():
            normalized[owner] = tuple(frozenset(s) for s in sets)
        self.vicinities: dict[Point, tuple[frozenset, ...]] = normalized

    def index(self, point: Point) -> int:
        try:
            return self._index[point]
        except KeyError:
            raise InputError(f"unknown point {point!r}") from None

    def vicinities_of(self, point: Point) -> tuple[frozenset, ...]:
        if point not in self._index:
            raise InputError(f"unknown point {point!r}")
        return self.vicinities.get(point, ())

    def sort_points(self, points: Iterable[Point]) -> tuple[Point, ...]:
        """Order a subset of points by their declared position."""
        return tuple(sorted(points, key=self.index))

    def __contains__(self, point: Point) -> bool:
        return point in self._index

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FrechetSpace)
            and self.points == other.points
            and self.vicinities == other.vicinities
        )

    def __repr__(self) -> str:
        return f"FrechetSpace({len(self.points)} points)"


def line_space(points: Sequence[Point], two_sided: bool = True) -> FrechetSpace:
    """Grid-style space: each point's single vicinity holds its neighbors.

    With ``two_sided`` the vicinity of the i-th point is {i-1, i, i+1}
    clipped to the ends; otherwise only the right neighbor is included.
    """
    pts = tuple(points)
    vic: dict[Point, list[list[Point]]] = {}
    for i, p in enumerate(pts):
        lo = max(0, i - 1) if two_sided else i
        hi = min(len(pts), i + 2)
        vic[p] = [list(pts[lo:hi])]
    return FrechetSpace(pts, vic)


def validate_space(space: FrechetSpace) -> list[Violation]:
    """Check every structural invariant; an empty list means well-formed."""
    out: list[Violation] = []
    seen = set()
    for p in space.points:
        if p in seen:
            out.append(Violation(p, None, f"duplicate point id {p!r}"))
        seen.add(p)
    point_set = set(space.points)
    for owner in space.vicinities:
        if owner not in point_set:
            out.append(
                Violation(owner, None, f"vicinities declared for unknown point {owner!r}")
            )
    for p in space.points:
        sets = space.vicinities.get(p, ())
        if not sets:
            out.append(Violation(p, None, f"point {p!r} has no vicinity"))
            continue
        for i, v in enumerate(sets):
            if p not in v:
                out.append(
                    Violation(p, i, f"vicinity {i} of {p!r} does not contain {p!r}")
                )
            stray = v - point_set
            if stray:
                out.append(
                    Violation(
                        p,
                        i,
                        f"vicinity {i} of {p!r} contains non-points {sorted(map(repr, stray))}",
                    )
                )
    return out


def require_valid(space: FrechetSpace) -> None:
    """Raise InputError when the space breaks its invariants."""
    violations = validate_space(space)
    if violations:
        summary = "; ".join(str(v) for v in violations[:3])
        raise InputError(f"invalid space: {summary}")


def is_close(space: FrechetSpace, y: Point, x: Point, v_index: int) -> bool:
    """Is y close to x in the sense of x's v_index-th vicinity?

    Closeness is directional: membership of y in a vicinity of x says
    nothing about membership of x in a vicinity of y.
    """
    if y not in space:
        raise InputError(f"unknown point {y!r}")
    sets = space.vicinities_of(x)
    if not 0 <= v_index < len(sets):
        raise InputError(f"point {x!r} has no vicinity with index {v_index}")
    return y in sets[v_index]


def cover_count(space: FrechetSpace) -> int:
    """Number of minimal covers, i.e. the product of vicinity counts."""
    return math.prod(len(space.vicinities.get(p, ())) for p in space.points)


@dataclass(frozen=True)
class MinimalCover:
    """One chosen vicinity per point, identified by per-point indices."""

    space: FrechetSpace
    indices: tuple[int, ...]

    def vicinity_of(self, point: Point) -> frozenset:
        return self.space.vicinities_of(point)[self.indices[self.space.index(point)]]

    def members(self) -> list[tuple[Point, frozenset]]:
        """(owner, vicinity) pairs in point order, duplicates by set removed."""
        out: list[tuple[Point, frozenset]] = []
        seen: set[frozenset] = set()
        for p in self.space.points:
            v = self.vicinity_of(p)
            if v not in seen:
                seen.add(v)
                out.append((p, v))
        return out

    def as_mapping(self) -> dict[Point, int]:
        return {p: self.indices[i] for i, p in enumerate(self.space.points)}


def enumerate_minimal_covers(space: FrechetSpace, cap: int) -> Iterator[MinimalCover]:
    """Yield every one-vicinity-per-point selection exactly once.

    Order is lexicographic over the declared point order and each point's
    vicinity order, so witnesses extracted downstream are reproducible.
    Raises BudgetError up front when the selection count exceeds ``cap``.
    """
    require_valid(space)
    total = cover_count(space)
    if total > cap:
        raise BudgetError(total, cap)
    ranges = [range(len(space.vicinities_of(p))) for p in space.points]

    def _iter() -> Iterator[MinimalCover]:
        for combo in itertools.product(*ranges):
            yield MinimalCover(space, combo)

    return _iter()


@dataclass(frozen=True)
class VicinityChain:
    """A walk V_1 .. V_n of cover vicinities joining x to y.

    Adjacent vicinities overlap, and one shared point per adjacency is
    recorded in ``links``.  ``owners[i]`` names the point whose selection
    contributed ``vicinities[i]``.
    """

    x: Point
    y: Point
    owners: tuple[Point, ...]
    vicinities: tuple[frozenset, ...]
    links: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.vicinities)

    def violations(self) -> list[str]:
        """Self-check; an empty list means the chain is structurally sound."""
        out = []
        if not self.vicinities:
            return ["chain has no vicinities"]
        if self.x not in self.vicinities[0]:
            out.append("x is not in the first vicinity")
        if self.y not in self.vicinities[-1]:
            out.append("y is not in the last vicinity")
        if len(self.links) != len(self.vicinities) - 1:
            out.append("link count does not match adjacency count")
        for i, z in enumerate(self.links):
            if z not in self.vicinities[i] or z not in self.vicinities[i + 1]:
                out.append(f"link {i} is not shared by vicinities {i} and {i + 1}")
        return out


def chain_in_cover(cover: MinimalCover, x: Point, y: Point) -> VicinityChain | None:
    """Shortest chain through the cover from x to y, or None.

    Breadth-first search over the cover's vicinity-intersection graph.
    Starts are all cover members containing x; ties are broken by the
    owners' point order, making the result deterministic.
    """
    space = cover.space
    space.index(x)
    space.index(y)
    members = cover.members()
    starts = [i for i, (_, v) in enumerate(members) if x in v]
    parent: dict[int, int | None] = {i: None for i in starts}
    queue = deque(starts)
    goal = None
    while queue:
        i = queue.popleft()
        if y in members[i][1]:
            goal = i
            break
        for j, (_, v) in enumerate(members):
            if j not in parent and v & members[i][1]:
                parent[j] = i
                queue.append(j)
    if goal is None:
        return None
    path = [goal]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    owners = tuple(members[i][0] for i in path)
    vics = tuple(members[i][1] for i in path)
    links = tuple(
        space.sort_points(vics[i] & vics[i + 1])[0] for i in range(len(vics) - 1)
    )
    return VicinityChain(x, y, owners, vics, links)


@dataclass(frozen=True)
class ConnectivityVerdict:
    """Outcome of the all-covers connectivity check."""

    connected: bool
    sample_chain: VicinityChain | None = None
    witness_cover: MinimalCover | None = None


def v_connected(space: FrechetSpace, x: Point, y: Point, cap: int) -> ConnectivityVerdict:
    """Decide whether x and y are chained in every cover of the space.

    Minimal covers suffice: any cover contains a one-per-point selection,
    and a chain through the selection is a chain through the cover, so the
    universal quantifier is decided exactly by enumerating selections.  The
    witness on the Disconnected side is the first chainless cover in
    enumeration order; the sample chain on the Connected side comes from
    the first cover.
    """
    space.index(x)
    space.index(y)
    sample = None
    for cover in enumerate_minimal_covers(space, cap):
        chain = chain_in_cover(cover, x, y)
        if chain is None:
            return ConnectivityVerdict(False, None, cover)
        if sample is None:
            sample = chain
    return ConnectivityVerdict(True, sample, None)


def _merge_components(masks: Sequence[int]) -> list[int]:
    """Union overlapping bitmasks into disjoint components."""
    comps: list[int] = []
    for m in masks:
        acc = m
        keep = []
        for c in comps:
            if c & acc:
                acc |= c
            else:
                keep.append(c)
        keep.append(acc)
        comps = keep
    return comps


def filter_v_connected(
    space: FrechetSpace, pairs: Sequence[tuple[Point, Point]], cap: int
) -> list[tuple[Point, Point]]:
    """Keep the pairs that are connected in every cover, preserving order.

    Batch form of :func:`v_connected` used when many pairs share one
    enumeration of the cover space; it stops as soon as no pair survives.
    """
    require_valid(space)
    total = cover_count(space)
    if total > cap:
        raise BudgetError(total, cap)
    index = space._index
    bit = {p: 1 << i for p, i in index.items()}

    def mask(v: frozenset) -> int:
        m = 0
        for p in v:
            m |= bit[p]
        return m

    per_point = [
        tuple(mask(v) for v in space.vicinities_of(p)) for p in space.points
    ]
    pair_masks = []
    for a, b in pairs:
        space.index(a)
        space.index(b)
        pair_masks.append(bit[a] | bit[b])
    alive = list(range(len(pairs)))
    for selection in itertools.product(*per_point):
        comps = _merge_components(selection)
        alive = [
            k
            for k in alive
            if any(c & pair_masks[k] == pair_masks[k] for c in comps)
        ]
        if not alive:
            break
    return [pairs[k] for k in alive]
