"""Shared generators and independent oracles used across the test suite.

The brute-force functions here deliberately re-derive results from first
principles (exhaustive enumeration over all covers, direct graph search)
so that the library's optimized paths are checked against something that
does not share their code.
"""

from __future__ import annotations

import itertools
import random

from soritic import FrechetSpace, ResponseSystem, ZoraGrid


def random_space(rng: random.Random, max_points: int = 8, max_vicinities: int = 3) -> FrechetSpace:
    """A structurally valid space with random vicinities containing owners."""
    n = rng.randint(2, max_points)
    points = list(range(n))
    vicinities = {}
    for p in points:
        sets = []
        for _ in range(rng.randint(1, max_vicinities)):
            members = {p}
            for q in points:
                if q != p and rng.random() < 0.35:
                    members.add(q)
            sets.append(sorted(members))
        vicinities[p] = sets
    return FrechetSpace(points, vicinities)


def random_system(rng: random.Random, max_points: int = 8, max_vicinities: int = 3,
                  max_responses: int = 3) -> ResponseSystem:
    space = random_space(rng, max_points, max_vicinities)
    k = rng.randint(1, max_responses)
    responses = [f"r{i}" for i in range(k)]
    pi = {p: rng.choice(responses) for p in space.points}
    return ResponseSystem(space, responses, pi)


def random_monotone_grid(rng: random.Random, max_points: int = 12) -> ZoraGrid:
    """Valid grid: strictly increasing stimuli, nondecreasing p from 0 to 1."""
    n = rng.randint(2, max_points)
    grid = sorted(rng.sample([i / 1000 for i in range(1001)], n))
    increments = [rng.random() for _ in range(n - 1)]
    total = sum(increments) or 1.0
    p = [0.0]
    for inc in increments:
        p.append(min(1.0, p[-1] + inc / total))
    p[-1] = 1.0
    return ZoraGrid(grid, p)


def brute_force_all_covers_connected(space: FrechetSpace, x, y) -> bool:
    """Ground truth for v-connectedness by enumerating EVERY cover.

    A cover here is any sub-collection of the distinct vicinity sets that
    includes at least one vicinity of every point; connectivity is plain
    reachability in the cover's intersection graph, from members holding x
    to members holding y.
    """
    distinct: list[frozenset] = []
    for p in space.points:
        for v in space.vicinities_of(p):
            if v not in distinct:
                distinct.append(v)
    per_point = [set(space.vicinities_of(p)) for p in space.points]
    for size in range(1, len(distinct) + 1):
        for combo in itertools.combinations(distinct, size):
            chosen = set(combo)
            if not all(chosen & owned for owned in per_point):
                continue
            if not _chain_exists(list(combo), x, y):
                return False
    return True


def _chain_exists(members: list[frozenset], x, y) -> bool:
    frontier = [v for v in members if x in v]
    seen = set(map(id, frontier))
    while frontier:
        v = frontier.pop()
        if y in v:
            return True
        for w in members:
            if id(w) not in seen and v & w:
                seen.add(id(w))
                frontier.append(w)
    return False


def random_partition_table(rng: random.Random, points: list) -> list[tuple]:
    """Verdict table induced by a random partition (hence an equivalence)."""
    blocks: dict = {}
    for p in points:
        blocks[p] = rng.randint(0, max(1, len(points) // 2))
    rows = []
    for i, a in enumerate(points):
        for b in points[i:]:
            verdict = "same" if blocks[a] == blocks[b] else "different"
            rows.append((a, b, verdict))
    return rows
