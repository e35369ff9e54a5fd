"""Vicinity spaces, covers, and chains.

A space attaches senses of closeness (vicinities) to each point.  Covers
pick one vicinity per point; connectivity asks whether every cover chains
two points through overlapping vicinities.  This walk-through builds a few
small spaces and shows chains, witnesses, and the effect of the adversary's
choices.
"""

from soritic import (
    FrechetSpace,
    chain_in_cover,
    enumerate_minimal_covers,
    is_close,
    line_space,
    v_connected,
    validate_space,
)

# A five-point line where each point's single vicinity holds its neighbors.
space = line_space([0, 1, 2, 3, 4])
print("violations:", validate_space(space))
print("2 close to 1 (vicinity 0 of 1):", is_close(space, 2, 1, 0))

# Closeness is directional.  With right-neighbor vicinities, the successor
# is close to its predecessor but not the other way around.
right = FrechetSpace([0, 1, 2], {0: [[0, 1]], 1: [[1, 2]], 2: [[2]]})
print("1 close to 0:", is_close(right, 1, 0, 0))
print("0 close to 1:", is_close(right, 0, 1, 0))

# The line has a single cover, and every pair is chained through it.
cover = next(enumerate_minimal_covers(space, 100))
chain = chain_in_cover(cover, 0, 4)
print("chain 0..4 via:", [sorted(v) for v in chain.vicinities])
print("links:", chain.links)

# On a right-neighbor line, the middle point's vicinity is the only bridge.
# Give it a second, self-only vicinity and the adversary can cut the chain:
# one cover now fails, so the pair is no longer connected.
split = FrechetSpace(
    [0, 1, 2, 3, 4],
    {
        0: [[0, 1]],
        1: [[1, 2]],
        2: [[2, 3], [2]],
        3: [[3, 4]],
        4: [[4]],
    },
)
verdict = v_connected(split, 0, 4, 100)
print("still connected:", verdict.connected)
print("defeating cover:", verdict.witness_cover.as_mapping())
