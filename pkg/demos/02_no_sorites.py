"""Why a consistent classifier can never be trapped by a soritical chain.

Take a graded stimulus line and a two-response classifier with a cut
somewhere in the middle.  Either the classifier's responses change inside
some vicinity (tolerance fails, exactly at the cut) or the stimuli are not
all chained to each other (connectedness fails).  Claiming both at once is
refutable by construction, and the refutation is a concrete walk.
"""

from soritic import (
    NoChainError,
    ResponseSystem,
    assert_no_sorites,
    assert_tolerant_cover,
    check_tolerance,
    derive_soritical_contradiction,
    enumerate_minimal_covers,
    find_con_witness,
    line_space,
)

space = line_space(list(range(10)))
pi = {p: ("short" if p < 6 else "tall") for p in space.points}
system = ResponseSystem(space, ["short", "tall"], pi)

report = check_tolerance(system)
print("tolerant:", report.holds)
print("tolerance fails at:", report.failing_points())

witness = find_con_witness(system, budget := 10_000)
print("connected differing pair:", witness)

verdict = assert_no_sorites(system, budget)
print("verdict:", verdict.kind)

# Play devil's advocate: insist the neighbor cover is response-constant and
# derive the soritical walk anyway.  The walk pinpoints the vicinity whose
# claimed constancy is false.
cover = next(enumerate_minimal_covers(space, budget))
claimed = assert_tolerant_cover(system, cover)
chain = derive_soritical_contradiction(system, claimed, 0, 9, cap=budget)
print("walk:", chain.points)
print("responses:", chain.responses)
print("breaks at step:", chain.violating_link)
print("inside vicinity:", sorted(chain.violated_vicinity))

# On a space whose vicinities are all singletons, the same claim fails for
# the other reason: the cover cannot chain distinct points at all.
from soritic import FrechetSpace

islands = FrechetSpace([0, 1], {0: [[0]], 1: [[1]]})
sys2 = ResponseSystem(islands, ["short", "tall"], {0: "short", 1: "tall"})
claimed2 = assert_tolerant_cover(sys2, next(enumerate_minimal_covers(islands, 10)))
try:
    derive_soritical_contradiction(sys2, claimed2, 0, 1, cap=10)
except NoChainError as e:
    print("no chain:", e)
