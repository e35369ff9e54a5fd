"""Locating a classifier's cut point by asking it questions.

A consistent two-response rule on [0,1] has a boundary v.  Probing dyadic
points halves the uncertainty each step: after n answers the estimate is
within 2^-n of v, whichever side of the boundary the rule assigns to v
itself.  And staying below v forever is easy: step half the remaining gap.
"""

from soritic import (
    ReplayOracle,
    RuleOracle,
    ThresholdRule,
    UniformRuleDistribution,
    estimate_boundary,
    sample_rule,
    stay_below_sequence,
)

rule = ThresholdRule(1 / 3, "r1")
oracle = RuleOracle(rule)
trace = estimate_boundary(oracle, 20)
print("estimate:", trace.estimate)
print("true boundary:", rule.v)
print("error:", abs(trace.estimate - rule.v), "<= 2^-20:", 2**-20)
print("probes used:", trace.oracle_calls)

# The same estimator runs against a recorded probe log instead of a live
# rule; only the recorded answers matter.
log = [(0.5, "r1"), (0.25, "r1"), (0.125, "r0"), (0.1875, "r0"), (0.21875, "r0")]
replayed = estimate_boundary(ReplayOracle(log), 5)
print("replayed estimate:", replayed.estimate)

# An increasing sequence that never reaches the boundary, however many
# terms are taken: each step is half the gap that remains.
seq = stay_below_sequence(1.0, 0.0, 6)
print("stay-below:", [float(x) for x in seq])
tail = stay_below_sequence(0.5, 0.4999, 50)
print("50 steps from 0.4999 still below 0.5:", all(x < 0.5 for x in tail))

# Nothing privileges any particular cut.  Making a rule is a draw from
# whatever distribution the rule-makers have, and seeding the draw makes
# their choice reproducible.
dist = UniformRuleDistribution()
for seed in (1, 2, 3):
    r = sample_rule(dist, seed)
    print(f"seed {seed}: v={r.v:.6f} boundary side={r.boundary_response}")
