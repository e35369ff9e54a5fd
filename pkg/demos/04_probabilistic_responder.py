"""An inconsistent responder, viewed through response probabilities.

When answers vary across presentations, the stable object is the chance of
each answer.  A monotone probability grid from 0 to 1 stands in for the
responder; simulation, estimation, rounding back to a hard rule, and the
tolerance check on the probability values itself all run on that grid.
"""

from soritic import (
    ZoraGrid,
    assess_supervenience,
    bernoulli_oracle,
    check_probabilistic_tolerance,
    discretize,
    estimate_p,
    line_space,
    parse_observation_log,
    temporal_fold,
    validate_zora,
)

grid = ZoraGrid(
    [0.0, 0.2, 0.4, 0.6, 0.8, 1.0],
    [0.0, 0.1, 0.3, 0.7, 0.9, 1.0],
)
print("grid violations:", validate_zora(grid))

# Simulate presentations at one stimulus and recover its probability.
source = bernoulli_oracle(grid, seed=2026)
estimate = estimate_p(source, 0.4, trials=50_000)
print(f"p(0.4): true 0.3, estimated {estimate.p_hat:.4f}, CI {estimate.interval}")

# Rounding p at 1/2 turns the probabilistic responder into a hard rule.
print("discretized:", discretize(grid))

# The probability map itself is never tolerant on a connected grid: it
# climbs from 0 to 1, so it cannot be constant on a vicinity of every point.
report = check_probabilistic_tolerance(grid, line_space(grid.grid))
print("p tolerant:", report.holds, "fails at:", report.failing_points())

# Raw observation logs are judged stimulus by stimulus.
log_text = "\n".join(
    ["stimulus,response"]
    + ["a,r1"] * 30
    + ["b,r1"] * 12
    + ["b,r0"] * 28
    + ["c,r0"]
)
verdicts = assess_supervenience(parse_observation_log(log_text))
for stimulus, verdict in sorted(verdicts.items()):
    print(stimulus, "->", verdict.kind)

# Probabilities drifting over time are not probabilities of probabilities:
# tag the occurrences and the drift becomes part of the stimulus.
folded = temporal_fold(
    [(0.4, "monday", 0.3), (0.4, "friday", 0.5), (0.8, "monday", 0.9)]
)
print("folded stimuli:", folded.stimuli)
print("monday slice:", folded.time_slice("monday"))
