"""Second-order randomness collapses to first-order randomness.

Handing out coin 1 (always heads) or coin 2 (always tails) with equal
chance is indistinguishable from flipping one fair coin.  In general, a
distribution over response distributions is equivalent to the single
mixed distribution, event by event, and nesting deeper changes nothing.
"""

from soritic import Distribution, Mixture, reduce_mixture, verify_reduction_by_simulation

coin1 = Distribution({"head": 1.0, "tail": 0.0})
coin2 = Distribution({"head": 0.0, "tail": 1.0})
handed = Mixture((coin1, coin2), (0.5, 0.5))

fair = reduce_mixture(handed)
print("reduced:", fair.weights)

deviation = verify_reduction_by_simulation(handed, seed=42, trials=100_000)
print(f"simulated two-stage draw deviates by {deviation:.5f}")

# Nesting: a mixture of mixtures reduces to the same thing as mixing the
# leaves directly with the product weights.
inner_a = Mixture(
    (Distribution({"x": 0.2, "y": 0.8}), Distribution({"x": 0.6, "y": 0.4})),
    (0.5, 0.5),
)
inner_b = Mixture((Distribution({"x": 1.0, "y": 0.0}),), (1.0,))

two_level = reduce_mixture(
    Mixture((reduce_mixture(inner_a), reduce_mixture(inner_b)), (0.75, 0.25))
)
flattened = reduce_mixture(
    Mixture(
        (
            Distribution({"x": 0.2, "y": 0.8}),
            Distribution({"x": 0.6, "y": 0.4}),
            Distribution({"x": 1.0, "y": 0.0}),
        ),
        (0.375, 0.375, 0.25),
    )
)
print("two-level:", two_level.weights)
print("flattened:", flattened.weights)

# Event probabilities agree as well, not just per-label weights.
event = {"x"}
direct = 0.75 * (0.5 * 0.2 + 0.5 * 0.6) + 0.25 * 1.0
print("P[x] direct:", direct, "reduced:", two_level.prob(event))
