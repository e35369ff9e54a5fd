"""Comparative judgments: when stepwise `same` meets endpoint `different`.

Unlike a classification walk, a chain of pairwise-same stimuli with
different-looking endpoints is not contradictory.  It exists exactly when
the matcher fails transitivity; equivalence-relation matchers never admit
one.
"""

from soritic import (
    DigitsMatcher,
    EpsilonMatcher,
    TableMatcher,
    find_comparative_sequence,
    is_equivalence,
)

points = [0.0, 0.4, 0.8]
near = EpsilonMatcher(0.5)
print("0 vs 0.4:", near.judge(0.0, 0.4))
print("0.4 vs 0.8:", near.judge(0.4, 0.8))
print("0 vs 0.8:", near.judge(0.0, 0.8))

seq = find_comparative_sequence(points, near)
print("sequence:", seq.points)

eq = is_equivalence(points, near)
print("equivalence:", eq.holds, "broken by:", eq.violation)

# Prefix matching is transitive, so no sequence can exist on any point set.
prefix = DigitsMatcher(5)
print("prefix equivalence:", is_equivalence([0.123456, 0.123459, 0.5], prefix).holds)
print("prefix sequence:", find_comparative_sequence([0.123456, 0.123459, 0.5], prefix))

# Explicit tables work too, with symmetry filled in automatically.
table = TableMatcher(
    [
        ("dawn", "dusk", "same"),
        ("dusk", "night", "same"),
        ("dawn", "night", "different"),
    ]
)
seq2 = find_comparative_sequence(["dawn", "dusk", "night"], table)
print("table sequence:", seq2.points)
